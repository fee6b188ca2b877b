//! Catalog, group files, report persistence, the character-table cache and
//! the command-line front end.

pub mod cache;
pub mod catalog;
pub mod cli;
pub mod groupfile;
pub mod reports;
