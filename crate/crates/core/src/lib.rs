//! Exact computations with finite permutation groups: conjugacy classes,
//! subgroup lattices, character tables over cyclotomic integers, and
//! executable forms of coset-conjugacy conditions on subgroup pairs
//! (Camina pairs, conditions F, F±, CI and O, equal-order pairs).
//!
//! Every predicate is an exhaustive scan and every character value is an
//! exact element of `Z[ζ_e]`, so a reported counterexample is always a
//! genuine one.

pub mod chartab;
pub mod conditions;
pub mod cyclotomic;
pub mod error;
pub mod modular;
pub mod perm;
pub mod structure;
pub mod verify;
pub mod workbench;

pub use error::{Error, Result};
pub use perm::{ElementSet, GroupTable, Permutation};
