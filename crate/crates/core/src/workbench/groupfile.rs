//! Plain-text group files.
//!
//! ```text
//! # Sym(3)
//! degree 3
//! (1,2)
//! (1,2,3)
//! ```
//!
//! The first non-comment line is `degree N`; each further line is one
//! generator in 1-based disjoint-cycle notation. `()` is the identity. A
//! file without generators describes the trivial group.

use std::path::Path;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::workbench::catalog::{CatalogEntry, Provenance};

/// Upper bound on the declared degree.
pub const MAX_DEGREE: usize = 4096;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_group_file(path: &Path) -> Result<CatalogEntry> {
    let text = std::fs::read_to_string(path)?;
    let name = path.display().to_string();
    let mut entry = parse_group_text(&text)?;
    entry.label = format!("file:{name}");
    entry.provenance = Provenance::File(name);
    Ok(entry)
}

/// Parses group-file text. The label is `file:` until a path is attached.
pub fn parse_group_text(text: &str) -> Result<CatalogEntry> {
    let mut degree = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => degree = Some(parse_degree(line, line_no)?),
            Some(n) => generators.push(parse_cycles(line, n, line_no)?),
        }
    }
    let degree = degree.ok_or_else(|| err(text.lines().count().max(1), "missing `degree N` line"))?;
    Ok(CatalogEntry {
        label: "file:".to_string(),
        degree,
        generators,
        provenance: Provenance::File(String::new()),
    })
}

fn parse_degree(line: &str, line_no: usize) -> Result<usize> {
    let mut words = line.split_whitespace();
    if words.next() != Some("degree") {
        return Err(err(line_no, "expected `degree N`"));
    }
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| err(line_no, "degree must be a positive integer"))?;
    if words.next().is_some() {
        return Err(err(line_no, "trailing text after degree"));
    }
    if n == 0 || n > MAX_DEGREE {
        return Err(err(line_no, format!("degree must lie in 1..={MAX_DEGREE}")));
    }
    Ok(n)
}

/// Parses one generator like `(1,2)(3,4,5)` on `n` points.
pub fn parse_cycles(line: &str, n: usize, line_no: usize) -> Result<Permutation> {
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut cycles = Vec::new();
    let mut seen = vec![false; n];
    if rest.is_empty() {
        return Err(err(line_no, "empty generator"));
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err(line_no, "expected `(`"))?;
        let close = body.find(')').ok_or_else(|| err(line_no, "unclosed cycle"))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            let p: usize = tok.parse().map_err(|_| err(line_no, format!("bad point `{tok}`")))?;
            if p == 0 || p > n {
                return Err(err(line_no, format!("point {p} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(err(line_no, format!("point {p} repeated")));
            }
            cycle.push(p - 1);
        }
        cycles.push(cycle);
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| err(line_no, e.to_string()))
}
