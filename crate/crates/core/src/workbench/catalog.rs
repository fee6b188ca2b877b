//! Built-in groups given by faithful permutation representations.
//!
//! Labels: `Cn`, `Dn` (dihedral of order `2n`), `Sn`, `An`, `Q8`, `Q16`,
//! `Q32`, `SL23`, `Frob(p:q)`, `Heis(p)`, direct products `AxB` (or `A×B`)
//! and powers `A^k`.

use crate::error::{Error, Result};
use crate::modular::{is_prime, PrimeField};
use crate::perm::{GroupTable, Permutation, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    File(String),
}

/// A named generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn table(&self, cap: usize) -> Result<GroupTable> {
        GroupTable::generate(self.degree, &self.generators, cap)
    }
}

/// The default sweep catalog, in sweep order.
pub const BUILTIN_LABELS: &[&str] = &[
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "C8",
    "C9",
    "C10",
    "C12",
    "C16",
    "C2xC2",
    "C2xC4",
    "C2xC2xC2",
    "C3xC3",
    "C4xC4",
    "C2^4",
    "S3",
    "A4",
    "S4",
    "A5",
    "S5",
    "D4",
    "D5",
    "D6",
    "D7",
    "D8",
    "D10",
    "D12",
    "Q8",
    "Q16",
    "Q32",
    "SL23",
    "Frob(5:4)",
    "Frob(7:3)",
    "Frob(7:6)",
    "Frob(11:5)",
    "Frob(13:3)",
    "Frob(13:4)",
    "Heis(3)",
    "Heis(5)",
    "S3xC2",
    "S3xC3",
    "S3xS3",
    "A4xC2",
    "Q8xC2",
    "D4xC2",
    "S4xC2",
    "A5xC2",
    "Q8xC3",
    "Frob(7:3)xC2",
];

pub fn builtin(label: &str) -> Result<CatalogEntry> {
    let (degree, generators) = parse_label(label.trim())?;
    Ok(CatalogEntry {
        label: label.trim().to_string(),
        degree,
        generators,
        provenance: Provenance::Builtin,
    })
}

/// Shorthand for `builtin(label)?.table(DEFAULT_ORDER_CAP)`.
pub fn builtin_table(label: &str) -> Result<GroupTable> {
    builtin(label)?.table(DEFAULT_ORDER_CAP)
}

fn unknown(label: &str) -> Error {
    Error::UnknownLabel(label.to_string())
}

fn bad(msg: String) -> Error {
    Error::BadParameter(msg)
}

/// Splits at top-level product signs, ignoring those inside parentheses.
fn split_product(label: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in label.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' | '×' if depth == 0 => {
                parts.push(&label[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&label[start..]);
    parts
}

fn parse_label(label: &str) -> Result<(usize, Vec<Permutation>)> {
    if label.is_empty() || label.len() > 200 {
        return Err(unknown(label));
    }
    let parts = split_product(label);
    if parts.len() > 1 {
        if parts.iter().any(|p| p.is_empty()) {
            return Err(unknown(label));
        }
        let factors = parts.iter().map(|p| parse_label(p)).collect::<Result<Vec<_>>>()?;
        return direct_product(&factors);
    }
    if let Some((base, k)) = label.rsplit_once('^') {
        let k: usize = k.parse().map_err(|_| unknown(label))?;
        if k == 0 || k > 8 {
            return Err(bad(format!("power {k} out of range in `{label}`")));
        }
        let factor = parse_label(base)?;
        return direct_product(&vec![factor; k]);
    }
    parse_atom(label)
}

fn number(s: &str, label: &str) -> Result<u64> {
    if s.is_empty() || s.len() > 6 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown(label));
    }
    s.parse().map_err(|_| unknown(label))
}

fn parse_atom(label: &str) -> Result<(usize, Vec<Permutation>)> {
    if label == "SL23" {
        return Ok(sl23());
    }
    if let Some(args) = label.strip_prefix("Frob(").and_then(|r| r.strip_suffix(')')) {
        let (p, q) = args.split_once(':').ok_or_else(|| unknown(label))?;
        return frobenius(number(p.trim(), label)?, number(q.trim(), label)?);
    }
    if let Some(arg) = label.strip_prefix("Heis(").and_then(|r| r.strip_suffix(')')) {
        return heisenberg(number(arg.trim(), label)?);
    }
    let split = label.find(|c: char| c.is_ascii_digit()).ok_or_else(|| unknown(label))?;
    let (family, n) = label.split_at(split);
    let n = number(n, label)?;
    match family {
        "C" => cyclic(n),
        "D" => dihedral(n),
        "S" => symmetric(n),
        "A" => alternating(n),
        "Q" => quaternion(n),
        _ => Err(unknown(label)),
    }
}

fn check_degree(n: u64, max: u64, what: &str) -> Result<usize> {
    if n == 0 || n > max {
        return Err(bad(format!("{what} parameter {n} out of range 1..={max}")));
    }
    Ok(n as usize)
}

fn cycle(degree: usize, points: Vec<usize>) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

fn cyclic(n: u64) -> Result<(usize, Vec<Permutation>)> {
    let n = check_degree(n, 1000, "cyclic")?;
    if n == 1 {
        return Ok((1, vec![]));
    }
    Ok((n, vec![cycle(n, (0..n).collect())]))
}

fn dihedral(n: u64) -> Result<(usize, Vec<Permutation>)> {
    if n < 3 {
        return Err(bad(format!("dihedral D{n} needs n ≥ 3")));
    }
    let n = check_degree(n, 1000, "dihedral")?;
    let rotation = cycle(n, (0..n).collect());
    let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    Ok((n, vec![rotation, reflection]))
}

fn symmetric(n: u64) -> Result<(usize, Vec<Permutation>)> {
    let n = check_degree(n, 12, "symmetric")?;
    if n == 1 {
        return Ok((1, vec![]));
    }
    Ok((n, vec![cycle(n, vec![0, 1]), cycle(n, (0..n).collect())]))
}

fn alternating(n: u64) -> Result<(usize, Vec<Permutation>)> {
    let n = check_degree(n, 12, "alternating")?;
    Ok((n, (2..n).map(|k| cycle(n, vec![0, 1, k])).collect()))
}

/// Right regular representation of a group on `0..n` given its product.
fn regular(n: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Result<(usize, Vec<Permutation>)> {
    let perms = gens
        .iter()
        .map(|&s| Permutation::from_images((0..n).map(|x| mul(x, s) as u32).collect()))
        .collect::<Result<_>>()?;
    Ok((n, perms))
}

/// `⟨a, b | a^{2m}, b² = a^m, b⁻¹ab = a⁻¹⟩` with `a^i b^j` at index `i + 2m·j`.
fn quaternion(order: u64) -> Result<(usize, Vec<Permutation>)> {
    if !matches!(order, 8 | 16 | 32) {
        return Err(bad(format!(
            "generalized quaternion Q{order} must have order 8, 16 or 32"
        )));
    }
    let m = (order / 4) as usize;
    let n2 = 2 * m;
    let mul = |x: usize, y: usize| {
        let (i, j) = (x % n2, x / n2);
        let (k, l) = (y % n2, y / n2);
        let twisted = if j == 0 { k } else { n2 - k };
        let extra = if j == 1 && l == 1 { m } else { 0 };
        (i + twisted + extra) % n2 + n2 * ((j + l) % 2)
    };
    regular(order as usize, &[1, n2], mul)
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F_3²`.
fn sl23() -> (usize, Vec<Permutation>) {
    let vectors: Vec<(u32, u32)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let img = ((x * m[0][0] + y * m[1][0]) % 3, (x * m[0][1] + y * m[1][1]) % 3);
                vectors.iter().position(|&v| v == img).unwrap() as u32
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrix")
    };
    (8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

/// Affine maps `x ↦ ax + b` on `F_p` with `a` in the order-`q` subgroup of `F_p^×`.
fn frobenius(p: u64, q: u64) -> Result<(usize, Vec<Permutation>)> {
    if !is_prime(p) || p > 1000 {
        return Err(bad(format!("Frob({p}:{q}) needs a prime p ≤ 1000")));
    }
    if q < 2 || !(p - 1).is_multiple_of(q) {
        return Err(bad(format!("Frob({p}:{q}) needs q > 1 dividing p − 1")));
    }
    let f = PrimeField::new(p);
    let w = f.pow(f.primitive_root(), (p - 1) / q);
    let n = p as usize;
    let translation = cycle(n, (0..n).collect());
    let scaling = Permutation::from_images((0..p).map(|x| f.mul(w, x) as u32).collect())?;
    Ok((n, vec![translation, scaling]))
}

/// Upper unitriangular `3×3` matrices over `F_p`, `p` odd, in the regular
/// representation on triples `(a, b, c)`.
fn heisenberg(p: u64) -> Result<(usize, Vec<Permutation>)> {
    if !is_prime(p) || p == 2 || p > 7 {
        return Err(bad(format!("Heis({p}) needs an odd prime p ≤ 7")));
    }
    let p = p as usize;
    let decode = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let mul = |x: usize, y: usize| {
        let (a, b, c) = decode(x);
        let (d, e, f) = decode(y);
        ((a + d) % p) * p * p + ((b + e) % p) * p + (c + f + a * e) % p
    };
    regular(p * p * p, &[p * p, p], mul)
}

fn direct_product(factors: &[(usize, Vec<Permutation>)]) -> Result<(usize, Vec<Permutation>)> {
    let degree: usize = factors.iter().map(|f| f.0).sum();
    if degree > 4096 {
        return Err(bad(format!("direct product degree {degree} too large")));
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for (d, fgens) in factors {
        for g in fgens {
            let images = (0..degree)
                .map(|i| {
                    if i >= offset && i < offset + d {
                        (offset + g.apply(i - offset)) as u32
                    } else {
                        i as u32
                    }
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        offset += d;
    }
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_frobenius_with_kernel, sylow_subgroup};

    #[test]
    fn family_orders() {
        let cases = [
            ("C1", 1),
            ("C7", 7),
            ("D4", 8),
            ("D12", 24),
            ("S3", 6),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("Q16", 16),
            ("Q32", 32),
            ("SL23", 24),
            ("Frob(7:3)", 21),
            ("Frob(5:4)", 20),
            ("Heis(3)", 27),
            ("Heis(5)", 125),
            ("S3xC2", 12),
            ("C2^4", 16),
            ("Q8×C3", 24),
            ("A5xC2", 120),
        ];
        for (label, order) in cases {
            assert_eq!(builtin_table(label).unwrap().order(), order, "{label}");
        }
    }

    #[test]
    fn builtin_catalog_regenerates() {
        for label in BUILTIN_LABELS {
            let a = builtin_table(label).unwrap();
            let b = builtin_table(label).unwrap();
            assert_eq!(a.elements(), b.elements(), "{label}");
        }
    }

    #[test]
    fn spec_examples() {
        let s3 = builtin("S3").unwrap();
        assert_eq!(s3.degree, 3);
        let f21 = builtin_table("Frob(7:3)").unwrap();
        assert!(is_frobenius_with_kernel(&f21, &sylow_subgroup(&f21, 7).unwrap()));
        let q8 = builtin_table("Q8").unwrap();
        let involutions = (0..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn heisenberg_has_prime_exponent() {
        let h = builtin_table("Heis(3)").unwrap();
        assert!((1..h.order()).all(|x| h.element_order(x) == 3));
        assert!(!h.is_abelian());
    }

    #[test]
    fn quaternion_groups_have_one_involution() {
        for label in ["Q16", "Q32"] {
            let g = builtin_table(label).unwrap();
            assert_eq!((0..g.order()).filter(|&x| g.element_order(x) == 2).count(), 1);
        }
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(builtin("Frob(6:2)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("Frob(7:4)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("D2"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("Q12"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("M11"), Err(Error::UnknownLabel(_))));
        assert!(matches!(builtin("C2x"), Err(Error::UnknownLabel(_))));
        assert!(matches!(builtin(""), Err(Error::UnknownLabel(_))));
    }
}
