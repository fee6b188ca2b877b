//! Exact arithmetic in the ring of cyclotomic integers `Z[ζ_e]`.
//!
//! A [`CycInt`] stores a polynomial in `ζ_e` of degree below `φ(e)`, i.e. its
//! coordinates in the power basis `1, ζ, …, ζ^{φ(e)-1}`. That basis is an
//! integral basis, so a value is a rational integer exactly when every
//! coordinate past the first is zero.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::modular::lcm;

/// Coefficients of `Φ_e`, lowest first, cached per `e`.
pub fn cyclotomic_polynomial(e: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    assert!(e >= 1, "cyclotomic order must be positive");
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d);
        num = div_monic_exact(&num, &phi_d);
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(e, p.clone());
    p
}

fn div_monic_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Reduces a polynomial in `ζ_e` modulo the monic `Φ_e`.
fn reduce(mut poly: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    for k in (deg..poly.len()).rev() {
        let c = poly[k];
        if c != 0 {
            for (j, &pj) in phi.iter().enumerate() {
                poly[k - deg + j] -= c * pj;
            }
        }
    }
    poly.resize(deg, 0);
    poly
}

/// An element of `Z[ζ_e]` in canonical power-basis form.
#[derive(Clone, Serialize, Deserialize)]
pub struct CycInt {
    e: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn from_int(e: u32, n: i64) -> Self {
        let deg = cyclotomic_polynomial(e).len() - 1;
        let mut coeffs = vec![0; deg];
        coeffs[0] = n;
        CycInt { e, coeffs }
    }

    pub fn zero(e: u32) -> Self {
        Self::from_int(e, 0)
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    /// `ζ_e^k`.
    pub fn root(e: u32, k: u64) -> Self {
        let k = (k % e as u64) as usize;
        let mut poly = vec![0i64; k + 1];
        poly[k] = 1;
        CycInt {
            e,
            coeffs: reduce(poly, &cyclotomic_polynomial(e)),
        }
    }

    /// `Σ m_k ζ_e^k`.
    pub fn from_exponent_counts(e: u32, counts: &[i64]) -> Self {
        let mut poly = vec![0i64; e as usize];
        for (k, &m) in counts.iter().enumerate() {
            poly[k % e as usize] += m;
        }
        CycInt {
            e,
            coeffs: reduce(poly, &cyclotomic_polynomial(e)),
        }
    }

    /// Builds a value from power-basis coordinates, which must have length `φ(e)`.
    pub fn from_coeffs(e: u32, coeffs: Vec<i64>) -> Option<Self> {
        (coeffs.len() + 1 == cyclotomic_polynomial(e).len()).then_some(CycInt { e, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Rewrites the value in `Z[ζ_f]` for a multiple `f` of `e`.
    pub fn lift(&self, f: u32) -> CycInt {
        assert!(f.is_multiple_of(self.e), "cannot lift ζ_{} into ζ_{}", self.e, f);
        if f == self.e {
            return self.clone();
        }
        let step = (f / self.e) as usize;
        let mut poly = vec![0i64; f as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            poly[k * step] += c;
        }
        CycInt {
            e: f,
            coeffs: reduce(poly, &cyclotomic_polynomial(f)),
        }
    }

    fn common(&self, other: &CycInt) -> (CycInt, CycInt) {
        if self.e == other.e {
            return (self.clone(), other.clone());
        }
        let f = lcm(self.e as u64, other.e as u64) as u32;
        (self.lift(f), other.lift(f))
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        if self.e == other.e {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
            return CycInt { e: self.e, coeffs };
        }
        let (a, b) = self.common(other);
        a.add(&b)
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        if self.e != other.e {
            let (a, b) = self.common(other);
            return a.mul(&b);
        }
        let n = self.coeffs.len();
        let mut poly = vec![0i64; 2 * n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        CycInt {
            e: self.e,
            coeffs: reduce(poly, &cyclotomic_polynomial(self.e)),
        }
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Complex conjugate: `ζ ↦ ζ^{e-1}`.
    pub fn conj(&self) -> CycInt {
        let e = self.e as usize;
        let mut poly = vec![0i64; e];
        for (k, &c) in self.coeffs.iter().enumerate() {
            poly[(e - k) % e] += c;
        }
        CycInt {
            e: self.e,
            coeffs: reduce(poly, &cyclotomic_polynomial(self.e)),
        }
    }

    /// Galois image under `ζ ↦ ζ^k` for `k` coprime to `e`.
    pub fn galois(&self, k: u64) -> CycInt {
        let e = self.e as usize;
        let mut poly = vec![0i64; e];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[(i * k as usize) % e] += c;
        }
        CycInt {
            e: self.e,
            coeffs: reduce(poly, &cyclotomic_polynomial(self.e)),
        }
    }

    /// `self / n` when the quotient is again a cyclotomic integer.
    pub fn div_exact(&self, n: i64) -> Option<CycInt> {
        if n == 0 || self.coeffs.iter().any(|c| c % n != 0) {
            return None;
        }
        Some(CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c / n).collect(),
        })
    }

    /// Greatest common divisor of the coordinates (0 for the zero value).
    pub fn content(&self) -> i64 {
        self.coeffs
            .iter()
            .fold(0u64, |g, &c| crate::modular::gcd(g, c.unsigned_abs())) as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// Floating-point value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * k as f64 / self.e as f64;
            re += c as f64 * t.cos();
            im += c as f64 * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        if self.e == other.e {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycInt {}

/// Lexicographic on coordinates after lifting to a common order.
impl Ord for CycInt {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialOrd for CycInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integers print plainly; other values as sums of `E(e)^k` terms.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "E({})", self.e)?,
                (1, _) => write!(f, "{a}*E({})", self.e)?,
                (_, 1) => write!(f, "E({})^{k}", self.e)?,
                _ => write!(f, "{a}*E({})^{k}", self.e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
