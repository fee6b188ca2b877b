//! Integer helpers and dense linear algebra over a prime field `F_q`.

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n` (n > 0).
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// True for 1, p, p², ….
pub fn is_power_of(n: u64, p: u64) -> bool {
    n > 0 && p_part(n, p) == n
}

/// Extended Euclid on signed integers: returns `(g, x, y)` with `a·x + b·y = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

pub fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

pub fn floor_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Arithmetic in `F_q` for a prime `q < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Self {
        debug_assert!(is_prime(q) && q < (1 << 31));
        PrimeField { q }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.q;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero in F_{}", self.q);
        self.pow(a, self.q - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        let factors = prime_divisors(self.q - 1);
        (2..self.q)
            .find(|&g| factors.iter().all(|&f| self.pow(g, (self.q - 1) / f) != 1))
            .expect("prime field has a primitive root")
    }

    /// Characteristic polynomial `det(xI − A)` of a square matrix, lowest
    /// coefficient first, via reduction to upper Hessenberg form.
    pub fn char_poly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k×k block.
        let mut p: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut next = vec![0u64; m + 1];
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = self.add(next[k + 1], c);
                next[k] = self.sub(next[k], self.mul(h[m - 1][m - 1], c));
            }
            let mut t = 1u64;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in p[m - i - 1].iter().enumerate() {
                    next[k] = self.sub(next[k], self.mul(coef, c));
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    pub fn eval_poly(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_q`, each listed once, in increasing order.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.q).filter(|&x| self.eval_poly(poly, x) == 0).collect()
    }

    /// Basis of the right null space `{v : A v = 0}` of an `r×c` matrix.
    pub fn kernel(&self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let rows = m.len();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(piv, r);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = self.neg(m[row][free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn mat_vec(&self, a: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y))))
            .collect()
    }

    /// Square root of `a` among `1..=bound`, if any.
    pub fn small_sqrt(&self, a: u64, bound: u64) -> Option<u64> {
        (1..=bound).find(|&d| self.mul(d % self.q, d % self.q) == a % self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Determinant by cofactor expansion, used as an independent check of
    /// the Hessenberg characteristic polynomial.
    fn det(f: &PrimeField, a: &[Vec<u64>]) -> u64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for j in 0..n {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = f.mul(a[0][j], det(f, &minor));
            total = if j % 2 == 0 {
                f.add(total, term)
            } else {
                f.sub(total, term)
            };
        }
        total
    }

    #[test]
    fn number_helpers() {
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(p_part(48, 2), 16);
        assert!(is_power_of(1, 3) && is_power_of(27, 3) && !is_power_of(12, 2));
        assert_eq!(ceil_sqrt(6), 3);
        assert_eq!(ceil_sqrt(9), 3);
        assert_eq!(floor_sqrt(8), 2);
        let (g, x, y) = ext_gcd(2, 3);
        assert_eq!((g, 2 * x + 3 * y), (1, 1));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(PrimeField::new(7).primitive_root(), 3);
        assert_eq!(PrimeField::new(13).primitive_root(), 2);
    }

    #[test]
    fn char_poly_matches_cofactor_determinant() {
        let f = PrimeField::new(101);
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) % 101
        };
        for n in 1..6 {
            for _ in 0..5 {
                let a: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
                let poly = f.char_poly(&a);
                assert_eq!(poly.len(), n + 1);
                for x in [0u64, 1, 5, 77] {
                    let shifted: Vec<Vec<u64>> = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    let d = if i == j { x } else { 0 };
                                    f.sub(d, a[i][j])
                                })
                                .collect()
                        })
                        .collect();
                    assert_eq!(f.eval_poly(&poly, x), det(&f, &shifted));
                }
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = PrimeField::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ker = f.kernel(&a, 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(f.mat_vec(&a, &v).iter().all(|&x| x == 0));
        }
    }
}
