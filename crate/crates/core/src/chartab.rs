//! Complex character tables by the Dixon–Schneider method, plus induction,
//! restriction, inner products and kernels.
//!
//! Central characters are found as common eigenvectors of the class matrices
//! over a prime field `F_q` with `q ≡ 1 (mod exp G)`. Character values are
//! then lifted to [`CycInt`] by counting eigenvalue multiplicities of each
//! class representative's powers.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::modular::{ceil_sqrt, floor_sqrt, gcd, is_prime, lcm, PrimeField};
use crate::perm::{ElementSet, GroupTable};
use crate::structure::{conjugacy_classes, is_normal, ConjClassPartition};

pub const DEFAULT_ORDER_CAP: usize = 2000;
pub const DEFAULT_CLASS_CAP: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartabLimits {
    pub order_cap: usize,
    pub class_cap: usize,
}

impl Default for ChartabLimits {
    fn default() -> Self {
        ChartabLimits {
            order_cap: DEFAULT_ORDER_CAP,
            class_cap: DEFAULT_CLASS_CAP,
        }
    }
}

/// Lcm of all element orders.
pub fn exponent(g: &GroupTable) -> u64 {
    (0..g.order()).fold(1, |acc, x| lcm(acc, g.element_order(x)))
}

/// Least prime `q ≡ 1 (mod e)` with `q > 2·⌈√order⌉`.
pub fn dixon_prime(e: u64, order: u64) -> u64 {
    let bound = 2 * ceil_sqrt(order);
    let mut q = e + 1;
    while q <= bound || !is_prime(q) {
        q += e;
    }
    q
}

/// Class-algebra structure constants: `m[i][j][k]` counts pairs
/// `(x, y) ∈ C_i × C_j` with `xy = z_k` for the fixed representative `z_k`.
pub fn class_matrices(g: &GroupTable, classes: &ConjClassPartition) -> Vec<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut m = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = classes.rep(k);
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            m[classes.class_of(x)][classes.class_of(y)][k] += 1;
        }
    }
    m
}

/// A function on the conjugacy classes of some group, in class order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub values: Vec<CycInt>,
}

impl ClassFunction {
    pub fn constant(classes: usize, e: u32, value: i64) -> Self {
        ClassFunction {
            values: vec![CycInt::from_int(e, value); classes],
        }
    }

    /// Value on the identity class.
    pub fn degree(&self) -> Option<i64> {
        self.values[0].as_integer()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|a| a.scale(k)).collect(),
        }
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(CycInt::conj).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycInt::is_zero)
    }
}

/// An inner product `numerator / denominator` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    pub numerator: CycInt,
    pub denominator: i64,
}

impl InnerProduct {
    pub fn as_integer(&self) -> Option<i64> {
        if self.denominator == 1 {
            self.numerator.as_integer()
        } else {
            None
        }
    }
}

/// Irreducible characters of a group, rows sorted by degree with the
/// trivial character first, then lexicographically by values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub order: usize,
    pub exponent: u32,
    pub class_sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.degree().unwrap_or(0)).collect()
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction::constant(self.class_sizes.len(), self.exponent, 1)
    }

    /// `1_1^G`: `|G|` on the identity, zero elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        let mut f = ClassFunction::constant(self.class_sizes.len(), self.exponent, 0);
        f.values[0] = CycInt::from_int(self.exponent, self.order as i64);
        f
    }

    /// `(1/|G|) Σ_x f(x)·conj(g(x))`, exact.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> InnerProduct {
        let mut sum = CycInt::zero(self.exponent);
        for (c, &size) in self.class_sizes.iter().enumerate() {
            sum = sum.add(&f.values[c].mul(&g.values[c].conj()).scale(size as i64));
        }
        let d = gcd(sum.content() as u64, self.order as u64) as i64;
        let d = if d == 0 { self.order as i64 } else { d };
        InnerProduct {
            numerator: sum.div_exact(d).expect("content divides"),
            denominator: self.order as i64 / d,
        }
    }

    /// Multiplicities `[f, χ_i]`, checked to be nonnegative integers that
    /// reconstruct `f`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.len());
        let mut rebuilt = ClassFunction::constant(self.class_sizes.len(), self.exponent, 0);
        for (i, chi) in self.irreducibles.iter().enumerate() {
            let ip = self.inner_product(f, chi);
            let m = ip.as_integer().filter(|&m| m >= 0).ok_or_else(|| {
                Error::NotACharacter(format!(
                    "multiplicity of irreducible {i} is {:?}/{}",
                    ip.numerator, ip.denominator
                ))
            })?;
            rebuilt = rebuilt.add(&chi.scale(m));
            out.push(m as u64);
        }
        if rebuilt != *f {
            return Err(Error::NotACharacter("not a combination of irreducibles".into()));
        }
        Ok(out)
    }

    /// Exact row and column orthogonality plus `Σ χ(1)² = |G|`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j]);
                if ip.as_integer() != Some((i == j) as i64) {
                    return Err(Error::Internal(format!("rows {i} and {j} are not orthonormal")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let mut s = CycInt::zero(self.exponent);
                for chi in &self.irreducibles {
                    s = s.add(&chi.values[a].mul(&chi.values[b].conj()));
                }
                let expected = if a == b {
                    (self.order / self.class_sizes[a]) as i64
                } else {
                    0
                };
                if s.as_integer() != Some(expected) {
                    return Err(Error::Internal(format!("columns {a} and {b} are not orthogonal")));
                }
            }
        }
        let sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if sq != self.order as i64 {
            return Err(Error::Internal(format!("sum of squared degrees {sq} ≠ {}", self.order)));
        }
        Ok(())
    }
}

/// Character table with the default limits.
pub fn character_table(g: &GroupTable) -> Result<CharacterTable> {
    let classes = conjugacy_classes(g);
    character_table_with(g, &classes, ChartabLimits::default())
}

pub fn character_table_with(
    g: &GroupTable,
    classes: &ConjClassPartition,
    limits: ChartabLimits,
) -> Result<CharacterTable> {
    if g.order() > limits.order_cap || classes.len() > limits.class_cap {
        return Err(Error::CharacterTableLimit {
            order: g.order(),
            classes: classes.len(),
            order_cap: limits.order_cap,
            class_cap: limits.class_cap,
        });
    }
    let e = exponent(g);
    let q = dixon_prime(e, g.order() as u64);
    character_table_mod(g, classes, q)
}

/// Runs the algorithm with a caller-chosen prime `q ≡ 1 (mod exp G)`,
/// `q > 2√|G|`.
pub fn character_table_mod(g: &GroupTable, classes: &ConjClassPartition, q: u64) -> Result<CharacterTable> {
    let e = exponent(g);
    let n = g.order() as u64;
    if !is_prime(q) || !(q - 1).is_multiple_of(e) || q <= 2 * ceil_sqrt(n) {
        return Err(Error::BadParameter(format!(
            "{q} is not a valid Dixon prime for exponent {e}, order {n}"
        )));
    }
    let f = PrimeField::new(q);
    let r = classes.len();
    let matrices = class_matrices(g, classes);
    let mats: Vec<Vec<Vec<u64>>> = matrices
        .iter()
        .map(|m| m.iter().map(|row| row.iter().map(|&v| v % q).collect()).collect())
        .collect();

    let vectors = split_eigenspaces(&f, &mats, r)?;
    if vectors.len() != r {
        return Err(Error::Internal(format!(
            "found {} central characters for {r} classes",
            vectors.len()
        )));
    }

    let z = f.pow(f.primitive_root(), (q - 1) / e);
    // power maps: class of rep^l
    let power_class: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let o = classes.element_order(c);
            (0..o).map(|l| classes.class_of(g.pow(classes.rep(c), l))).collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(r);
    for omega in &vectors {
        let mut s = 0u64;
        for i in 0..r {
            let t = f.mul(
                f.mul(omega[i], omega[classes.inverse_class(i)]),
                f.inv(classes.size(i) as u64 % q),
            );
            s = f.add(s, t);
        }
        if s == 0 {
            return Err(Error::Internal("degenerate central character".into()));
        }
        let d2 = f.mul(n % q, f.inv(s));
        let d = f
            .small_sqrt(d2, floor_sqrt(n))
            .ok_or_else(|| Error::Internal("no integral degree".into()))?;
        let reduced: Vec<u64> = (0..r)
            .map(|i| f.mul(f.mul(d, omega[i]), f.inv(classes.size(i) as u64 % q)))
            .collect();
        let mut values = Vec::with_capacity(r);
        for c in 0..r {
            let o = classes.element_order(c);
            let w = f.pow(z, e / o);
            let inv_o = f.inv(o % q);
            let mut counts = vec![0i64; e as usize];
            for k in 0..o {
                let mut m = 0u64;
                for l in 0..o {
                    let val = reduced[power_class[c][l as usize]];
                    let wl = f.pow(w, (o - (k * l) % o) % o);
                    m = f.add(m, f.mul(val, wl));
                }
                let m = f.mul(m, inv_o);
                if m > d {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                counts[(k * (e / o)) as usize] = m as i64;
            }
            values.push(CycInt::from_exponent_counts(e as u32, &counts));
        }
        rows.push(ClassFunction { values });
    }

    rows.sort_by(|a, b| {
        let key = |c: &ClassFunction| {
            (
                c.degree().unwrap_or(0),
                c.values.iter().any(|v| v.as_integer() != Some(1)),
            )
        };
        key(a).cmp(&key(b)).then_with(|| a.values.cmp(&b.values))
    });
    let table = CharacterTable {
        order: g.order(),
        exponent: e as u32,
        class_sizes: classes.sizes().to_vec(),
        inverse_class: (0..r).map(|c| classes.inverse_class(c)).collect(),
        irreducibles: rows,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// Common eigenvectors of all class matrices, each scaled so its first
/// coordinate is 1.
fn split_eigenspaces(f: &PrimeField, mats: &[Vec<Vec<u64>>], r: usize) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut spaces = vec![echelon(f, identity)];
    for m in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let pivots: Vec<usize> = basis.iter().map(|v| v.iter().position(|&x| x != 0).unwrap()).collect();
            let dim = basis.len();
            // restricted operator: A[a][b] = (M v_b)[pivot_a]
            let images: Vec<Vec<u64>> = basis.iter().map(|v| f.mat_vec(m, v)).collect();
            let a: Vec<Vec<u64>> = (0..dim)
                .map(|i| (0..dim).map(|j| images[j][pivots[i]]).collect())
                .collect();
            let roots = f.roots(&f.char_poly(&a));
            if roots.len() == 1 {
                next.push(basis);
                continue;
            }
            let mut total = 0;
            for lambda in roots {
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| if i == j { f.sub(a[i][j], lambda) } else { a[i][j] })
                            .collect()
                    })
                    .collect();
                let ker = f.kernel(&shifted, dim);
                total += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|u| {
                        (0..r)
                            .map(|t| u.iter().zip(&basis).fold(0, |acc, (&c, v)| f.add(acc, f.mul(c, v[t]))))
                            .collect()
                    })
                    .collect();
                next.push(echelon(f, sub));
            }
            if total != dim {
                return Err(Error::Internal("class matrix restriction is not diagonalizable".into()));
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(spaces.len());
    for basis in spaces {
        if basis.len() != 1 {
            return Err(Error::Internal("eigenspaces did not split to dimension one".into()));
        }
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::Internal("central character vanishes on the identity".into()));
        }
        let inv = f.inv(v[0]);
        out.push(v.iter().map(|&x| f.mul(x, inv)).collect());
    }
    Ok(out)
}

/// Reduced row echelon form of a list of independent row vectors.
fn echelon(f: &PrimeField, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(p, r);
        let inv = f.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let k = rows[i][c];
                for j in 0..cols {
                    let t = f.mul(k, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// A subgroup realized as a group in its own right, with its classes and
/// the fusion of its classes into the classes of the parent.
pub struct SubgroupEmbedding {
    pub set: ElementSet,
    pub table: GroupTable,
    pub classes: ConjClassPartition,
    /// `fusion[d]` is the parent class containing subgroup class `d`.
    pub fusion: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(g: &GroupTable, g_classes: &ConjClassPartition, h: &ElementSet) -> Result<Self> {
        let table = g.subgroup_table(h)?;
        let classes = conjugacy_classes(&table);
        let fusion = (0..classes.len())
            .map(|d| g_classes.class_of(h.members()[classes.rep(d)] as usize))
            .collect();
        Ok(SubgroupEmbedding {
            set: h.clone(),
            table,
            classes,
            fusion,
        })
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }
}

/// `θ^G(g) = (|C_G(g)| / |H|) Σ_{H-classes D ⊆ g^G} |D| θ(D)`.
pub fn induce(
    g_order: usize,
    g_classes: &ConjClassPartition,
    h: &SubgroupEmbedding,
    theta: &ClassFunction,
) -> Result<ClassFunction> {
    let e = theta.values[0].order();
    let mut sums = vec![CycInt::zero(e); g_classes.len()];
    for (d, value) in theta.values.iter().enumerate() {
        let c = h.fusion[d];
        sums[c] = sums[c].add(&value.scale(h.classes.size(d) as i64));
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| {
            let centralizer = (g_order / g_classes.size(c)) as i64;
            s.scale(centralizer)
                .div_exact(h.order() as i64)
                .ok_or(Error::NotIntegral(h.order() as i64))
        })
        .collect::<Result<_>>()?;
    Ok(ClassFunction { values })
}

/// Values of `χ` on the classes of the subgroup.
pub fn restrict(chi: &ClassFunction, h: &SubgroupEmbedding) -> ClassFunction {
    ClassFunction {
        values: h.fusion.iter().map(|&c| chi.values[c].clone()).collect(),
    }
}

/// `1_H^G`.
pub fn permutation_character(g_order: usize, g_classes: &ConjClassPartition, h: &SubgroupEmbedding) -> ClassFunction {
    let trivial = ClassFunction::constant(h.classes.len(), 1, 1);
    induce(g_order, g_classes, h, &trivial).expect("permutation character is integral")
}

/// Outcome of inducing an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneity {
    pub holds: bool,
    /// The single constituent, when homogeneous.
    pub constituent: Option<usize>,
    pub multiplicity: u64,
    pub multiplicities: Vec<u64>,
}

/// Whether `θ^G = a·ξ` for a single `ξ ∈ Irr(G)`.
pub fn is_homogeneous_induction(
    g_table: &CharacterTable,
    g_classes: &ConjClassPartition,
    h: &SubgroupEmbedding,
    h_table: &CharacterTable,
    theta: &ClassFunction,
) -> Result<Homogeneity> {
    if h_table.inner_product(theta, theta).as_integer() != Some(1) || theta.degree().is_none_or(|d| d <= 0) {
        return Err(Error::NotACharacter("θ is not irreducible".into()));
    }
    let induced = induce(g_table.order, g_classes, h, theta)?;
    let multiplicities = g_table.decompose(&induced)?;
    let nonzero: Vec<usize> = (0..multiplicities.len()).filter(|&i| multiplicities[i] > 0).collect();
    let holds = nonzero.len() == 1;
    Ok(Homogeneity {
        holds,
        constituent: holds.then(|| nonzero[0]),
        multiplicity: if holds { multiplicities[nonzero[0]] } else { 0 },
        multiplicities,
    })
}

/// `{x : χ(x) = χ(1)}`.
pub fn kernel_of(g_order: usize, classes: &ConjClassPartition, chi: &ClassFunction) -> ElementSet {
    let d = &chi.values[0];
    let members = (0..classes.len())
        .filter(|&c| chi.values[c] == *d)
        .flat_map(|c| classes.members(c).collect::<Vec<_>>());
    ElementSet::from_indices(g_order, members).expect("class members in range")
}

/// `χ ∈ Irr(G|N)`, i.e. `N ⊄ ker χ`.
pub fn in_irr_given_n(
    g: &GroupTable,
    classes: &ConjClassPartition,
    chi: &ClassFunction,
    n: &ElementSet,
) -> Result<bool> {
    if !g.is_subgroup(n) {
        return Err(Error::NotSubgroup);
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    Ok(!n.is_subset(&kernel_of(g.order(), classes, chi)))
}
