//! Structural invariants of a [`GroupTable`]: conjugacy classes, centralizers,
//! series, Sylow and `O_p`/`O^p` subgroups, closures, cores, the subgroup
//! lattice and class products.
//!
//! Functions that take a subgroup `K` as an [`ElementSet`] work inside the
//! ambient table, so there is no need to build a separate table for `K`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::modular::{ext_gcd, is_power_of, is_prime, p_part};
use crate::perm::{Closure, ElementSet, GroupTable, Permutation};

/// Default bound on the number of subgroups enumerated by [`subgroups`].
pub const DEFAULT_SUBGROUP_CAP: usize = 50_000;

/// Conjugacy classes of a group with deterministic class ids.
///
/// Classes are ordered by (element order, class size, least member index),
/// so class 0 is always `{1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassPartition {
    class_of: Vec<u32>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    members: Vec<Vec<u32>>,
    orders: Vec<u64>,
}

impl ConjClassPartition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Element order of the members of class `c`.
    pub fn element_order(&self, c: usize) -> u64 {
        self.orders[c]
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.members[c].iter().map(|&i| i as usize)
    }

    pub fn class_set(&self, c: usize) -> ElementSet {
        ElementSet::from_indices(self.class_of.len(), self.members(c)).expect("class members in range")
    }
}

/// Orbits of the conjugation action of `G` on itself.
pub fn conjugacy_classes(g: &GroupTable) -> ConjClassPartition {
    let n = g.order();
    let unassigned = u32::MAX;
    let mut raw_class = vec![unassigned; n];
    let mut raw_members: Vec<Vec<u32>> = Vec::new();
    for x in 0..n {
        if raw_class[x] != unassigned {
            continue;
        }
        let id = raw_members.len() as u32;
        raw_class[x] = id;
        let mut orbit = vec![x as u32];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i] as usize;
            for &s in g.generator_ids() {
                let z = g.conj(y, s);
                if raw_class[z] == unassigned {
                    raw_class[z] = id;
                    orbit.push(z as u32);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        raw_members.push(orbit);
    }
    let mut order: Vec<usize> = (0..raw_members.len()).collect();
    order.sort_by_key(|&c| {
        let rep = raw_members[c][0] as usize;
        (g.element_order(rep), raw_members[c].len(), rep)
    });
    let mut renumber = vec![0u32; order.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new as u32;
    }
    let class_of: Vec<u32> = raw_class.iter().map(|&c| renumber[c as usize]).collect();
    let members: Vec<Vec<u32>> = order.iter().map(|&c| raw_members[c].clone()).collect();
    let reps: Vec<usize> = members.iter().map(|m| m[0] as usize).collect();
    let sizes = members.iter().map(Vec::len).collect();
    let inverse_class = reps.iter().map(|&r| class_of[g.inv(r)] as usize).collect();
    let orders = reps.iter().map(|&r| g.element_order(r)).collect();
    ConjClassPartition {
        class_of,
        reps,
        sizes,
        inverse_class,
        members,
        orders,
    }
}

/// `{g : gx = xg}`.
pub fn centralizer(g: &GroupTable, x: usize) -> ElementSet {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in 0..g.order() {
        if g.mul(y, x) == g.mul(x, y) {
            mask.insert(y);
        }
    }
    ElementSet::from_mask(mask)
}

pub fn center(g: &GroupTable) -> ElementSet {
    center_of(g, &g.whole())
}

/// `Z(K)` for a subgroup `K` of `g`.
pub fn center_of(g: &GroupTable, k: &ElementSet) -> ElementSet {
    let gens = g.generators_of(k);
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in k.iter() {
        if gens.iter().all(|&s| g.mul(y, s) == g.mul(s, y)) {
            mask.insert(y);
        }
    }
    ElementSet::from_mask(mask)
}

/// Smallest subgroup containing `seeds` and normalized by every element of
/// `conjugators`.
pub fn closure_under_conjugation(g: &GroupTable, seeds: &[usize], conjugators: &[usize]) -> ElementSet {
    let mut c = Closure::new(g);
    for &x in seeds {
        c.add(x);
    }
    let mut i = 0;
    while i < c.gens.len() {
        let n = c.gens[i];
        for &s in conjugators {
            let y = g.conj(n, s);
            if !c.contains(y) {
                c.add(y);
            }
        }
        i += 1;
    }
    c.into_set()
}

pub fn commutator_subgroup(g: &GroupTable) -> ElementSet {
    derived_subgroup_of(g, &g.whole())
}

/// `K'` for a subgroup `K`: normal closure in `K` of the commutators of its generators.
pub fn derived_subgroup_of(g: &GroupTable, k: &ElementSet) -> ElementSet {
    let gens = g.generators_of(k);
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    closure_under_conjugation(g, &seeds, &gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    UpperCentral,
}

/// A chain of subgroups, iterated until it stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
}

impl SeriesChain {
    pub fn last(&self) -> &ElementSet {
        self.terms.last().expect("series has at least one term")
    }
}

pub fn derived_series(g: &GroupTable) -> SeriesChain {
    derived_series_of(g, &g.whole())
}

pub fn derived_series_of(g: &GroupTable, k: &ElementSet) -> SeriesChain {
    let mut terms = vec![k.clone()];
    loop {
        let next = derived_subgroup_of(g, terms.last().unwrap());
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    SeriesChain {
        kind: SeriesKind::Derived,
        terms,
    }
}

pub fn is_solvable(g: &GroupTable) -> bool {
    derived_series(g).last().is_trivial()
}

pub fn is_solvable_subgroup(g: &GroupTable, k: &ElementSet) -> bool {
    derived_series_of(g, k).last().is_trivial()
}

pub fn upper_central_series(g: &GroupTable) -> SeriesChain {
    upper_central_series_of(g, &g.whole())
}

/// `Z_{i+1}` = elements of `K` whose commutators with the generators of `K` lie in `Z_i`.
pub fn upper_central_series_of(g: &GroupTable, k: &ElementSet) -> SeriesChain {
    let gens = g.generators_of(k);
    let mut terms = vec![ElementSet::trivial(g.order())];
    loop {
        let z = terms.last().unwrap();
        let mut mask = FixedBitSet::with_capacity(g.order());
        for y in k.iter() {
            if gens.iter().all(|&s| z.contains(g.commutator(y, s))) {
                mask.insert(y);
            }
        }
        let next = ElementSet::from_mask(mask);
        if &next == z {
            break;
        }
        terms.push(next);
    }
    SeriesChain {
        kind: SeriesKind::UpperCentral,
        terms,
    }
}

pub fn is_nilpotent(g: &GroupTable) -> bool {
    upper_central_series(g).last().is_full()
}

pub fn is_nilpotent_subgroup(g: &GroupTable, k: &ElementSet) -> bool {
    upper_central_series_of(g, k).last() == k
}

/// Least normal subgroup of `G` containing the subset `h`.
pub fn normal_closure(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let seeds: Vec<usize> = h.iter().collect();
    closure_under_conjugation(g, &seeds, g.generator_ids())
}

/// Normal closure of `h` inside the subgroup `k ⊇ h`.
pub fn normal_closure_in(g: &GroupTable, k: &ElementSet, h: &ElementSet) -> ElementSet {
    let seeds: Vec<usize> = h.iter().collect();
    closure_under_conjugation(g, &seeds, &g.generators_of(k))
}

/// True when the subgroup `h` is normalized by every element of `k`.
pub fn is_normal_in(g: &GroupTable, k: &ElementSet, h: &ElementSet) -> bool {
    let hg = g.generators_of(h);
    g.generators_of(k)
        .iter()
        .all(|&s| hg.iter().all(|&x| h.contains(g.conj(x, s))))
}

pub fn is_normal(g: &GroupTable, h: &ElementSet) -> bool {
    let hg = g.generators_of(h);
    g.generator_ids()
        .iter()
        .all(|&s| hg.iter().all(|&x| h.contains(g.conj(x, s))))
}

/// Largest normal subgroup of `G` contained in the subgroup `h`.
pub fn core(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let mut c = h.clone();
    loop {
        let mut changed = false;
        for &s in g.generator_ids() {
            let next = c.intersection(&g.conjugate_set(&c, s));
            if next != c {
                c = next;
                changed = true;
            }
        }
        if !changed {
            return c;
        }
    }
}

/// `N_K(H)` for subgroups `H`, `K` of `g`.
pub fn normalizer_in(g: &GroupTable, k: &ElementSet, h: &ElementSet) -> ElementSet {
    let hg = g.generators_of(h);
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in k.iter() {
        if hg.iter().all(|&x| h.contains(g.conj(x, y))) {
            mask.insert(y);
        }
    }
    ElementSet::from_mask(mask)
}

pub fn normalizer(g: &GroupTable, h: &ElementSet) -> ElementSet {
    normalizer_in(g, &g.whole(), h)
}

/// Subnormality by the subnormal-closure chain: `K_0 = G`,
/// `K_{i+1}` = normal closure of `H` in `K_i`. `H` is subnormal iff the
/// chain stabilizes at `H` itself.
pub fn is_subnormal(g: &GroupTable, h: &ElementSet) -> bool {
    let mut k = g.whole();
    loop {
        let next = normal_closure_in(g, &k, h);
        if next == *h {
            return true;
        }
        if next == k {
            return false;
        }
        k = next;
    }
}

/// Every subgroup of `G`, sorted by (order, member sequence).
///
/// Seeds with the cyclic subgroups and repeatedly joins each known subgroup
/// with each cyclic one until no new subgroup appears. Every subgroup is
/// a join of cyclic subgroups, so this reaches the whole lattice.
pub fn subgroups(g: &GroupTable, count_cap: usize) -> Result<Vec<ElementSet>> {
    let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
    for x in 0..g.order() {
        let c = g.closure(&[x]);
        if !seen.contains_key(&c) {
            seen.insert(c.clone(), ());
            cyclic.push((x, c.clone()));
            found.push((c, if x == 0 { vec![] } else { vec![x] }));
            if found.len() > count_cap {
                return Err(Error::SubgroupCapExceeded { cap: count_cap });
            }
        }
    }
    let mut i = 0;
    while i < found.len() {
        let (a, gens) = found[i].clone();
        for (x, c) in &cyclic {
            if a.contains(*x) || c.len() == 1 {
                continue;
            }
            // joins with a cyclic subgroup containing A add nothing new
            if a.is_subset(c) && c.len() > a.len() {
                continue;
            }
            let mut join_gens = gens.clone();
            join_gens.push(*x);
            let j = g.closure(&join_gens);
            if !seen.contains_key(&j) {
                seen.insert(j.clone(), ());
                found.push((j, join_gens));
                if found.len() > count_cap {
                    return Err(Error::SubgroupCapExceeded { cap: count_cap });
                }
            }
        }
        i += 1;
    }
    let mut out: Vec<ElementSet> = found.into_iter().map(|(s, _)| s).collect();
    out.sort();
    Ok(out)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A Sylow `p`-subgroup, grown greedily by joining `p`-elements in index order.
pub fn sylow_subgroup(g: &GroupTable, p: u64) -> Result<ElementSet> {
    check_prime(p)?;
    let target = p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return Ok(g.trivial());
    }
    let p_elements: Vec<usize> = (1..g.order()).filter(|&x| is_power_of(g.element_order(x), p)).collect();
    for (start, &seed) in p_elements.iter().enumerate() {
        let mut gens = vec![seed];
        let mut current = g.closure(&gens);
        for &x in p_elements[start + 1..].iter().chain(&p_elements[..start]) {
            if current.len() == target {
                break;
            }
            if current.contains(x) {
                continue;
            }
            gens.push(x);
            let joined = g.closure(&gens);
            if is_power_of(joined.len() as u64, p) {
                current = joined;
            } else {
                gens.pop();
            }
        }
        if current.len() == target {
            return Ok(current);
        }
    }
    Err(Error::Internal(format!(
        "no Sylow {p}-subgroup of order {target} found"
    )))
}

/// `O_p(G)`: the largest normal `p`-subgroup.
pub fn o_lower_p(g: &GroupTable, p: u64) -> Result<ElementSet> {
    Ok(core(g, &sylow_subgroup(g, p)?))
}

/// `O^p(G)`: the subgroup generated by the `p`-regular elements.
pub fn o_upper_p(g: &GroupTable, p: u64) -> Result<ElementSet> {
    o_upper_p_of(g, &g.whole(), p)
}

/// `O^p(K)` for a subgroup `K` of `g`.
pub fn o_upper_p_of(g: &GroupTable, k: &ElementSet, p: u64) -> Result<ElementSet> {
    check_prime(p)?;
    let mut c = Closure::new(g);
    for x in k.iter() {
        if !g.element_order(x).is_multiple_of(p) {
            c.add(x);
        }
    }
    Ok(c.into_set())
}

/// `g = g_p · g_p'` with both factors powers of `g`.
pub fn p_decomposition(a: &Permutation, p: u64) -> Result<(Permutation, Permutation)> {
    check_prime(p)?;
    let order = a.order();
    let pa = p_part(order, p);
    let m = order / pa;
    // u·pa + v·m = 1, so g = g^{v·m} · g^{u·pa}
    let (_, u, v) = ext_gcd(pa as i64, m as i64);
    let o = order as i64;
    let p_exp = (v * m as i64).rem_euclid(o) as u64;
    let q_exp = (u * pa as i64).rem_euclid(o) as u64;
    Ok((a.pow(p_exp), a.pow(q_exp)))
}

/// True iff `N ⊴ G`, `1 < N < G` and `C_G(n) ⊆ N` for every `1 ≠ n ∈ N`.
pub fn is_frobenius_with_kernel(g: &GroupTable, n: &ElementSet) -> bool {
    if !g.is_subgroup(n) || n.is_trivial() || n.is_full() || !is_normal(g, n) {
        return false;
    }
    n.iter()
        .skip(1)
        .all(|x| (0..g.order()).all(|y| n.contains(y) || g.mul(x, y) != g.mul(y, x)))
}

/// `{cd : c ∈ C, d ∈ D}` for class ids `C`, `D`.
pub fn class_product(g: &GroupTable, classes: &ConjClassPartition, c: usize, d: usize) -> Result<ElementSet> {
    for id in [c, d] {
        if id >= classes.len() {
            return Err(Error::IndexOutOfRange {
                index: id,
                size: classes.len(),
            });
        }
    }
    let mut mask = FixedBitSet::with_capacity(g.order());
    for x in classes.members(c) {
        for y in classes.members(d) {
            mask.insert(g.mul(x, y));
        }
    }
    Ok(ElementSet::from_mask(mask))
}

/// `{xy : x ∈ A, y ∈ B}` for arbitrary subsets.
pub fn set_product(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for x in a.iter() {
        for y in b.iter() {
            mask.insert(g.mul(x, y));
        }
    }
    ElementSet::from_mask(mask)
}

/// A quotient `G/M` realized as the action of `G` on the cosets of `M`.
pub struct Quotient {
    pub table: GroupTable,
    /// `image[x]` is the index of `xM` in `table`.
    pub image: Vec<u32>,
}

impl Quotient {
    /// Image of a subset of `G`.
    pub fn map_set(&self, s: &ElementSet) -> ElementSet {
        let mut mask = FixedBitSet::with_capacity(self.table.order());
        for x in s.iter() {
            mask.insert(self.image[x] as usize);
        }
        ElementSet::from_mask(mask)
    }
}

/// `G/M` for a normal subgroup `M`, acting on right cosets `Mx ↦ Mxg`.
pub fn quotient(g: &GroupTable, m: &ElementSet) -> Result<Quotient> {
    if !g.is_subgroup(m) {
        return Err(Error::NotSubgroup);
    }
    if !is_normal(g, m) {
        return Err(Error::NotNormal);
    }
    let n = g.order();
    let unassigned = u32::MAX;
    let mut coset_of = vec![unassigned; n];
    let mut count = 0u32;
    for x in 0..n {
        if coset_of[x] != unassigned {
            continue;
        }
        for y in m.iter() {
            coset_of[g.mul(y, x)] = count;
        }
        count += 1;
    }
    let mut reps = vec![0usize; count as usize];
    for x in (0..n).rev() {
        reps[coset_of[x] as usize] = x;
    }
    let action = |s: usize| -> Result<Permutation> {
        let images = reps.iter().map(|&r| coset_of[g.mul(r, s)]).collect();
        Permutation::from_images(images)
    };
    let gens: Vec<Permutation> = g.generator_ids().iter().map(|&s| action(s)).collect::<Result<_>>()?;
    let table = GroupTable::generate(count as usize, &gens, count as usize)?;
    let mut image = vec![0u32; n];
    for (x, slot) in image.iter_mut().enumerate() {
        let p = action(x)?;
        *slot = table
            .index_of(&p)
            .ok_or_else(|| Error::Internal("coset action image missing".into()))? as u32;
    }
    Ok(Quotient { table, image })
}
