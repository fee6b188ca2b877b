//! Permutations, fully enumerated permutation groups and subsets of them.
//!
//! Points are labelled `0..n` internally. A product `a * b` means "apply `a`,
//! then `b`", so `compose(a, b)` maps `i` to `b[a[i]]`. Group elements are
//! kept sorted lexicographically by image sequence, which puts the identity
//! at index 0 and makes every index-based report reproducible.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::modular::lcm;

/// Largest order for which a dense multiplication table is kept.
pub const FULL_TABLE_MAX: usize = 2048;

/// Default bound on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A permutation of `{0, .., n-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, checking that it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[i] {
                return Err(Error::InvalidPermutation(format!("image {img} repeated")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles on 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {degree}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!("point {} appears twice", p + 1)));
                }
                used[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(g.inverse().compose_unchecked(self).compose_unchecked(g))
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`, i.e. the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

/// 1-based disjoint cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

/// A subset of a [`GroupTable`], stored as sorted element indices plus a
/// membership mask.
#[derive(Clone)]
pub struct ElementSet {
    parent_order: usize,
    members: Vec<u32>,
    mask: FixedBitSet,
}

impl ElementSet {
    pub fn from_indices<I: IntoIterator<Item = usize>>(parent_order: usize, indices: I) -> Result<Self> {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        for i in indices {
            if i >= parent_order {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: parent_order,
                });
            }
            mask.insert(i);
        }
        Ok(Self::from_mask(mask))
    }

    pub(crate) fn from_mask(mask: FixedBitSet) -> Self {
        let members = mask.ones().map(|i| i as u32).collect();
        ElementSet {
            parent_order: mask.len(),
            members,
            mask,
        }
    }

    pub fn empty(parent_order: usize) -> Self {
        Self::from_mask(FixedBitSet::with_capacity(parent_order))
    }

    pub fn trivial(parent_order: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        mask.insert(0);
        Self::from_mask(mask)
    }

    pub fn full(parent_order: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        mask.insert_range(..);
        Self::from_mask(mask)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.mask.contains(index)
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|&i| i as usize)
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Self::from_mask(mask)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut mask = self.mask.clone();
        mask.union_with(&other.mask);
        Self::from_mask(mask)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut mask = self.mask.clone();
        mask.difference_with(&other.mask);
        Self::from_mask(mask)
    }

    /// `parent \ self`.
    pub fn complement(&self) -> ElementSet {
        let mut mask = self.mask.clone();
        mask.toggle_range(..);
        Self::from_mask(mask)
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.parent_order
    }

    /// Re-expresses a subset of a subgroup table (whose elements are `self`'s
    /// members in order) as a subset of the parent group.
    pub fn lift(&self, inner: &ElementSet) -> ElementSet {
        let mut mask = FixedBitSet::with_capacity(self.parent_order);
        for i in inner.iter() {
            mask.insert(self.members[i] as usize);
        }
        Self::from_mask(mask)
    }

    /// Inverse of [`ElementSet::lift`]: positions of `outer`'s elements within `self`.
    pub fn restrict(&self, outer: &ElementSet) -> ElementSet {
        let mut mask = FixedBitSet::with_capacity(self.len());
        for (pos, &m) in self.members.iter().enumerate() {
            if outer.contains(m as usize) {
                mask.insert(pos);
            }
        }
        Self::from_mask(mask)
    }

    /// Position of a parent index within `self.members`.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.members.binary_search(&(index as u32)).ok()
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.members == other.members
    }
}

impl Eq for ElementSet {}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent_order.hash(state);
        self.members.hash(state);
    }
}

/// Canonical subgroup order: by size, then by member sequence.
impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), &self.members).cmp(&(other.len(), &other.members))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementSet{:?}", self.members)
    }
}

/// A fully enumerated finite permutation group.
pub struct GroupTable {
    degree: usize,
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, u32>,
    generator_ids: Vec<usize>,
    /// `cayley_action[s][x]` = index of `x * generator_s`.
    cayley_action: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl GroupTable {
    /// Breadth-first closure of `gens`, sorted canonically.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<GroupTable> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut elements = vec![identity];
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let y = elements[i].compose_unchecked(g);
                if !seen.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            cap,
                            reached: elements.len() + 1,
                        });
                    }
                    seen.insert(y.clone(), ());
                    elements.push(y);
                }
            }
            i += 1;
        }
        drop(seen);
        elements.sort();
        let index_of: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k as u32))
            .collect();
        let generator_ids: Vec<usize> = gens.iter().map(|g| index_of[g] as usize).collect();
        let cayley_action: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| elements.iter().map(|x| index_of[&x.compose_unchecked(g)]).collect())
            .collect();
        let inverse = elements.iter().map(|x| index_of[&x.inverse()]).collect();
        let orders = elements.iter().map(|x| x.order() as u32).collect();
        let mut group = GroupTable {
            degree,
            elements,
            index_of,
            generator_ids,
            cayley_action,
            inverse,
            orders,
            table: None,
        };
        if group.order() <= FULL_TABLE_MAX {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    /// Dense table built row by row along a breadth-first spanning tree of
    /// the Cayley graph: `a * (p * s) = (a * p) * s`.
    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut tree: Vec<(u32, u32)> = Vec::with_capacity(n);
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (s, action) in self.cayley_action.iter().enumerate() {
                let y = action[x as usize];
                if !visited[y as usize] {
                    visited[y as usize] = true;
                    tree.push((x, s as u32));
                    queue.push(y);
                }
            }
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            for (k, &(parent, s)) in tree.iter().enumerate() {
                let b = queue[k + 1] as usize;
                row[b] = self.cayley_action[s as usize][row[parent as usize] as usize];
            }
        }
        table
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of.get(p).map(|&i| i as usize)
    }

    pub fn generator_ids(&self) -> &[usize] {
        &self.generator_ids
    }

    pub fn cayley_action(&self) -> &[Vec<u32>] {
        &self.cayley_action
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => {
                let p = self.elements[a].compose_unchecked(&self.elements[b]);
                self.index_of[&p] as usize
            }
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut result = 0;
        let mut base = a;
        let mut k = k % self.element_order(a);
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn trivial(&self) -> ElementSet {
        ElementSet::trivial(self.order())
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut c = Closure::new(self);
        for &g in gens {
            c.add(g);
        }
        c.into_set()
    }

    /// A small generating set for a subgroup, chosen greedily in member order.
    pub fn generators_of(&self, h: &ElementSet) -> Vec<usize> {
        let mut c = Closure::new(self);
        for x in h.iter() {
            if !c.contains(x) {
                c.add(x);
            }
        }
        c.gens
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        if h.parent_order() != self.order() || !h.contains(0) {
            return false;
        }
        let mut c = Closure::new(self);
        for x in h.iter() {
            if !c.contains(x) {
                c.add(x);
                if c.len() > h.len() || !c.list.iter().all(|&y| h.contains(y as usize)) {
                    return false;
                }
            }
        }
        c.len() == h.len()
    }

    /// Builds the subgroup `h` as a group in its own right. Because both
    /// element lists are sorted the same way, index `i` of the result is
    /// `h.members()[i]` in `self`.
    pub fn subgroup_table(&self, h: &ElementSet) -> Result<GroupTable> {
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup);
        }
        let gens: Vec<Permutation> = self
            .generators_of(h)
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect();
        let sub = GroupTable::generate(self.degree, &gens, h.len())?;
        debug_assert!(sub.elements.iter().zip(h.iter()).all(|(p, i)| *p == self.elements[i]));
        Ok(sub)
    }

    /// `{x·h : h ∈ H}`.
    pub fn left_coset(&self, x: usize, h: &ElementSet) -> Result<ElementSet> {
        if x >= self.order() {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.order(),
            });
        }
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup);
        }
        ElementSet::from_indices(self.order(), h.iter().map(|y| self.mul(x, y)))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_set(&self, h: &ElementSet, g: usize) -> ElementSet {
        let mut mask = FixedBitSet::with_capacity(self.order());
        for x in h.iter() {
            mask.insert(self.conj(x, g));
        }
        ElementSet::from_mask(mask)
    }

    pub fn set_from_permutations(&self, perms: &[Permutation]) -> Result<ElementSet> {
        let idx: Result<Vec<usize>> = perms
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidPermutation(format!("{p} is not in the group")))
            })
            .collect();
        ElementSet::from_indices(self.order(), idx?)
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generator_ids", &self.generator_ids)
            .finish()
    }
}

/// Incrementally grown subgroup closure.
pub(crate) struct Closure<'a> {
    group: &'a GroupTable,
    mask: FixedBitSet,
    pub(crate) list: Vec<u32>,
    pub(crate) gens: Vec<usize>,
}

impl<'a> Closure<'a> {
    pub(crate) fn new(group: &'a GroupTable) -> Self {
        let mut mask = FixedBitSet::with_capacity(group.order());
        mask.insert(0);
        Closure {
            group,
            mask,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    pub(crate) fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    pub(crate) fn add(&mut self, g: usize) {
        if self.mask.contains(g) {
            return;
        }
        self.gens.push(g);
        let mut i = 0;
        while i < self.list.len() {
            let x = self.list[i] as usize;
            for &s in &self.gens {
                let y = self.group.mul(x, s);
                if !self.mask.contains(y) {
                    self.mask.insert(y);
                    self.list.push(y as u32);
                }
            }
            i += 1;
        }
    }

    pub(crate) fn into_set(self) -> ElementSet {
        ElementSet::from_mask(self.mask)
    }
}
