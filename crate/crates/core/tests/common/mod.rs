#![allow(dead_code)]

use std::collections::HashSet;

use camina::perm::{GroupTable, Permutation};
use camina::verify::GroupContext;
use camina::workbench::catalog::{builtin_table, BUILTIN_LABELS};

/// Builtin groups of order at most `max`, in catalog order.
pub fn builtin_contexts(max: usize) -> Vec<GroupContext> {
    BUILTIN_LABELS
        .iter()
        .filter_map(|l| {
            let t = builtin_table(l).ok()?;
            (t.order() <= max).then(|| GroupContext::new(*l, t))
        })
        .collect()
}

pub fn builtin_tables(max: usize) -> Vec<(&'static str, GroupTable)> {
    BUILTIN_LABELS
        .iter()
        .filter_map(|l| {
            let t = builtin_table(l).ok()?;
            (t.order() <= max).then_some((*l, t))
        })
        .collect()
}

/// Brute-force helpers on raw permutations, independent of table indices.
pub struct Raw {
    pub elems: Vec<Permutation>,
}

impl Raw {
    pub fn new(g: &GroupTable) -> Self {
        Raw {
            elems: g.elements().to_vec(),
        }
    }

    pub fn mul(a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b).unwrap()
    }

    pub fn conjugate(&self, x: &Permutation, y: &Permutation) -> bool {
        self.elems.iter().any(|g| x.conjugate(g).unwrap() == *y)
    }

    /// Subgroup generated by `gens`, by naive closure.
    pub fn generate(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut set: HashSet<Permutation> = HashSet::new();
        set.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = set.iter().cloned().collect();
        while let Some(a) = frontier.pop() {
            for s in gens {
                let b = Raw::mul(&a, s);
                if set.insert(b.clone()) {
                    frontier.push(b);
                }
            }
        }
        set
    }

    /// Lower central series of `k` reaches 1.
    pub fn nilpotent(degree: usize, k: &HashSet<Permutation>) -> bool {
        let mut term = k.clone();
        loop {
            let comms: Vec<Permutation> = term
                .iter()
                .flat_map(|a| {
                    k.iter()
                        .map(move |b| Raw::mul(&Raw::mul(&a.inverse(), &b.inverse()), &Raw::mul(a, b)))
                })
                .collect();
            let next = Raw::generate(degree, &comms);
            if next.len() == 1 {
                return true;
            }
            if next.len() == term.len() {
                return false;
            }
            term = next;
        }
    }
}
