//! Coset-conjugacy conditions on a pair `(G, H)`, each an exhaustive scan
//! that returns the first counterexample in canonical element order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chartab::{is_homogeneous_induction, CharacterTable, SubgroupEmbedding};
use crate::error::{Error, Result};
use crate::modular::{is_power_of, is_prime};
use crate::perm::{ElementSet, GroupTable};
use crate::structure::{is_normal, ConjClassPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Condition {
    Camina,
    F,
    Fpm,
    Ci,
    O,
    EqualOrder,
    EqualOrderCoset,
    BsHypothesis,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Camina => "CAMINA",
            Condition::F => "F",
            Condition::Fpm => "FPM",
            Condition::Ci => "CI",
            Condition::O => "O",
            Condition::EqualOrder => "EQUAL_ORDER",
            Condition::EqualOrderCoset => "EQUAL_ORDER_COSET",
            Condition::BsHypothesis => "BS_HYPOTHESIS",
        };
        f.write_str(s)
    }
}

/// A counterexample. `x` and `h` are element indices; character-based
/// conditions name the offending irreducible in `detail` instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Option<usize>,
    pub h: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub condition: Condition,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ConditionVerdict {
    fn holds(condition: Condition) -> Self {
        ConditionVerdict {
            condition,
            holds: true,
            witness: None,
        }
    }

    fn fails(condition: Condition, x: Option<usize>, h: Option<usize>, detail: String) -> Self {
        ConditionVerdict {
            condition,
            holds: false,
            witness: Some(Witness { x, h, detail }),
        }
    }
}

fn require_proper_nontrivial(g: &GroupTable, h: &ElementSet) -> Result<()> {
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroup);
    }
    if h.is_trivial() || h.is_full() {
        return Err(Error::RejectedSubgroup("expected 1 < H < G"));
    }
    Ok(())
}

/// First `(x, h)` with `x ∉ H`, `h ∈ H` failing `ok`, scanning in index order.
fn scan_outside(
    g: &GroupTable,
    h: &ElementSet,
    mut ok: impl FnMut(usize, usize, usize) -> bool,
) -> Option<(usize, usize, usize)> {
    for x in (0..g.order()).filter(|&x| !h.contains(x)) {
        for y in h.iter() {
            let xy = g.mul(x, y);
            if !ok(x, y, xy) {
                return Some((x, y, xy));
            }
        }
    }
    None
}

/// `(G, N)` is a Camina pair: `1 < N < G`, `N ⊴ G` and `gN ⊆ g^G` for `g ∉ N`.
pub fn is_camina_pair(g: &GroupTable, classes: &ConjClassPartition, n: &ElementSet) -> Result<ConditionVerdict> {
    if !g.is_subgroup(n) {
        return Err(Error::NotSubgroup);
    }
    let c = Condition::Camina;
    if n.is_trivial() || n.is_full() {
        return Ok(ConditionVerdict::fails(
            c,
            None,
            None,
            "N is not a nontrivial proper subgroup".into(),
        ));
    }
    if !is_normal(g, n) {
        return Ok(ConditionVerdict::fails(c, None, None, "N is not normal".into()));
    }
    Ok(coset_in_class(g, classes, n, c))
}

fn coset_in_class(g: &GroupTable, classes: &ConjClassPartition, h: &ElementSet, c: Condition) -> ConditionVerdict {
    match scan_outside(g, h, |x, _, xy| classes.class_of(xy) == classes.class_of(x)) {
        None => ConditionVerdict::holds(c),
        Some((x, y, xy)) => ConditionVerdict::fails(
            c,
            Some(x),
            Some(y),
            format!("xh = {} is not conjugate to x = {}", g.element(xy), g.element(x)),
        ),
    }
}

/// Condition F: `1 < H < G` and `xH ⊆ x^G` for every `x ∉ H`.
pub fn satisfies_f(g: &GroupTable, classes: &ConjClassPartition, h: &ElementSet) -> Result<ConditionVerdict> {
    require_proper_nontrivial(g, h)?;
    Ok(coset_in_class(g, classes, h, Condition::F))
}

/// Condition F±: `xh` is conjugate to `x` or to `x⁻¹`.
pub fn satisfies_fpm(g: &GroupTable, classes: &ConjClassPartition, h: &ElementSet) -> Result<ConditionVerdict> {
    require_proper_nontrivial(g, h)?;
    let found = scan_outside(g, h, |x, _, xy| {
        let c = classes.class_of(xy);
        let cx = classes.class_of(x);
        c == cx || c == classes.inverse_class(cx)
    });
    Ok(match found {
        None => ConditionVerdict::holds(Condition::Fpm),
        Some((x, y, xy)) => ConditionVerdict::fails(
            Condition::Fpm,
            Some(x),
            Some(y),
            format!(
                "xh = {} is conjugate to neither x nor x⁻¹ for x = {}",
                g.element(xy),
                g.element(x)
            ),
        ),
    })
}

/// Condition CI: every nontrivial `θ ∈ Irr(H)` induces homogeneously.
/// `h_table` must be the character table of `h.table`.
pub fn satisfies_ci(
    g: &GroupTable,
    classes: &ConjClassPartition,
    g_table: &CharacterTable,
    h: &SubgroupEmbedding,
    h_table: &CharacterTable,
) -> Result<ConditionVerdict> {
    require_proper_nontrivial(g, &h.set)?;
    for (i, theta) in h_table.irreducibles.iter().enumerate().skip(1) {
        let hom = is_homogeneous_induction(g_table, classes, h, h_table, theta)?;
        if !hom.holds {
            return Ok(ConditionVerdict::fails(
                Condition::Ci,
                None,
                None,
                format!("theta {i} induces with multiplicities {:?}", hom.multiplicities),
            ));
        }
    }
    Ok(ConditionVerdict::holds(Condition::Ci))
}

/// Condition O: `H < G` and every coset `xH` of an odd-order `x ∉ H` is all odd-order.
/// Trivial `H` is allowed.
pub fn satisfies_o(g: &GroupTable, h: &ElementSet) -> Result<ConditionVerdict> {
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroup);
    }
    if h.is_full() {
        return Err(Error::RejectedSubgroup("expected H < G"));
    }
    let found = scan_outside(g, h, |x, _, xy| {
        g.element_order(x).is_multiple_of(2) || g.element_order(xy) % 2 == 1
    });
    Ok(match found {
        None => ConditionVerdict::holds(Condition::O),
        Some((x, y, xy)) => ConditionVerdict::fails(
            Condition::O,
            Some(x),
            Some(y),
            format!(
                "x has odd order {} but xh has order {}",
                g.element_order(x),
                g.element_order(xy)
            ),
        ),
    })
}

fn same_order(g: &GroupTable, h: &ElementSet, c: Condition) -> ConditionVerdict {
    match scan_outside(g, h, |x, _, xy| g.element_order(x) == g.element_order(xy)) {
        None => ConditionVerdict::holds(c),
        Some((x, y, xy)) => ConditionVerdict::fails(
            c,
            Some(x),
            Some(y),
            format!("o(x) = {} but o(xh) = {}", g.element_order(x), g.element_order(xy)),
        ),
    }
}

/// Equal order pair: `N` nontrivial, proper, normal, and `o(xn) = o(x)` for `x ∉ N`.
pub fn is_equal_order_pair(g: &GroupTable, n: &ElementSet) -> Result<ConditionVerdict> {
    require_proper_nontrivial(g, n)?;
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    Ok(same_order(g, n, Condition::EqualOrder))
}

/// The coset variant of an equal order pair, for any `1 < H < G`.
pub fn equal_order_coset(g: &GroupTable, h: &ElementSet) -> Result<ConditionVerdict> {
    require_proper_nontrivial(g, h)?;
    Ok(same_order(g, h, Condition::EqualOrderCoset))
}

/// The coset clause alone, with no restriction on `H`.
pub fn cosets_have_equal_orders(g: &GroupTable, h: &ElementSet) -> bool {
    same_order(g, h, Condition::EqualOrderCoset).holds
}

/// `Δ_H(G)`: elements meeting no conjugate of `H`, i.e. the union of the
/// classes disjoint from `H`.
pub fn derangements(g: &GroupTable, classes: &ConjClassPartition, h: &ElementSet) -> ElementSet {
    let members = (0..classes.len())
        .filter(|&c| classes.members(c).all(|x| !h.contains(x)))
        .flat_map(|c| classes.members(c).collect::<Vec<_>>());
    ElementSet::from_indices(g.order(), members).expect("class members in range")
}

/// For a `p`-element `x`: `xy` is `p`-regular for every nontrivial `p`-regular `y`.
pub fn bs_hypothesis(g: &GroupTable, x: usize, p: u64) -> Result<ConditionVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: x,
            size: g.order(),
        });
    }
    if !is_power_of(g.element_order(x), p) {
        return Err(Error::NotPElement(p));
    }
    for y in 1..g.order() {
        if g.element_order(y).is_multiple_of(p) {
            continue;
        }
        let xy = g.mul(x, y);
        if g.element_order(xy).is_multiple_of(p) {
            return Ok(ConditionVerdict::fails(
                Condition::BsHypothesis,
                Some(x),
                Some(y),
                format!("xy = {} has order {}", g.element(xy), g.element_order(xy)),
            ));
        }
    }
    Ok(ConditionVerdict::holds(Condition::BsHypothesis))
}
