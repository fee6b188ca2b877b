//! Executable implications over `(G, H)` pairs: each claim evaluates its
//! hypothesis and, when it holds, its conclusion, producing a
//! [`VerificationReport`] with status PASS, VACUOUS, VIOLATION or SKIPPED.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chartab::{character_table_with, restrict, CharacterTable, ChartabLimits, SubgroupEmbedding};
use crate::conditions::{
    bs_hypothesis, cosets_have_equal_orders, derangements, equal_order_coset, is_camina_pair, satisfies_ci,
    satisfies_f, satisfies_fpm, satisfies_o, ConditionVerdict,
};
use crate::error::{Error, Result};
use crate::modular::{is_power_of, prime_divisors};
use crate::perm::{ElementSet, GroupTable};
use crate::structure::{
    center, class_product, commutator_subgroup, conjugacy_classes, derived_subgroup_of, is_frobenius_with_kernel,
    is_nilpotent_subgroup, is_normal, is_normal_in, is_solvable_subgroup, is_subnormal, normal_closure, normalizer,
    o_lower_p, o_upper_p, o_upper_p_of, quotient, set_product, subgroups, ConjClassPartition, DEFAULT_SUBGROUP_CAP,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Every checkable statement, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Theorem1,
    Theorem2,
    OddOrder,
    Cor1,
    Cor2,
    LemmaA,
    LemmaB,
    LemmaC,
    LemmaD,
    LemmaE,
    LemmaF,
    LemmaG,
    LemmaH,
    LemmaI,
    LemmaJ,
    LemmaK,
    LemmaL,
    LemmaM,
    Claim2,
    Claim9,
    Claim10,
    Covering,
}

impl Claim {
    pub const ALL: [Claim; 22] = [
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::OddOrder,
        Claim::Cor1,
        Claim::Cor2,
        Claim::LemmaA,
        Claim::LemmaB,
        Claim::LemmaC,
        Claim::LemmaD,
        Claim::LemmaE,
        Claim::LemmaF,
        Claim::LemmaG,
        Claim::LemmaH,
        Claim::LemmaI,
        Claim::LemmaJ,
        Claim::LemmaK,
        Claim::LemmaL,
        Claim::LemmaM,
        Claim::Claim2,
        Claim::Claim9,
        Claim::Claim10,
        Claim::Covering,
    ];

    pub const LEMMAS: [Claim; 13] = [
        Claim::LemmaA,
        Claim::LemmaB,
        Claim::LemmaC,
        Claim::LemmaD,
        Claim::LemmaE,
        Claim::LemmaF,
        Claim::LemmaG,
        Claim::LemmaH,
        Claim::LemmaI,
        Claim::LemmaJ,
        Claim::LemmaK,
        Claim::LemmaL,
        Claim::LemmaM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::OddOrder => "odd_order",
            Claim::Cor1 => "cor1",
            Claim::Cor2 => "cor2",
            Claim::LemmaA => "lemma_a",
            Claim::LemmaB => "lemma_b",
            Claim::LemmaC => "lemma_c",
            Claim::LemmaD => "lemma_d",
            Claim::LemmaE => "lemma_e",
            Claim::LemmaF => "lemma_f",
            Claim::LemmaG => "lemma_g",
            Claim::LemmaH => "lemma_h",
            Claim::LemmaI => "lemma_i",
            Claim::LemmaJ => "lemma_j",
            Claim::LemmaK => "lemma_k",
            Claim::LemmaL => "lemma_l",
            Claim::LemmaM => "lemma_m",
            Claim::Claim2 => "claim2",
            Claim::Claim9 => "claim9",
            Claim::Claim10 => "claim10",
            Claim::Covering => "covering",
        }
    }

    /// Claims evaluated once per group rather than per subgroup.
    pub fn is_group_level(self) -> bool {
        matches!(self, Claim::Cor2 | Claim::Covering)
    }

    /// Claims that need character tables.
    pub fn needs_characters(self) -> bool {
        matches!(self, Claim::Theorem1 | Claim::LemmaL | Claim::LemmaM)
    }

    /// Whether the claim also runs on the trivial subgroup.
    fn allows_trivial(self) -> bool {
        matches!(self, Claim::OddOrder)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown claim `{s}`")))
    }
}

/// Parses a comma-separated claim list; `all` and `lemmas` are accepted as groups.
pub fn parse_claims(list: &str) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "all" => out.extend(Claim::ALL),
            "lemmas" => out.extend(Claim::LEMMAS),
            other => out.push(other.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Vacuous,
    Violation,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Vacuous => "VACUOUS",
            Status::Violation => "VIOLATION",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one claim on one pair. Skipped reports carry their reason
/// under `details["reason"]`; every report records whether the claim's
/// hypothesis held under `details["hypothesis"]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group_label: String,
    pub group_order: usize,
    pub subgroup_index: Option<usize>,
    pub subgroup_order: Option<usize>,
    pub claim: Claim,
    pub status: Status,
    pub details: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn hypothesis_held(&self) -> bool {
        self.details.get("hypothesis").and_then(Value::as_bool).unwrap_or(false)
    }
}

/// A group together with data shared by every pair built on it.
pub struct GroupContext {
    pub label: String,
    pub table: GroupTable,
    pub classes: ConjClassPartition,
    pub limits: ChartabLimits,
    pub subgroup_cap: usize,
    chars: OnceLock<std::result::Result<CharacterTable, Skip>>,
    subgroups: OnceLock<std::result::Result<Vec<ElementSet>, Skip>>,
    normal: OnceLock<Vec<ElementSet>>,
    center: OnceLock<ElementSet>,
    derived: OnceLock<ElementSet>,
}

/// Why a computation could not run: a cap (reported as SKIPPED) or a hard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Skip {
    Cap(String),
    Hard(String),
}

impl Skip {
    fn from_error(e: Error) -> Skip {
        match e {
            Error::CharacterTableLimit { .. } | Error::SubgroupCapExceeded { .. } | Error::OrderCapExceeded { .. } => {
                Skip::Cap(e.to_string())
            }
            other => Skip::Hard(other.to_string()),
        }
    }
}

impl GroupContext {
    pub fn new(label: impl Into<String>, table: GroupTable) -> Self {
        let classes = conjugacy_classes(&table);
        GroupContext {
            label: label.into(),
            table,
            classes,
            limits: ChartabLimits::default(),
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            chars: OnceLock::new(),
            subgroups: OnceLock::new(),
            normal: OnceLock::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
        }
    }

    pub fn with_limits(mut self, limits: ChartabLimits, subgroup_cap: usize) -> Self {
        self.limits = limits;
        self.subgroup_cap = subgroup_cap;
        self
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// Installs a precomputed (e.g. cached) character table.
    pub fn set_character_table(&self, t: CharacterTable) {
        let _ = self.chars.set(Ok(t));
    }

    pub fn character_table(&self) -> std::result::Result<&CharacterTable, Skip> {
        self.chars
            .get_or_init(|| character_table_with(&self.table, &self.classes, self.limits).map_err(Skip::from_error))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The character table if it has been computed or installed.
    pub fn computed_character_table(&self) -> Option<&CharacterTable> {
        self.chars.get().and_then(|r| r.as_ref().ok())
    }

    pub fn subgroups(&self) -> std::result::Result<&[ElementSet], Skip> {
        self.subgroups
            .get_or_init(|| subgroups(&self.table, self.subgroup_cap).map_err(Skip::from_error))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Normal subgroups, in canonical subgroup order (empty if the lattice is capped).
    pub fn normal_subgroups(&self) -> &[ElementSet] {
        self.normal.get_or_init(|| match self.subgroups() {
            Ok(all) => all.iter().filter(|s| is_normal(&self.table, s)).cloned().collect(),
            Err(_) => Vec::new(),
        })
    }

    pub fn center(&self) -> &ElementSet {
        self.center.get_or_init(|| center(&self.table))
    }

    pub fn derived(&self) -> &ElementSet {
        self.derived.get_or_init(|| commutator_subgroup(&self.table))
    }

    fn report(
        &self,
        pair: Option<(usize, usize)>,
        claim: Claim,
        status: Status,
        details: BTreeMap<String, Value>,
    ) -> VerificationReport {
        VerificationReport {
            group_label: self.label.clone(),
            group_order: self.order(),
            subgroup_index: pair.map(|p| p.0),
            subgroup_order: pair.map(|p| p.1),
            claim,
            status,
            details,
        }
    }

    fn perm(&self, x: usize) -> Value {
        json!(self.table.element(x).to_string())
    }

    fn witness_details(&self, d: &mut BTreeMap<String, Value>, key: &str, v: &ConditionVerdict) {
        if let Some(w) = &v.witness {
            d.insert(
                key.to_string(),
                json!({
                    "x": w.x.map(|x| self.perm(x)),
                    "h": w.h.map(|h| self.perm(h)),
                    "detail": w.detail,
                }),
            );
        }
    }
}

/// One `(G, H)` pair with lazily computed verdicts shared across claims.
pub struct Pair<'a> {
    pub ctx: &'a GroupContext,
    pub index: usize,
    pub h: ElementSet,
    normal_closure: OnceLock<ElementSet>,
    h_normal: OnceLock<bool>,
    f: OnceLock<ConditionVerdict>,
    fpm: OnceLock<ConditionVerdict>,
    o: OnceLock<ConditionVerdict>,
    embedding: OnceLock<std::result::Result<(SubgroupEmbedding, CharacterTable), Skip>>,
    ci: OnceLock<std::result::Result<ConditionVerdict, Skip>>,
}

type Details = BTreeMap<String, Value>;

fn details() -> Details {
    BTreeMap::new()
}

fn put(d: &mut Details, key: &str, v: impl Into<Value>) {
    d.insert(key.to_string(), v.into());
}

impl<'a> Pair<'a> {
    pub fn new(ctx: &'a GroupContext, index: usize, h: ElementSet) -> Result<Self> {
        if !ctx.table.is_subgroup(&h) {
            return Err(Error::NotSubgroup);
        }
        Ok(Pair {
            ctx,
            index,
            h,
            normal_closure: OnceLock::new(),
            h_normal: OnceLock::new(),
            f: OnceLock::new(),
            fpm: OnceLock::new(),
            o: OnceLock::new(),
            embedding: OnceLock::new(),
            ci: OnceLock::new(),
        })
    }

    /// The pair at a canonical subgroup index.
    pub fn at(ctx: &'a GroupContext, index: usize) -> Result<Self> {
        let subs = ctx.subgroups().map_err(|s| match s {
            Skip::Cap(_) => Error::SubgroupCapExceeded { cap: ctx.subgroup_cap },
            Skip::Hard(m) => Error::Internal(m),
        })?;
        let h = subs
            .get(index)
            .ok_or(Error::IndexOutOfRange {
                index,
                size: subs.len(),
            })?
            .clone();
        Pair::new(ctx, index, h)
    }

    fn g(&self) -> &GroupTable {
        &self.ctx.table
    }

    fn admissible(&self) -> bool {
        !self.h.is_trivial() && !self.h.is_full()
    }

    fn require_admissible(&self) -> Result<()> {
        if self.admissible() {
            Ok(())
        } else {
            Err(Error::RejectedSubgroup("expected 1 < H < G"))
        }
    }

    fn report(&self, claim: Claim, status: Status, d: Details) -> VerificationReport {
        self.ctx.report(Some((self.index, self.h.len())), claim, status, d)
    }

    fn skipped(&self, claim: Claim, reason: Skip) -> Result<VerificationReport> {
        match reason {
            Skip::Cap(msg) => {
                let mut d = details();
                put(&mut d, "hypothesis", false);
                put(&mut d, "reason", msg);
                Ok(self.report(claim, Status::Skipped, d))
            }
            Skip::Hard(msg) => Err(Error::Internal(msg)),
        }
    }

    pub fn normal_closure(&self) -> &ElementSet {
        self.normal_closure.get_or_init(|| normal_closure(self.g(), &self.h))
    }

    pub fn h_is_normal(&self) -> bool {
        *self.h_normal.get_or_init(|| is_normal(self.g(), &self.h))
    }

    pub fn f(&self) -> &ConditionVerdict {
        self.f
            .get_or_init(|| satisfies_f(self.g(), &self.ctx.classes, &self.h).expect("admissible pair"))
    }

    pub fn fpm(&self) -> &ConditionVerdict {
        self.fpm
            .get_or_init(|| satisfies_fpm(self.g(), &self.ctx.classes, &self.h).expect("admissible pair"))
    }

    pub fn o(&self) -> &ConditionVerdict {
        self.o
            .get_or_init(|| satisfies_o(self.g(), &self.h).expect("proper subgroup"))
    }

    fn embedding(&self) -> std::result::Result<&(SubgroupEmbedding, CharacterTable), Skip> {
        self.embedding
            .get_or_init(|| {
                let emb = SubgroupEmbedding::new(self.g(), &self.ctx.classes, &self.h).map_err(Skip::from_error)?;
                let t = character_table_with(&emb.table, &emb.classes, self.ctx.limits).map_err(Skip::from_error)?;
                Ok((emb, t))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn ci(&self) -> std::result::Result<&ConditionVerdict, Skip> {
        self.ci
            .get_or_init(|| {
                let gt = self.ctx.character_table()?;
                let (emb, ht) = self.embedding()?;
                satisfies_ci(self.g(), &self.ctx.classes, gt, emb, ht).map_err(Skip::from_error)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Runs one claim on this pair.
    pub fn verify(&self, claim: Claim) -> Result<VerificationReport> {
        match claim {
            Claim::Theorem1 => self.verify_theorem1(),
            Claim::Theorem2 => self.verify_theorem2(),
            Claim::OddOrder => self.verify_odd_order(),
            Claim::Cor1 => self.verify_cor1(),
            Claim::LemmaA => self.lemma_quotients(claim),
            Claim::LemmaB => self.lemma_b(),
            Claim::LemmaC => self.lemma_c(),
            Claim::LemmaD => self.lemma_d(),
            Claim::LemmaE => self.lemma_e(),
            Claim::LemmaF => self.lemma_f(),
            Claim::LemmaG => self.lemma_g(),
            Claim::LemmaH => self.lemma_h(),
            Claim::LemmaI => self.lemma_i(),
            Claim::LemmaJ => self.lemma_j(),
            Claim::LemmaK => self.lemma_k(),
            Claim::LemmaL => self.lemma_l(),
            Claim::LemmaM => self.lemma_m(),
            Claim::Claim2 => self.claim2(),
            Claim::Claim9 => self.claim9(),
            Claim::Claim10 => self.claim10(),
            Claim::Cor2 | Claim::Covering => Err(Error::BadParameter(format!("{claim} is a group-level claim"))),
        }
    }

    /// Runs the whole lemma suite.
    pub fn verify_lemma_suite(&self) -> Result<Vec<VerificationReport>> {
        Claim::LEMMAS.iter().map(|&c| self.verify(c)).collect()
    }

    fn implication(
        &self,
        claim: Claim,
        hypothesis: bool,
        conclusion: impl FnOnce(&mut Details) -> bool,
        mut d: Details,
    ) -> VerificationReport {
        put(&mut d, "hypothesis", hypothesis);
        if !hypothesis {
            return self.report(claim, Status::Vacuous, d);
        }
        let ok = conclusion(&mut d);
        put(&mut d, "conclusion", ok);
        self.report(claim, if ok { Status::Pass } else { Status::Violation }, d)
    }

    /// CI ⇔ F.
    pub fn verify_theorem1(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let ci = match self.ci() {
            Ok(v) => v,
            Err(s) => return self.skipped(Claim::Theorem1, s),
        };
        let f = self.f();
        let mut d = details();
        put(&mut d, "ci_holds", ci.holds);
        put(&mut d, "f_holds", f.holds);
        put(&mut d, "h_normal", self.h_is_normal());
        put(&mut d, "hypothesis", ci.holds || f.holds);
        self.ctx.witness_details(&mut d, "f_witness", f);
        if let Some(w) = &ci.witness {
            put(&mut d, "ci_witness", w.detail.clone());
        }
        let status = if ci.holds == f.holds {
            Status::Pass
        } else {
            Status::Violation
        };
        Ok(self.report(Claim::Theorem1, status, d))
    }

    /// F± ⇒ (G, N) satisfies F± and N is nilpotent, with N < G.
    pub fn verify_theorem2(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        Ok(self.implication(
            Claim::Theorem2,
            self.fpm().holds,
            |d| {
                let n = self.normal_closure();
                put(d, "n_order", n.len());
                let proper = !n.is_full();
                put(d, "n_proper", proper);
                if !proper {
                    return false;
                }
                let fpm_n = satisfies_fpm(g, &self.ctx.classes, n).expect("1 < N < G");
                put(d, "n_fpm", fpm_n.holds);
                self.ctx.witness_details(d, "n_fpm_witness", &fpm_n);
                let nil = is_nilpotent_subgroup(g, n);
                put(d, "n_nilpotent", nil);
                fpm_n.holds && nil
            },
            details(),
        ))
    }

    /// O ⇒ (O²(H) ⊴ G and G/O²(H) a 2-group) or H solvable.
    pub fn verify_odd_order(&self) -> Result<VerificationReport> {
        if self.h.is_full() {
            return Err(Error::RejectedSubgroup("expected H < G"));
        }
        let g = self.g();
        let o = self.o();
        let mut d = details();
        self.ctx.witness_details(&mut d, "o_witness", o);
        Ok(self.implication(
            Claim::OddOrder,
            o.holds,
            |d| {
                let o2 = o_upper_p_of(g, &self.h, 2).expect("2 is prime");
                let normal = is_normal(g, &o2);
                let two_group = normal && is_power_of((g.order() / o2.len()) as u64, 2);
                let solvable = is_solvable_subgroup(g, &self.h);
                put(d, "o2h_order", o2.len());
                put(d, "o2h_normal", normal);
                put(d, "quotient_2group", two_group);
                put(d, "h_solvable", solvable);
                two_group || solvable
            },
            d,
        ))
    }

    /// Equal-order cosets ⇒ H solvable, or O²(G) ≤ H, H subnormal, G∖H all
    /// 2-elements and (N_G(H), H) an equal order pair.
    pub fn verify_cor1(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        let hyp = equal_order_coset(g, &self.h)?;
        Ok(self.implication(
            Claim::Cor1,
            hyp.holds,
            |d| {
                let solvable = is_solvable_subgroup(g, &self.h);
                put(d, "h_solvable", solvable);
                let o2g = o_upper_p(g, 2).expect("2 is prime");
                let contains = o2g.is_subset(&self.h);
                let subnormal = is_subnormal(g, &self.h);
                let two_elements = (0..g.order())
                    .filter(|&x| !self.h.contains(x))
                    .all(|x| is_power_of(g.element_order(x), 2));
                let nh = normalizer(g, &self.h);
                // (N_G(H), H): the coset clause inside N_G(H)
                let nt = g.subgroup_table(&nh).expect("normalizer is a subgroup");
                let local_h = nh.restrict(&self.h);
                let pair_ok = cosets_have_equal_orders(&nt, &local_h);
                put(d, "o2g_in_h", contains);
                put(d, "h_subnormal", subnormal);
                put(d, "outside_2_elements", two_elements);
                put(d, "normalizer_order", nh.len());
                put(d, "normalizer_equal_order", pair_ok);
                solvable || (contains && subnormal && two_elements && pair_ok)
            },
            details(),
        ))
    }

    fn for_normal_quotients(&self, d: &mut Details, fpm: bool) -> bool {
        let g = self.g();
        let mut checked = 0;
        for m in self.ctx.normal_subgroups() {
            if self.h.is_subset(m) {
                continue;
            }
            if !(m.is_subset(&self.h) && m.len() < self.h.len()) {
                put(d, "bad_m_order", m.len());
                put(d, "bad_m", "M is not a proper subgroup of H");
                return false;
            }
            if m.is_trivial() {
                continue;
            }
            let q = quotient(g, m).expect("normal subgroup");
            let qh = q.map_set(&self.h);
            let qc = conjugacy_classes(&q.table);
            let v = if fpm {
                satisfies_fpm(&q.table, &qc, &qh)
            } else {
                satisfies_f(&q.table, &qc, &qh)
            }
            .expect("1 < H/M < G/M");
            checked += 1;
            if !v.holds {
                put(d, "bad_m_order", m.len());
                put(d, "bad_quotient", v.witness.map(|w| w.detail).unwrap_or_default());
                return false;
            }
        }
        put(d, "quotients_checked", checked);
        true
    }

    /// (a) F ⇒ every normal M with H ⊄ M satisfies M < H, and F passes to G/M.
    fn lemma_quotients(&self, claim: Claim) -> Result<VerificationReport> {
        self.require_admissible()?;
        if let Err(s) = self.ctx.subgroups() {
            return self.skipped(claim, s);
        }
        Ok(self.implication(
            claim,
            self.f().holds,
            |d| self.for_normal_quotients(d, false),
            details(),
        ))
    }

    /// (b) F ⇒ Z(G) ≤ H ≤ G'.
    fn lemma_b(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        Ok(self.implication(
            Claim::LemmaB,
            self.f().holds,
            |d| {
                let z = self.ctx.center().is_subset(&self.h);
                let dd = self.h.is_subset(self.ctx.derived());
                put(d, "center_in_h", z);
                put(d, "h_in_derived", dd);
                z && dd
            },
            details(),
        ))
    }

    /// (c) F± with H non-normal ⇒ N = ∪ H^g and 1 < N < G.
    fn lemma_c(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let mut d = details();
        put(&mut d, "f_holds", self.f().holds);
        Ok(self.implication(
            Claim::LemmaC,
            self.fpm().holds && !self.h_is_normal(),
            |d| {
                let n = self.normal_closure();
                let union = derangements(self.g(), &self.ctx.classes, &self.h).complement();
                let eq = *n == union;
                put(d, "n_order", n.len());
                put(d, "union_size", union.len());
                eq && !n.is_trivial() && !n.is_full()
            },
            d,
        ))
    }

    /// (d) F ⇒ (G, N) is a Camina pair.
    fn lemma_d(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        Ok(self.implication(
            Claim::LemmaD,
            self.f().holds,
            |d| {
                let v = is_camina_pair(self.g(), &self.ctx.classes, self.normal_closure()).expect("subgroup");
                self.ctx.witness_details(d, "camina_witness", &v);
                v.holds
            },
            details(),
        ))
    }

    /// (e) F, H non-normal ⇒ N nilpotent, and G Frobenius with kernel N or N a p-group.
    fn lemma_e(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        Ok(self.implication(
            Claim::LemmaE,
            self.f().holds && !self.h_is_normal(),
            |d| {
                let g = self.g();
                let n = self.normal_closure();
                let nil = is_nilpotent_subgroup(g, n);
                let frob = is_frobenius_with_kernel(g, n);
                let pgroup = prime_divisors(n.len() as u64).len() == 1;
                put(d, "n_order", n.len());
                put(d, "n_nilpotent", nil);
                put(d, "frobenius_kernel", frob);
                put(d, "n_p_group", pgroup);
                nil && (frob || pgroup)
            },
            details(),
        ))
    }

    /// (f) F, H non-normal ⇒ H ⊴ N and N/H abelian.
    fn lemma_f(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        Ok(self.implication(
            Claim::LemmaF,
            self.f().holds && !self.h_is_normal(),
            |d| {
                let g = self.g();
                let n = self.normal_closure();
                let normal = is_normal_in(g, n, &self.h);
                let abelian = derived_subgroup_of(g, n).is_subset(&self.h);
                put(d, "h_normal_in_n", normal);
                put(d, "quotient_abelian", abelian);
                normal && abelian
            },
            details(),
        ))
    }

    /// (g) F±, H non-normal ⇒ quotient stability for F± and Z(G) < H < G'.
    fn lemma_g(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        if let Err(s) = self.ctx.subgroups() {
            return self.skipped(Claim::LemmaG, s);
        }
        Ok(self.implication(
            Claim::LemmaG,
            self.fpm().holds && !self.h_is_normal(),
            |d| {
                let quotients = self.for_normal_quotients(d, true);
                let z = self.ctx.center();
                let der = self.ctx.derived();
                let lower = z.is_subset(&self.h) && z.len() < self.h.len();
                let upper = self.h.is_subset(der) && self.h.len() < der.len();
                put(d, "center_strictly_in_h", lower);
                put(d, "h_strictly_in_derived", upper);
                quotients && lower && upper
            },
            details(),
        ))
    }

    /// (h) F±, H non-normal ⇒ KN ⊆ K ∪ K⁻¹ for every derangement class K.
    fn lemma_h(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        Ok(self.implication(
            Claim::LemmaH,
            self.fpm().holds && !self.h_is_normal(),
            |d| {
                let g = self.g();
                let cl = &self.ctx.classes;
                let n = self.normal_closure();
                let delta = derangements(g, cl, &self.h);
                let mut checked = 0;
                for c in 0..cl.len() {
                    if !delta.contains(cl.rep(c)) {
                        continue;
                    }
                    let k = cl.class_set(c);
                    let allowed = k.union(&cl.class_set(cl.inverse_class(c)));
                    checked += 1;
                    if !set_product(g, &k, n).is_subset(&allowed) {
                        put(d, "bad_class_rep", self.ctx.perm(cl.rep(c)));
                        return false;
                    }
                }
                put(d, "classes_checked", checked);
                true
            },
            details(),
        ))
    }

    /// (i) G a p-group with F or F± ⇒ H ⊴ G.
    fn lemma_i(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let pgroup = prime_divisors(self.g().order() as u64).len() == 1;
        let mut d = details();
        put(&mut d, "g_p_group", pgroup);
        Ok(self.implication(
            Claim::LemmaI,
            pgroup && self.fpm().holds,
            |d| {
                put(d, "f_holds", self.f().holds);
                self.h_is_normal()
            },
            d,
        ))
    }

    /// (j) For each prime p: G∖H all p-singular ⇔ O^p(H) ⊴ G with G/O^p(H) a
    /// p-group; when it holds, H is subnormal and G∖O^p(H) is all p-singular.
    fn lemma_j(&self) -> Result<VerificationReport> {
        if self.h.is_full() {
            return Err(Error::RejectedSubgroup("expected H < G"));
        }
        let g = self.g();
        let mut d = details();
        let mut ok = true;
        let mut fired = false;
        let mut per_prime = serde_json::Map::new();
        for p in prime_divisors(g.order() as u64) {
            let lhs = (0..g.order())
                .filter(|&x| !self.h.contains(x))
                .all(|x| g.element_order(x).is_multiple_of(p));
            let op = o_upper_p_of(g, &self.h, p).expect("prime");
            let rhs = is_normal(g, &op) && is_power_of((g.order() / op.len()) as u64, p);
            let mut part2 = true;
            if lhs && rhs {
                fired = true;
                let subnormal = is_subnormal(g, &self.h);
                let singular = (0..g.order())
                    .filter(|&x| !op.contains(x))
                    .all(|x| g.element_order(x).is_multiple_of(p));
                part2 = subnormal && singular;
            }
            ok &= lhs == rhs && part2;
            per_prime.insert(
                p.to_string(),
                json!({ "p_singular": lhs, "op_normal_p_quotient": rhs, "part2": part2 }),
            );
        }
        put(&mut d, "primes", Value::Object(per_prime));
        put(&mut d, "hypothesis", fired);
        Ok(self.report(Claim::LemmaJ, if ok { Status::Pass } else { Status::Violation }, d))
    }

    /// (k) O ⇒ (G, O²(H)) satisfies O.
    fn lemma_k(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        Ok(self.implication(
            Claim::LemmaK,
            self.o().holds,
            |d| {
                let o2 = o_upper_p_of(g, &self.h, 2).expect("prime");
                let v = satisfies_o(g, &o2).expect("O²(H) < G");
                put(d, "o2h_order", o2.len());
                self.ctx.witness_details(d, "o_witness", &v);
                v.holds
            },
            details(),
        ))
    }

    /// `Irr(G|H)` members with `[χ_H, 1_H]`, as (index, multiplicity).
    fn over_h(&self, gt: &CharacterTable, emb: &SubgroupEmbedding, ht: &CharacterTable) -> Vec<(usize, i64)> {
        let kernel_classes =
            |chi: &crate::chartab::ClassFunction| emb.fusion.iter().all(|&c| chi.values[c] == chi.values[0]);
        gt.irreducibles
            .iter()
            .enumerate()
            .filter(|(_, chi)| !kernel_classes(chi))
            .map(|(i, chi)| {
                let r = restrict(chi, emb);
                (i, ht.inner_product(&r, &ht.trivial()).as_integer().unwrap_or(-1))
            })
            .collect()
    }

    /// (l) CI, and `[χ_H, 1_H] = 0` for all χ ∈ Irr(G|H) ⇒ H ⊴ G.
    fn lemma_l(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let ci = match self.ci() {
            Ok(v) => v.holds,
            Err(s) => return self.skipped(Claim::LemmaL, s),
        };
        let gt = match self.ctx.character_table() {
            Ok(t) => t,
            Err(s) => return self.skipped(Claim::LemmaL, s),
        };
        let (emb, ht) = match self.embedding() {
            Ok(e) => e,
            Err(s) => return self.skipped(Claim::LemmaL, s),
        };
        let over = self.over_h(gt, emb, ht);
        let antecedent = over.iter().all(|&(_, m)| m == 0);
        let mut d = details();
        put(&mut d, "ci_holds", ci);
        put(&mut d, "all_restrictions_avoid_trivial", antecedent);
        Ok(self.implication(
            Claim::LemmaL,
            ci && antecedent,
            |d| {
                put(d, "h_normal", self.h_is_normal());
                self.h_is_normal()
            },
            d,
        ))
    }

    /// (m) CI, H non-normal ⇒ every χ ∈ Irr(G|N) is constant on xH for x ∈ N∖H.
    fn lemma_m(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let ci = match self.ci() {
            Ok(v) => v.holds,
            Err(s) => return self.skipped(Claim::LemmaM, s),
        };
        let gt = match self.ctx.character_table() {
            Ok(t) => t,
            Err(s) => return self.skipped(Claim::LemmaM, s),
        };
        Ok(self.implication(
            Claim::LemmaM,
            ci && !self.h_is_normal(),
            |d| {
                let g = self.g();
                let cl = &self.ctx.classes;
                let n = self.normal_closure();
                let mut pairs = std::collections::BTreeSet::new();
                for x in n.iter().filter(|&x| !self.h.contains(x)) {
                    for y in self.h.iter() {
                        let a = cl.class_of(x);
                        let b = cl.class_of(g.mul(x, y));
                        if a != b {
                            pairs.insert((a, b));
                        }
                    }
                }
                let over_n: Vec<usize> = (0..gt.len())
                    .filter(|&i| {
                        let chi = &gt.irreducibles[i];
                        n.iter().any(|x| chi.values[cl.class_of(x)] != chi.values[0])
                    })
                    .collect();
                put(d, "irr_over_n", over_n.len());
                for &i in &over_n {
                    let chi = &gt.irreducibles[i];
                    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| chi.values[a] != chi.values[b]) {
                        put(d, "bad_character", i);
                        put(d, "bad_classes", json!([a, b]));
                        return false;
                    }
                }
                true
            },
            details(),
        ))
    }

    /// Under O: every even-order g ∉ H has gH all even-order.
    fn claim2(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        Ok(self.implication(
            Claim::Claim2,
            self.o().holds,
            |d| {
                for x in (0..g.order()).filter(|&x| !self.h.contains(x) && g.element_order(x).is_multiple_of(2)) {
                    if let Some(y) = self.h.iter().find(|&y| g.element_order(g.mul(x, y)) % 2 == 1) {
                        put(d, "x", self.ctx.perm(x));
                        put(d, "h", self.ctx.perm(y));
                        return false;
                    }
                }
                true
            },
            details(),
        ))
    }

    /// Derangement classes and classes meeting H, as class ids.
    fn class_split(&self) -> (Vec<usize>, Vec<usize>) {
        let cl = &self.ctx.classes;
        let delta = derangements(self.g(), cl, &self.h);
        let dclasses = (0..cl.len()).filter(|&c| delta.contains(cl.rep(c))).collect();
        let hclasses = (0..cl.len())
            .filter(|&c| cl.members(c).any(|x| self.h.contains(x)))
            .collect();
        (dclasses, hclasses)
    }

    /// Under O: for x ∈ Δ and y ∈ H, x^G y^G has the parity of o(x).
    fn claim9(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        let cl = &self.ctx.classes;
        Ok(self.implication(
            Claim::Claim9,
            self.o().holds,
            |d| {
                let (dclasses, hclasses) = self.class_split();
                let mut instances = 0;
                for &c in &dclasses {
                    let odd = cl.element_order(c) % 2 == 1;
                    for &k in &hclasses {
                        instances += 1;
                        let prod = class_product(g, cl, c, k).expect("valid classes");
                        if !prod.iter().all(|z| (g.element_order(z) % 2 == 1) == odd) {
                            put(d, "x", self.ctx.perm(cl.rep(c)));
                            put(d, "y", self.ctx.perm(cl.rep(k)));
                            return false;
                        }
                    }
                }
                put(d, "instances", instances);
                true
            },
            details(),
        ))
    }

    /// Under O: for x ∈ Δ and h ∈ H of opposite order parity, x^G h^G ⊆ Δ.
    fn claim10(&self) -> Result<VerificationReport> {
        self.require_admissible()?;
        let g = self.g();
        let cl = &self.ctx.classes;
        Ok(self.implication(
            Claim::Claim10,
            self.o().holds,
            |d| {
                let (dclasses, hclasses) = self.class_split();
                let delta = derangements(g, cl, &self.h);
                let mut instances = 0;
                for &c in &dclasses {
                    for &k in &hclasses {
                        if cl.element_order(c) % 2 == cl.element_order(k) % 2 {
                            continue;
                        }
                        instances += 1;
                        let prod = class_product(g, cl, c, k).expect("valid classes");
                        if !prod.is_subset(&delta) {
                            put(d, "x", self.ctx.perm(cl.rep(c)));
                            put(d, "h", self.ctx.perm(cl.rep(k)));
                            return false;
                        }
                    }
                }
                put(d, "instances", instances);
                true
            },
            details(),
        ))
    }
}

/// For every prime p dividing |G|: each p-element passing the
/// Baer–Suzuki-type scan lies in O_p(G).
pub fn verify_cor2(ctx: &GroupContext) -> VerificationReport {
    let g = &ctx.table;
    let mut d = details();
    let mut ok = true;
    let mut fired = 0usize;
    let mut per_prime = serde_json::Map::new();
    for p in prime_divisors(g.order() as u64) {
        let op = o_lower_p(g, p).expect("prime");
        let mut passing = Vec::new();
        for x in (0..g.order()).filter(|&x| is_power_of(g.element_order(x), p)) {
            if bs_hypothesis(g, x, p).expect("p-element").holds {
                passing.push(x);
                if !op.contains(x) {
                    ok = false;
                    put(&mut d, "x", ctx.perm(x));
                    put(&mut d, "p", p);
                }
            }
        }
        fired += passing.iter().filter(|&&x| x != 0).count();
        per_prime.insert(
            p.to_string(),
            json!({ "op_order": op.len(), "passing": passing.iter().map(|&x| ctx.perm(x)).collect::<Vec<_>>() }),
        );
    }
    put(&mut d, "primes", Value::Object(per_prime));
    put(&mut d, "hypothesis", fired > 0);
    ctx.report(None, Claim::Cor2, if ok { Status::Pass } else { Status::Violation }, d)
}

/// Least `m` with `C^m = G` for each nontrivial class (None if never).
pub fn covering_exponents(g: &GroupTable, classes: &ConjClassPartition, max_m: usize) -> Vec<Option<usize>> {
    (1..classes.len())
        .map(|c| {
            let k = classes.class_set(c);
            let mut power = k.clone();
            for m in 1..=max_m {
                if power.is_full() {
                    return Some(m);
                }
                let next = set_product(g, &power, &k);
                if next == power {
                    return None;
                }
                power = next;
            }
            None
        })
        .collect()
}

/// For nonabelian simple G: every nontrivial class has a power equal to G.
pub fn verify_covering(ctx: &GroupContext) -> VerificationReport {
    let g = &ctx.table;
    let simple = !g.is_abelian()
        && ctx
            .subgroups()
            .map(|_| ctx.normal_subgroups().len() == 2)
            .unwrap_or(false);
    let mut d = details();
    put(&mut d, "hypothesis", simple);
    if !simple {
        return ctx.report(None, Claim::Covering, Status::Vacuous, d);
    }
    let exps = covering_exponents(g, &ctx.classes, g.order());
    let ok = exps.iter().all(Option::is_some);
    put(&mut d, "exponents", json!(exps));
    ctx.report(
        None,
        Claim::Covering,
        if ok { Status::Pass } else { Status::Violation },
        d,
    )
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_order: usize,
    pub claims: Vec<Claim>,
    /// Character-dependent claims are SKIPPED above this order.
    pub char_max_order: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_order: 96,
            claims: Claim::ALL.to_vec(),
            char_max_order: usize::MAX,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub pass: usize,
    pub vacuous: usize,
    pub violation: usize,
    pub skipped: usize,
    /// Reports whose hypothesis held.
    pub fired: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub per_claim: BTreeMap<Claim, ClaimSummary>,
    pub groups: usize,
    pub pairs: usize,
    /// `(label, subgroup index)` of pairs where F holds with H not normal.
    pub non_normal_f_pairs: Vec<(String, usize)>,
}

impl SweepSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut s = SweepSummary::default();
        let mut groups = std::collections::BTreeSet::new();
        let mut pairs = std::collections::BTreeSet::new();
        for r in reports {
            groups.insert(r.group_label.clone());
            if let Some(i) = r.subgroup_index {
                pairs.insert((r.group_label.clone(), i));
            }
            let e = s.per_claim.entry(r.claim).or_default();
            match r.status {
                Status::Pass => e.pass += 1,
                Status::Vacuous => e.vacuous += 1,
                Status::Violation => e.violation += 1,
                Status::Skipped => e.skipped += 1,
            }
            if r.hypothesis_held() {
                e.fired += 1;
            }
            let flag = |k: &str| r.details.get(k).and_then(Value::as_bool);
            if r.claim == Claim::Theorem1 && flag("f_holds") == Some(true) && flag("h_normal") == Some(false) {
                s.non_normal_f_pairs
                    .push((r.group_label.clone(), r.subgroup_index.unwrap_or(0)));
            }
        }
        s.groups = groups.len();
        s.pairs = pairs.len();
        s
    }

    pub fn violations(&self) -> usize {
        self.per_claim.values().map(|c| c.violation).sum()
    }
}

enum Task<'a> {
    Group(&'a GroupContext),
    Pair(&'a GroupContext, usize),
}

fn run_task(task: &Task<'_>, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    match *task {
        Task::Group(ctx) => {
            let mut out = Vec::new();
            for &c in &cfg.claims {
                match c {
                    Claim::Cor2 => out.push(verify_cor2(ctx)),
                    Claim::Covering => out.push(verify_covering(ctx)),
                    _ => {}
                }
            }
            if let Err(Skip::Cap(msg)) = ctx.subgroups() {
                for &c in cfg.claims.iter().filter(|c| !c.is_group_level()) {
                    let mut d = details();
                    put(&mut d, "hypothesis", false);
                    put(&mut d, "reason", msg.clone());
                    out.push(ctx.report(None, c, Status::Skipped, d));
                }
            }
            Ok(out)
        }
        Task::Pair(ctx, index) => {
            let pair = Pair::at(ctx, index)?;
            let mut out = Vec::new();
            for &c in cfg.claims.iter().filter(|c| !c.is_group_level()) {
                if pair.h.is_full() || (pair.h.is_trivial() && !c.allows_trivial()) {
                    continue;
                }
                if c.needs_characters() && ctx.order() > cfg.char_max_order {
                    out.push(pair.skipped(
                        c,
                        Skip::Cap(format!(
                            "order {} above character cap {}",
                            ctx.order(),
                            cfg.char_max_order
                        )),
                    )?);
                    continue;
                }
                out.push(pair.verify(c)?);
            }
            Ok(out)
        }
    }
}

/// Runs the selected claims over every admissible pair of every group of
/// order at most `cfg.max_order`. Report order is by catalog position,
/// then subgroup index (group-level reports first), then claim.
pub fn sweep(groups: &[GroupContext], cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    let selected: Vec<&GroupContext> = groups.iter().filter(|g| g.order() <= cfg.max_order).collect();
    let mut tasks = Vec::new();
    for &ctx in &selected {
        tasks.push(Task::Group(ctx));
        if cfg.claims.iter().any(|c| !c.is_group_level()) {
            if let Ok(subs) = ctx.subgroups() {
                tasks.extend((0..subs.len()).map(|i| Task::Pair(ctx, i)));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let chunks: Vec<Result<Vec<VerificationReport>>> =
        pool.install(|| tasks.par_iter().map(|t| run_task(t, cfg)).collect());
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::workbench::catalog::builtin_table;

    fn ctx(label: &str) -> GroupContext {
        GroupContext::new(label, builtin_table(label).unwrap())
    }

    fn pair_for<'a>(c: &'a GroupContext, h: ElementSet) -> Pair<'a> {
        let idx = c.subgroups().unwrap().iter().position(|s| *s == h).unwrap();
        Pair::at(c, idx).unwrap()
    }

    fn transposition_subgroup(c: &GroupContext, n: usize) -> ElementSet {
        let t = c
            .table
            .index_of(&Permutation::from_cycles(n, &[vec![0, 1]]).unwrap())
            .unwrap();
        c.table.closure(&[t])
    }

    #[test]
    fn theorem1_examples() {
        let s3 = ctx("S3");
        let a3 = pair_for(&s3, s3.derived().clone());
        let r = a3.verify_theorem1().unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.hypothesis_held());
        let t = pair_for(&s3, transposition_subgroup(&s3, 3));
        let r = t.verify_theorem1().unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(!r.hypothesis_held());
        let q8 = ctx("Q8");
        let z = pair_for(&q8, q8.center().clone());
        assert_eq!(z.verify_theorem1().unwrap().status, Status::Pass);
    }

    #[test]
    fn theorem2_examples() {
        let q8 = ctx("Q8");
        assert_eq!(
            pair_for(&q8, q8.center().clone()).verify_theorem2().unwrap().status,
            Status::Pass
        );
        let s3 = ctx("S3");
        assert_eq!(
            pair_for(&s3, transposition_subgroup(&s3, 3))
                .verify_theorem2()
                .unwrap()
                .status,
            Status::Vacuous
        );
        assert_eq!(
            pair_for(&s3, s3.derived().clone()).verify_theorem2().unwrap().status,
            Status::Pass
        );
    }

    #[test]
    fn odd_order_and_cor1_examples() {
        let s3 = ctx("S3");
        assert_eq!(
            pair_for(&s3, s3.derived().clone()).verify_odd_order().unwrap().status,
            Status::Pass
        );
        assert_eq!(
            pair_for(&s3, s3.derived().clone()).verify_cor1().unwrap().status,
            Status::Pass
        );
        assert_eq!(
            pair_for(&s3, transposition_subgroup(&s3, 3))
                .verify_cor1()
                .unwrap()
                .status,
            Status::Vacuous
        );
        let q8 = ctx("Q8");
        assert_eq!(
            pair_for(&q8, q8.center().clone()).verify_cor1().unwrap().status,
            Status::Pass
        );
        let a5 = ctx("A5");
        let a4 = a5.subgroups().unwrap().iter().find(|s| s.len() == 12).unwrap().clone();
        let r = pair_for(&a5, a4).verify_odd_order().unwrap();
        assert_eq!(r.status, Status::Vacuous);
    }

    #[test]
    fn cor2_examples() {
        let s3 = ctx("S3");
        let r = verify_cor2(&s3);
        assert_eq!(r.status, Status::Pass);
        let passing = r.details["primes"]["3"]["passing"].as_array().unwrap();
        assert_eq!(passing.len(), 3);
        assert_eq!(verify_cor2(&ctx("A4")).status, Status::Pass);
        assert_eq!(verify_cor2(&ctx("Q8")).status, Status::Pass);
    }

    #[test]
    fn lemma_examples() {
        let s3 = ctx("S3");
        let p = pair_for(&s3, s3.derived().clone());
        assert_eq!(p.verify(Claim::LemmaB).unwrap().status, Status::Pass);
        for c in [Claim::LemmaC, Claim::LemmaE, Claim::LemmaF] {
            assert_eq!(p.verify(c).unwrap().status, Status::Vacuous, "{c}");
        }
        let q8 = ctx("Q8");
        let r = pair_for(&q8, q8.center().clone()).verify(Claim::LemmaJ).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.details["primes"]["2"]["p_singular"], json!(true));
    }

    #[test]
    fn non_normal_f_pair_in_a4() {
        let a4 = ctx("A4");
        let h = a4.subgroups().unwrap().iter().find(|s| s.len() == 2).unwrap().clone();
        let p = pair_for(&a4, h);
        assert!(p.f().holds);
        assert!(!p.h_is_normal());
        for r in p.verify_lemma_suite().unwrap() {
            assert_ne!(r.status, Status::Violation, "{:?}", r);
        }
        for c in [
            Claim::LemmaC,
            Claim::LemmaD,
            Claim::LemmaE,
            Claim::LemmaF,
            Claim::LemmaM,
        ] {
            assert_eq!(p.verify(c).unwrap().status, Status::Pass, "{c}");
        }
    }

    #[test]
    fn covering_in_a5() {
        let a5 = ctx("A5");
        let exps = covering_exponents(&a5.table, &a5.classes, 10);
        assert!(exps.iter().all(|m| m.is_some_and(|m| m <= 10)));
        assert_eq!(verify_covering(&a5).status, Status::Pass);
        assert_eq!(verify_covering(&ctx("S4")).status, Status::Vacuous);
    }

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert_eq!(parse_claims("theorem1,lemmas").unwrap().len(), 14);
        assert!(parse_claims("theorem9").is_err());
    }

    #[test]
    fn empty_selection() {
        assert!(sweep(&[], &SweepConfig::default()).unwrap().is_empty());
    }
}
