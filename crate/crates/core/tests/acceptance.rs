//! Acceptance checks. Prints one line per criterion and exits non-zero on
//! any unexpected failure.

mod common;

use std::collections::HashSet;
use std::process::{Command, ExitCode};

use camina::chartab::{character_table_with, induce, restrict, ChartabLimits, SubgroupEmbedding};
use camina::conditions::{is_camina_pair, satisfies_f, satisfies_fpm};
use camina::perm::Permutation;
use camina::structure::{center, commutator_subgroup, conjugacy_classes, subgroups};
use camina::verify::{
    covering_exponents, sweep, Claim, GroupContext, Pair, Status, SweepConfig, SweepSummary, VerificationReport,
};
use camina::workbench::catalog::builtin_table;
use common::{builtin_contexts, builtin_tables, Raw};

enum Outcome {
    Pass(String),
    /// Criterion fails for a documented mathematical reason that the suite re-confirmed.
    Confirmed(String),
    Fail(String),
}

fn run_sweep(max: usize, claims: &[Claim], char_max: usize) -> Vec<VerificationReport> {
    let ctxs = builtin_contexts(max);
    let cfg = SweepConfig {
        max_order: max,
        claims: claims.to_vec(),
        char_max_order: char_max,
        jobs: 4,
    };
    sweep(&ctxs, &cfg).expect("sweep")
}

fn criterion_1() -> Outcome {
    let mut groups = 0;
    for (label, g) in builtin_tables(200) {
        let cl = conjugacy_classes(&g);
        let t = match character_table_with(&g, &cl, ChartabLimits::default()) {
            Ok(t) => t,
            Err(e) => return Outcome::Fail(format!("{label}: {e}")),
        };
        if let Err(e) = t.check_orthogonality() {
            return Outcome::Fail(format!("{label}: {e}"));
        }
        // class count by Burnside: k = (1/|G|) Σ_x |C_G(x)|, on raw permutations
        let raw = Raw::new(&g);
        let fixed: usize = raw
            .elems
            .iter()
            .map(|x| raw.elems.iter().filter(|y| Raw::mul(x, y) == Raw::mul(y, x)).count())
            .sum();
        if fixed / g.order() != t.len() {
            return Outcome::Fail(format!("{label}: {} rows vs {} classes", t.len(), fixed / g.order()));
        }
        let degrees: Vec<u64> = t.degrees().iter().map(|&d| d as u64).collect();
        match t.decompose(&t.regular_character()) {
            Ok(m) if m == degrees => {}
            other => return Outcome::Fail(format!("{label}: regular decomposition {other:?} vs {degrees:?}")),
        }
        if degrees.iter().any(|d| !(g.order() as u64).is_multiple_of(*d)) {
            return Outcome::Fail(format!("{label}: degree does not divide order"));
        }
        groups += 1;
    }
    Outcome::Pass(format!("{groups} groups, orthogonality and degree oracle exact"))
}

fn criterion_2() -> Outcome {
    let mut checks = 0usize;
    for (label, g) in builtin_tables(60) {
        let cl = conjugacy_classes(&g);
        let gt = character_table_with(&g, &cl, ChartabLimits::default()).unwrap();
        for h in subgroups(&g, 100_000).unwrap() {
            let emb = SubgroupEmbedding::new(&g, &cl, &h).unwrap();
            let ht = character_table_with(&emb.table, &emb.classes, ChartabLimits::default()).unwrap();
            for theta in &ht.irreducibles {
                let up = induce(g.order(), &cl, &emb, theta).unwrap();
                for chi in &gt.irreducibles {
                    let lhs = gt.inner_product(&up, chi);
                    let rhs = ht.inner_product(theta, &restrict(chi, &emb));
                    if lhs.as_integer().is_none() || lhs.as_integer() != rhs.as_integer() {
                        return Outcome::Fail(format!("{label}, |H| = {}: {lhs:?} vs {rhs:?}", h.len()));
                    }
                    checks += 1;
                }
            }
        }
    }
    Outcome::Pass(format!("{checks} reciprocity identities"))
}

fn fired(reports: &[VerificationReport], label: &str, order: usize) -> bool {
    reports
        .iter()
        .any(|r| r.group_label == label && r.subgroup_order == Some(order) && r.hypothesis_held())
}

fn criterion_3() -> Outcome {
    let reports = run_sweep(96, &[Claim::Theorem1], usize::MAX);
    let s = SweepSummary::from_reports(&reports);
    let c = &s.per_claim[&Claim::Theorem1];
    if c.violation > 0 || c.skipped > 0 {
        return Outcome::Fail(format!("{} violations, {} skipped", c.violation, c.skipped));
    }
    if !(fired(&reports, "S3", 3) && fired(&reports, "Q8", 2)) {
        return Outcome::Fail("(S3, A3) or (Q8, Z) did not fire".into());
    }
    Outcome::Pass(format!(
        "{} pairs, 0 violations, CI/F held on {}, non-normal F pairs {:?}",
        c.pass, c.fired, s.non_normal_f_pairs
    ))
}

/// Independent confirmation of a theorem2 violation, using only raw
/// permutation arithmetic: F± holds, and the normal closure is proper and
/// not nilpotent.
fn confirm_theorem2_counterexample(r: &VerificationReport) -> Result<(), String> {
    let g = builtin_table(&r.group_label).map_err(|e| e.to_string())?;
    let ctx = GroupContext::new(r.group_label.clone(), g);
    let pair = Pair::at(&ctx, r.subgroup_index.ok_or("no index")?).map_err(|e| e.to_string())?;
    let raw = Raw::new(&ctx.table);
    let h: Vec<Permutation> = pair.h.iter().map(|i| ctx.table.element(i).clone()).collect();
    let hset: HashSet<Permutation> = h.iter().cloned().collect();
    for x in raw.elems.iter().filter(|x| !hset.contains(*x)) {
        for y in &h {
            let xy = Raw::mul(x, y);
            if !raw.conjugate(x, &xy) && !raw.conjugate(&x.inverse(), &xy) {
                return Err(format!("F± fails at x = {x}, h = {y}"));
            }
        }
    }
    let deg = ctx.table.degree();
    let conj: Vec<Permutation> = raw
        .elems
        .iter()
        .flat_map(|g| h.iter().map(move |y| y.conjugate(g).unwrap()))
        .collect();
    let n = Raw::generate(deg, &conj);
    if n.len() >= raw.elems.len() {
        return Err("normal closure is G".into());
    }
    if Raw::nilpotent(deg, &n) {
        return Err("normal closure is nilpotent".into());
    }
    Ok(())
}

/// The same pairs rebuilt as affine maps t ↦ at + b over Z/p, multipliers
/// of order dividing q, with no permutation code: H = {a = ±1} satisfies F±
/// and has trivial center.
fn affine_family_oracle(p: i64, q: i64) -> bool {
    let mults: Vec<i64> = (1..p).filter(|&a| pow_mod(a, q, p) == 1).collect();
    let group: Vec<(i64, i64)> = mults.iter().flat_map(|&a| (0..p).map(move |b| (a, b))).collect();
    let mul = |x: (i64, i64), y: (i64, i64)| ((x.0 * y.0) % p, (y.0 * x.1 + y.1) % p);
    let inv = |x: (i64, i64)| {
        let ai = pow_mod(x.0, p - 2, p);
        (ai, (p - (ai * x.1) % p) % p)
    };
    let conj = |x, y| group.iter().any(|&g| mul(mul(inv(g), x), g) == y);
    let in_h = |x: (i64, i64)| x.0 == 1 || x.0 == p - 1;
    let fpm = group.iter().filter(|&&x| !in_h(x)).all(|&x| {
        group
            .iter()
            .filter(|&&y| in_h(y))
            .all(|&y| conj(x, mul(x, y)) || conj(inv(x), mul(x, y)))
    });
    let h: Vec<(i64, i64)> = group.iter().copied().filter(|&x| in_h(x)).collect();
    let h_center = h.iter().filter(|&&z| h.iter().all(|&y| mul(z, y) == mul(y, z))).count();
    fpm && h_center == 1
}

fn pow_mod(a: i64, e: i64, p: i64) -> i64 {
    (0..e).fold(1, |acc, _| acc * a % p)
}

fn criterion_4() -> Outcome {
    let reports = run_sweep(128, &[Claim::Theorem2, Claim::OddOrder, Claim::Cor1], usize::MAX);
    let s = SweepSummary::from_reports(&reports);
    let count = |c: Claim| s.per_claim.get(&c).map(|x| x.violation).unwrap_or(0);
    if count(Claim::OddOrder) > 0 || count(Claim::Cor1) > 0 {
        return Outcome::Fail(format!(
            "odd_order {} and cor1 {} violations",
            count(Claim::OddOrder),
            count(Claim::Cor1)
        ));
    }
    let bad: Vec<&VerificationReport> = reports
        .iter()
        .filter(|r| r.claim == Claim::Theorem2 && r.status == Status::Violation)
        .collect();
    if bad.is_empty() {
        return Outcome::Pass("0 violations for theorem2, odd_order, cor1".into());
    }
    for r in &bad {
        if let Err(e) = confirm_theorem2_counterexample(r) {
            return Outcome::Fail(format!(
                "{} #{:?}: violation not confirmed: {e}",
                r.group_label, r.subgroup_index
            ));
        }
    }
    if !(affine_family_oracle(5, 4) && affine_family_oracle(13, 4)) {
        return Outcome::Fail("affine oracle disagrees".into());
    }
    let names: Vec<String> = bad
        .iter()
        .map(|r| format!("({}, |H| = {})", r.group_label, r.subgroup_order.unwrap_or(0)))
        .collect();
    Outcome::Confirmed(format!(
        "theorem2 has {} violations {}, each confirmed by brute force (F± holds, normal closure proper and non-nilpotent); odd_order and cor1 have 0",
        bad.len(),
        names.join(" ")
    ))
}

fn criterion_5() -> Outcome {
    let reports = run_sweep(128, &[Claim::Cor2], usize::MAX);
    let v = reports.iter().filter(|r| r.status == Status::Violation).count();
    if v > 0 {
        return Outcome::Fail(format!("{v} violations"));
    }
    let s3 = reports.iter().find(|r| r.group_label == "S3").unwrap();
    let passing: Vec<String> = s3.details["primes"]["3"]["passing"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    if !(passing.contains(&"(1,2,3)".to_string()) && passing.contains(&"(1,3,2)".to_string())) {
        return Outcome::Fail(format!("S3, p = 3 passing set {passing:?}"));
    }
    Outcome::Pass(format!(
        "{} groups, 0 violations, S3 p = 3 fires on both 3-cycles",
        reports.len()
    ))
}

fn criterion_6() -> Outcome {
    let s3 = builtin_table("S3").unwrap();
    let s3c = conjugacy_classes(&s3);
    if !is_camina_pair(&s3, &s3c, &commutator_subgroup(&s3)).unwrap().holds {
        return Outcome::Fail("(S3, A3) not Camina".into());
    }
    let q8 = builtin_table("Q8").unwrap();
    let q8c = conjugacy_classes(&q8);
    if !is_camina_pair(&q8, &q8c, &center(&q8)).unwrap().holds {
        return Outcome::Fail("(Q8, Z) not Camina".into());
    }
    if !satisfies_fpm(&q8, &q8c, &center(&q8)).unwrap().holds {
        return Outcome::Fail("(Q8, Z) fails F±".into());
    }
    let mut abelian_pairs = 0;
    for (label, g) in builtin_tables(usize::MAX) {
        if !g.is_abelian() {
            continue;
        }
        let cl = conjugacy_classes(&g);
        for h in subgroups(&g, 100_000).unwrap() {
            if h.is_trivial() || h.is_full() {
                continue;
            }
            abelian_pairs += 1;
            if satisfies_f(&g, &cl, &h).unwrap().holds {
                return Outcome::Fail(format!("F holds in abelian {label}"));
            }
        }
    }
    let f = builtin_table("Frob(7:3)").unwrap();
    let c7 = subgroups(&f, 1000).unwrap().into_iter().find(|s| s.len() == 7).unwrap();
    if !camina::structure::is_frobenius_with_kernel(&f, &c7) {
        return Outcome::Fail("Frob(7:3) kernel not detected".into());
    }
    Outcome::Pass(format!(
        "all fixtures hold; F fails on all {abelian_pairs} abelian pairs"
    ))
}

fn criterion_7() -> Outcome {
    let reports = run_sweep(96, &Claim::LEMMAS, 60);
    let s = SweepSummary::from_reports(&reports);
    let v = s.violations();
    if v > 0 {
        let first = reports.iter().find(|r| r.status == Status::Violation).unwrap();
        return Outcome::Fail(format!(
            "{v} violations, first {} #{:?} {}",
            first.group_label, first.subgroup_index, first.claim
        ));
    }
    let skipped_early = reports
        .iter()
        .any(|r| r.status == Status::Skipped && (r.group_order <= 60 || !r.claim.needs_characters()));
    if skipped_early {
        return Outcome::Fail("unexpected SKIPPED report".into());
    }
    let fired: usize = s.per_claim.values().map(|c| c.fired).sum();
    Outcome::Pass(format!(
        "{} reports, 0 violations, {fired} with hypothesis firing",
        reports.len()
    ))
}

fn criterion_8() -> Outcome {
    let a5 = builtin_table("A5").unwrap();
    let cl = conjugacy_classes(&a5);
    let exps = covering_exponents(&a5, &cl, 10);
    if exps.len() == 4 && exps.iter().all(|m| m.is_some_and(|m| m <= 10)) {
        Outcome::Pass(format!(
            "A5 covering exponents {:?}",
            exps.iter().flatten().collect::<Vec<_>>()
        ))
    } else {
        Outcome::Fail(format!("{exps:?}"))
    }
}

fn strip_timestamps(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("timestamp");
            v
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "8"] {
        let out = dir.path().join(format!("reports-{jobs}.jsonl"));
        let cache = dir.path().join(format!("cache-{jobs}"));
        let status = Command::new(env!("CARGO_BIN_EXE_camina"))
            .args(["--jobs", jobs, "--cache-dir"])
            .arg(&cache)
            .args([
                "verify",
                "--catalog",
                "builtin",
                "--max-order",
                "60",
                "--claims",
                "all",
                "--out",
            ])
            .arg(&out)
            .output()
            .unwrap();
        if !matches!(status.status.code(), Some(0) | Some(2)) {
            return Outcome::Fail(format!("jobs {jobs}: exit {:?}", status.status.code()));
        }
        outputs.push(std::fs::read_to_string(&out).unwrap());
    }
    let (a, b) = (strip_timestamps(&outputs[0]), strip_timestamps(&outputs[1]));
    let same_bytes = outputs[0]
        .lines()
        .zip(outputs[1].lines())
        .all(|(x, y)| x.split("\"timestamp\"").next() == y.split("\"timestamp\"").next());
    if a == b && same_bytes && !a.is_empty() {
        Outcome::Pass(format!("{} records identical for --jobs 1 and --jobs 8", a.len()))
    } else {
        Outcome::Fail("report files differ".into())
    }
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut unexpected = 0;
    for (n, f) in criteria {
        match f() {
            Outcome::Pass(msg) => println!("criterion {n}: PASS ({msg})"),
            Outcome::Confirmed(msg) => println!("criterion {n}: FAIL ({msg})"),
            Outcome::Fail(msg) => {
                unexpected += 1;
                println!("criterion {n}: FAIL ({msg})");
            }
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
