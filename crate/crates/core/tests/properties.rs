use proptest::prelude::*;

use camina::chartab::{
    character_table_mod, character_table_with, dixon_prime, exponent, induce, restrict, ChartabLimits,
    SubgroupEmbedding,
};
use camina::conditions::{derangements, equal_order_coset, is_camina_pair, satisfies_f, satisfies_fpm};
use camina::cyclotomic::CycInt;
use camina::perm::{ElementSet, GroupTable, Permutation};
use camina::structure::{centralizer, conjugacy_classes, is_normal, o_upper_p, p_decomposition, quotient, subgroups};
use camina::verify::{Claim, Status, VerificationReport};
use camina::workbench::groupfile::parse_cycles;
use camina::workbench::reports::{parse_records, write_records, ReportRecord};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..10).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// Random permutation groups of degree at most 6.
fn group() -> impl Strategy<Value = GroupTable> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 1..=3)))
        .prop_map(|(n, gens)| GroupTable::generate(n, &gens, 1000).unwrap())
}

fn small_group() -> impl Strategy<Value = GroupTable> {
    group().prop_filter("order at most 48", |g| g.order() <= 48)
}

fn cyc() -> impl Strategy<Value = CycInt> {
    (1u32..=12).prop_flat_map(|e| {
        prop::collection::vec(-5i64..=5, e as usize).prop_map(move |c| CycInt::from_exponent_counts(e, &c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative((a, b, c) in perm_triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(a in (1usize..12).prop_flat_map(perm)) {
        let back = parse_cycles(&a.to_string(), a.degree(), 1).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(Permutation::from_cycles(a.degree(), &a.cycles()).unwrap(), a);
    }

    #[test]
    fn group_table_is_closed(g in group()) {
        for a in 0..g.order() {
            prop_assert_eq!(g.inv(g.inv(a)), a);
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        let n = g.order().min(30);
        for a in 0..n {
            for b in 0..n {
                let raw = g.element(a).compose(g.element(b)).unwrap();
                prop_assert_eq!(g.index_of(&raw), Some(g.mul(a, b)));
                prop_assert_eq!(g.element_order(g.conj(a, b)), g.element_order(a));
            }
        }
    }

    #[test]
    fn left_cosets_partition(g in group(), seed in any::<prop::sample::Index>()) {
        let h = g.closure(&[seed.index(g.order())]);
        let mut seen = ElementSet::empty(g.order());
        let mut blocks = 0;
        for x in 0..g.order() {
            if seen.contains(x) {
                continue;
            }
            let c = g.left_coset(x, &h).unwrap();
            prop_assert_eq!(c.len(), h.len());
            prop_assert!(c.intersection(&seen).is_empty());
            seen = seen.union(&c);
            blocks += 1;
        }
        prop_assert_eq!(blocks * h.len(), g.order());
    }

    #[test]
    fn class_equation(g in group()) {
        let cl = conjugacy_classes(&g);
        prop_assert_eq!(cl.sizes().iter().sum::<usize>(), g.order());
        for c in 0..cl.len() {
            prop_assert_eq!(g.order() % cl.size(c), 0);
            prop_assert_eq!(cl.size(c) * centralizer(&g, cl.rep(c)).len(), g.order());
        }
    }

    #[test]
    fn p_decomposition_splits_orders(a in (1usize..12).prop_flat_map(perm), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let (x, y) = p_decomposition(&a, p).unwrap();
        prop_assert_eq!(x.compose(&y).unwrap(), a.clone());
        prop_assert_eq!(x.compose(&y).unwrap(), y.compose(&x).unwrap());
        prop_assert_eq!(x.order(), camina::modular::p_part(a.order(), p));
        prop_assert_eq!(y.order() * x.order(), a.order());
    }

    #[test]
    fn o_upper_p_is_idempotent(g in group(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let op = o_upper_p(&g, p).unwrap();
        prop_assert!(is_normal(&g, &op));
        prop_assert!(camina::modular::is_power_of((g.order() / op.len()) as u64, p));
        let inner = g.subgroup_table(&op).unwrap();
        prop_assert_eq!(o_upper_p(&inner, p).unwrap().len(), op.len());
    }

    #[test]
    fn quotient_orders(g in small_group()) {
        for m in subgroups(&g, 10_000).unwrap().iter().filter(|m| is_normal(&g, m)) {
            let q = quotient(&g, m).unwrap();
            prop_assert_eq!(q.table.order() * m.len(), g.order());
            for a in 0..g.order().min(12) {
                for b in 0..g.order().min(12) {
                    let ab = q.image[g.mul(a, b)] as usize;
                    prop_assert_eq!(ab, q.table.mul(q.image[a] as usize, q.image[b] as usize));
                }
            }
        }
    }

    #[test]
    fn cyclotomic_ring_axioms(a in cyc(), b in cyc(), c in cyc(), k in 1u64..50) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        let e = camina::modular::lcm(a.order() as u64, b.order() as u64);
        if camina::modular::gcd(k, e) == 1 {
            prop_assert_eq!(a.mul(&b).galois(k), a.galois(k).mul(&b.galois(k)));
        }
    }

    #[test]
    fn report_records_round_trip(index in proptest::option::of(0usize..500), fired in any::<bool>(), note in "[a-z(),0-9]{0,20}") {
        let mut details = std::collections::BTreeMap::new();
        details.insert("hypothesis".to_string(), serde_json::json!(fired));
        details.insert("note".to_string(), serde_json::json!(note));
        let r = VerificationReport {
            group_label: "A4".into(),
            group_order: 12,
            subgroup_index: index,
            subgroup_order: index.map(|_| 2),
            claim: Claim::LemmaM,
            status: Status::Vacuous,
            details,
        };
        let recs = vec![ReportRecord::new(r, "2026-01-01T00:00:00Z")];
        let mut buf = Vec::new();
        write_records(&recs, &mut buf).unwrap();
        prop_assert_eq!(parse_records(std::str::from_utf8(&buf).unwrap()).unwrap(), recs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn character_tables_are_exact(g in small_group()) {
        let cl = conjugacy_classes(&g);
        let t = character_table_with(&g, &cl, ChartabLimits::default()).unwrap();
        t.check_orthogonality().unwrap();
        prop_assert_eq!(t.len(), cl.len());
        for d in t.degrees() {
            prop_assert_eq!(g.order() as i64 % d, 0);
        }
        let e = exponent(&g);
        let q1 = dixon_prime(e, g.order() as u64);
        let mut q2 = q1 + e;
        while !camina::modular::is_prime(q2) {
            q2 += e;
        }
        let t2 = character_table_mod(&g, &cl, q2).unwrap();
        let mut r1 = t.irreducibles.clone();
        let mut r2 = t2.irreducibles.clone();
        r1.sort_by(|a, b| a.values.cmp(&b.values));
        r2.sort_by(|a, b| a.values.cmp(&b.values));
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn frobenius_reciprocity(g in small_group(), seed in any::<prop::sample::Index>()) {
        let cl = conjugacy_classes(&g);
        let gt = character_table_with(&g, &cl, ChartabLimits::default()).unwrap();
        let subs = subgroups(&g, 10_000).unwrap();
        let h = &subs[seed.index(subs.len())];
        let emb = SubgroupEmbedding::new(&g, &cl, h).unwrap();
        let ht = character_table_with(&emb.table, &emb.classes, ChartabLimits::default()).unwrap();
        for theta in &ht.irreducibles {
            let up = induce(g.order(), &cl, &emb, theta).unwrap();
            for chi in &gt.irreducibles {
                let lhs = gt.inner_product(&up, chi).as_integer();
                prop_assert!(lhs.is_some());
                prop_assert_eq!(lhs, ht.inner_product(theta, &restrict(chi, &emb)).as_integer());
            }
        }
    }

    #[test]
    fn clifford_single_multiplicity(g in small_group()) {
        let cl = conjugacy_classes(&g);
        let gt = character_table_with(&g, &cl, ChartabLimits::default()).unwrap();
        for n in subgroups(&g, 10_000).unwrap().iter().filter(|n| is_normal(&g, n)) {
            let emb = SubgroupEmbedding::new(&g, &cl, n).unwrap();
            let nt = character_table_with(&emb.table, &emb.classes, ChartabLimits::default()).unwrap();
            for chi in &gt.irreducibles {
                let m = nt.decompose(&restrict(chi, &emb)).unwrap();
                let nonzero: Vec<u64> = m.into_iter().filter(|&x| x > 0).collect();
                prop_assert!(nonzero.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }

    #[test]
    fn condition_chain(g in small_group()) {
        let cl = conjugacy_classes(&g);
        for h in subgroups(&g, 10_000).unwrap() {
            if h.is_trivial() || h.is_full() {
                continue;
            }
            let f = satisfies_f(&g, &cl, &h).unwrap();
            let fpm = satisfies_fpm(&g, &cl, &h).unwrap();
            let eq = equal_order_coset(&g, &h).unwrap();
            prop_assert!(!f.holds || fpm.holds);
            prop_assert!(!fpm.holds || eq.holds);
            if is_normal(&g, &h) {
                prop_assert_eq!(f.holds, is_camina_pair(&g, &cl, &h).unwrap().holds);
            }
            if let Some(w) = &f.witness {
                let (x, y) = (w.x.unwrap(), w.h.unwrap());
                prop_assert!(!h.contains(x) && h.contains(y));
                prop_assert_ne!(cl.class_of(g.mul(x, y)), cl.class_of(x));
            }
            if let Some(w) = &fpm.witness {
                let (x, y) = (w.x.unwrap(), w.h.unwrap());
                let c = cl.class_of(g.mul(x, y));
                prop_assert!(c != cl.class_of(x) && c != cl.class_of(g.inv(x)));
            }
            let d = derangements(&g, &cl, &h);
            for x in d.iter() {
                prop_assert!(d.contains(g.inv(x)));
                for k in 0..g.order() {
                    prop_assert!(d.contains(g.conj(x, k)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parsers_never_panic(text in "[ -~\n×^]{0,80}") {
        if let Ok(e) = camina::workbench::groupfile::parse_group_text(&text) {
            prop_assert!(e.generators.iter().all(|g| g.degree() == e.degree));
        }
        if let Ok(e) = camina::workbench::catalog::builtin(&text) {
            prop_assert!(e.generators.iter().all(|g| g.degree() == e.degree));
        }
        let _ = parse_records(&text);
    }

    #[test]
    fn labels_from_grammar(parts in prop::collection::vec(
        prop::sample::select(vec!["C", "D", "S", "A", "Q", "Frob(", "Heis(", "SL", "x", "^", ":", ")", "2", "3", "7", "13", "0"]), 1..8)) {
        let label: String = parts.concat();
        if let Ok(e) = camina::workbench::catalog::builtin(&label) {
            let _ = e.table(2000);
        }
    }
}
