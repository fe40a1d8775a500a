use hyperfuzz_core::crisp::{self, IdealSide};
use hyperfuzz_core::enumeration::{
    sample_structure_at, Domain, GridFuzzySpace, HyperoperationSpace, RelationSpace,
};
use hyperfuzz_core::fuzzy::{self, FuzzySubset, Grade};
use hyperfuzz_core::structures::{Carrier, CrispSubset, ElementId};
use hyperfuzz_core::textio;
use hyperfuzz_core::theorem::{self, TheoremId, VerifyDomain};
use proptest::prelude::*;

fn grade() -> impl Strategy<Value = Grade> {
    (1u64..=1_000_000).prop_flat_map(|d| (0..=d).prop_map(move |n| Grade::new(n, d).unwrap()))
}

fn structure() -> impl Strategy<Value = (usize, u64, u64)> {
    (1usize..=3, any::<u64>(), 0u64..1_000)
}

proptest! {
    #[test]
    fn complement_min_max_duality(g1 in grade(), g2 in grade()) {
        prop_assert_eq!(g1.min(g2).complement(), g1.complement().max(g2.complement()));
        prop_assert_eq!(g1.max(g2).complement(), g1.complement().min(g2.complement()));
        prop_assert_eq!(g1.complement().complement(), g1);
        prop_assert_eq!(g1 <= g2, g1.complement() >= g2.complement());
    }

    #[test]
    fn star_invariants((n, seed, idx) in structure(), ab in any::<(u64, u64)>()) {
        let (s, _) = sample_structure_at(n, seed, idx);
        let full = CrispSubset::full(n).bits();
        let a = CrispSubset::from_bits(ab.0 % full + 1);
        let b = CrispSubset::from_bits(ab.1 % full + 1);
        let prod = s.star(a, b).unwrap();
        prop_assert!(!prod.is_empty());
        for x in a {
            for y in b {
                prop_assert!(s.hyperproduct(x, y).is_subset(prod));
            }
        }
        for x in s.carrier().elements() {
            for y in s.carrier().elements() {
                prop_assert_eq!(
                    s.star(CrispSubset::singleton(x), CrispSubset::singleton(y)).unwrap(),
                    s.hyperproduct(x, y)
                );
            }
        }
    }

    #[test]
    fn predicate_laws((n, seed, idx) in structure(), bits in any::<u64>()) {
        let (s, r) = sample_structure_at(n, seed, idx);
        let a = CrispSubset::from_bits(bits % CrispSubset::full(n).bits() + 1);
        let left = crisp::is_ideal(&s, &r, a, IdealSide::Left).unwrap();
        let right = crisp::is_ideal(&s, &r, a, IdealSide::Right).unwrap();
        prop_assert_eq!(crisp::is_ideal(&s, &r, a, IdealSide::TwoSided).unwrap(), left && right);
        if left || right {
            prop_assert!(crisp::is_subgroupoid(&s, a).unwrap());
        }
        let profile = crisp::filter_condition_profile(&s, &r, a).unwrap();
        prop_assert_eq!(crisp::is_filter(&s, &r, a).unwrap(), profile.all());
        let chi = FuzzySubset::characteristic(s.carrier(), a);
        prop_assert_eq!(
            fuzzy::is_fuzzy_ideal(&s, &r, &chi, IdealSide::TwoSided).unwrap(),
            fuzzy::is_fuzzy_ideal(&s, &r, &chi, IdealSide::Left).unwrap()
                && fuzzy::is_fuzzy_ideal(&s, &r, &chi, IdealSide::Right).unwrap()
        );
    }

    #[test]
    fn structure_text_round_trip((n, seed, idx) in structure()) {
        let (s, r) = sample_structure_at(n, seed, idx);
        let text = textio::render_structure(&s, &r);
        prop_assert_eq!(textio::parse_structure(&text).unwrap(), (s, r));
    }

    #[test]
    fn fuzzy_text_round_trip(gs in proptest::collection::vec(grade(), 1..6)) {
        let c = Carrier::standard(gs.len()).unwrap();
        let f = FuzzySubset::new(c.clone(), gs).unwrap();
        prop_assert_eq!(textio::parse_fuzzy(&textio::render_fuzzy(&f), &c).unwrap(), f);
    }

    #[test]
    fn parser_never_panics(text in "(elements:|op:|le:|subset:|fuzzy:|->| |a|b|c|=|1/2|#|\n){0,40}") {
        let c = Carrier::standard(2).unwrap();
        if let Err(e) = textio::parse_structure(&text) {
            prop_assert!(!e.0.is_empty());
            prop_assert!(e.0.iter().all(|d| d.line >= 1 && d.column >= 1));
        }
        if let Err(e) = textio::parse_subset(&text, &c) {
            prop_assert!(!e.0.is_empty());
        }
        if let Err(e) = textio::parse_fuzzy(&text, &c) {
            prop_assert!(!e.0.is_empty());
        }
    }
}

#[test]
fn involution_and_order_reversal_on_grids() {
    let c = Carrier::standard(2).unwrap();
    for k in 1..=4 {
        for f in GridFuzzySpace::new(c.clone(), k).unwrap().iter() {
            let g = f.complement();
            assert_eq!(g.complement(), f);
            for x in c.elements() {
                for y in c.elements() {
                    assert_eq!(f.grade(x) <= f.grade(y), g.grade(x) >= g.grade(y));
                    assert_eq!(f.grade(x) == f.grade(y), g.grade(x) == g.grade(y));
                }
            }
        }
    }
}

#[test]
fn relation_ordinals_follow_bitmasks() {
    let space = RelationSpace::new(2).unwrap();
    for (i, r) in space.iter().enumerate() {
        assert_eq!(r.to_bits(), Some(i as u64));
    }
    let r = space.get(0b0010);
    assert!(r.relates(ElementId::new(0), ElementId::new(1)));
}

#[test]
fn verdicts_do_not_depend_on_worker_count() {
    let run = |threads: usize, t: TheoremId, domain: &VerifyDomain| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| theorem::verify(t, domain, 2).unwrap())
    };
    let domains = [
        VerifyDomain::Exhaustive { order: 2 },
        VerifyDomain::Sampled {
            order: 3,
            seed: 5,
            samples: 300,
        },
    ];
    for d in &domains {
        for t in [TheoremId::Prop678, TheoremId::Prop17] {
            assert_eq!(run(1, t, d), run(4, t, d));
        }
    }
}

#[test]
fn fixed_relation_range_over_order_three() {
    let r = hyperfuzz_core::BinaryRelation::from_bits(3, 0b100_010_001);
    let v = theorem::verify(
        TheoremId::Prop678,
        &VerifyDomain::FixedRelation {
            relation: r.clone(),
            range: Some(1_000..3_000),
        },
        1,
    )
    .unwrap();
    assert!(v.holds());
    assert_eq!(v.checks_performed, 2_000 * 7 * 3);
    let total = HyperoperationSpace::new(3).unwrap().total();
    assert!(theorem::verify(
        TheoremId::Prop6,
        &VerifyDomain::FixedRelation {
            relation: r,
            range: Some(total - 1..total + 1),
        },
        1,
    )
    .is_err());
}
