use std::collections::BTreeSet;

use holflag_core::classify::ExceptionRegistry;
use holflag_core::realform::{compact_roots, pplus_roots};
use holflag_core::rootsys::Character;
use holflag_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn types_up_to(rank: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to_rank(rank)
}

fn any_type(max_rank: usize) -> impl Strategy<Value = SimpleType> {
    prop::sample::select(types_up_to(max_rank))
}

fn type_and_vector(max_rank: usize, bound: i64) -> impl Strategy<Value = (SimpleType, Vec<i64>)> {
    any_type(max_rank)
        .prop_flat_map(move |t| (Just(t), prop::collection::vec(-bound..=bound, t.rank())))
}

fn type_and_nodes(max_rank: usize) -> impl Strategy<Value = (SimpleType, NodeSet)> {
    any_type(max_rank).prop_flat_map(|t| {
        let n = t.rank();
        (
            Just(t),
            prop::collection::btree_set(1..=n, 0..=n).prop_map(NodeSet::new),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pairing_signs_agree((t, v) in type_and_vector(5, 3), idx in any::<prop::sample::Index>()) {
        let rs = build_root_system(t);
        let r = idx.get(rs.roots()).clone();
        let (coroot, inner) = pair(&rs, &Weight::new(v), &r).unwrap();
        prop_assert_eq!(coroot.signum(), inner.signum());
        prop_assert_eq!(inner, coroot * rs.length_scale(&r));
    }

    #[test]
    fn negating_the_vector_swaps_u_and_ubar((t, v) in type_and_vector(4, 2)) {
        let rs = build_root_system(t);
        let w = Weight::new(v);
        let p = parabolic_from_vector(&rs, &w).unwrap();
        let q = parabolic_from_vector(&rs, &w.neg()).unwrap();
        prop_assert_eq!(p.u_roots(), q.ubar_roots());
        prop_assert_eq!(p.levi_roots(), q.levi_roots());
    }

    #[test]
    fn parabolic_partition_invariants((t, nodes) in type_and_nodes(4)) {
        let rs = build_root_system(t);
        let p = parabolic_from_nodes(&rs, &nodes).unwrap();
        prop_assert_eq!(p.levi_roots().len() + p.u_roots().len() + p.ubar_roots().len(), rs.roots().len());
        prop_assert_eq!(p.u_roots().len(), p.ubar_roots().len());
        for r in p.u_roots() {
            prop_assert!(r.is_positive());
            prop_assert!(p.ubar_roots().contains(&r.neg()));
        }
        for r in p.levi_roots() {
            prop_assert!(p.levi_roots().contains(&r.neg()));
        }
        // the Levi factor is spanned by the simple roots off the node set
        let levi_simple = (1..=t.rank()).filter(|j| !nodes.contains(*j)).count();
        let simple_in_levi = rs.positives().iter().filter(|r| r.height() == 1 && p.levi_roots().contains(*r)).count();
        prop_assert_eq!(simple_in_levi, levi_simple);
        prop_assert_eq!(p.is_borel(), nodes.len() == t.rank());
    }

    #[test]
    fn canonicalisation_is_idempotent((t, v) in type_and_vector(4, 3)) {
        let rs = build_root_system(t);
        let p = parabolic_from_vector(&rs, &Weight::new(v)).unwrap();
        let c = p.canonical();
        prop_assert_eq!(c.nodes(), p.nodes());
        let cc = c.canonical();
        prop_assert_eq!(cc.u_roots(), c.u_roots());
        prop_assert_eq!(c.u_roots().len(), p.u_roots().len());
        let dominant = rs.dominant_conjugate(p.lambda0());
        prop_assert!(dominant.is_dominant());
        prop_assert_eq!(rs.dominant_conjugate(&dominant), dominant);
    }

    #[test]
    fn freudenthal_total_matches_weyl_dimension((t, hw) in any_type(3).prop_flat_map(|t| (Just(t), prop::collection::vec(0i64..=2, t.rank())))) {
        let rs = build_root_system(t);
        let hw = Weight::new(hw);
        let ch = Character::new(&rs, &hw).unwrap();
        prop_assert_eq!(BigInt::from(ch.dimension()), weyl_dim(&rs, &hw).unwrap());
        prop_assert_eq!(ch.multiplicity(&hw), 1);
        // characters are Weyl-invariant
        for (mu, m) in ch.weights() {
            for i in 0..t.rank() {
                prop_assert_eq!(ch.multiplicity(&rs.reflect_weight(mu, i)), m);
            }
        }
    }

    #[test]
    fn hermitian_gate_fires_iff_hermitian_node_is_chosen(n in 2usize..=4, mask in 1u32..16) {
        let name = format!("sp({n},R)");
        let rf = lookup_real_form(&name).unwrap();
        let rs = build_root_system(rf.complex_type());
        let nodes: NodeSet = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        prop_assume!(!nodes.is_empty());
        let p = parabolic_from_nodes(&rs, &nodes).unwrap();
        let v = classify_hol(&rf, &p).unwrap();
        let gated = matches!(v.source, Some(Source::HermitianFibration | Source::HermitianSymmetric));
        prop_assert_eq!(gated, nodes.contains(n));
        if gated {
            let pplus = pplus_roots(&rf, &rs).unwrap();
            let expect = if &pplus == p.u_roots() { HolKind::Finite } else { HolKind::InfiniteDimensional };
            prop_assert_eq!(v.kind, expect);
        }
    }
}

#[test]
fn chain_search_is_monotone_in_node_sets() {
    // Enlarging the node set only enlarges u, so a chain for a subset stays
    // a chain for every superset.
    for t in types_up_to(5).into_iter().filter(|t| t.rank() >= 2) {
        let rs = build_root_system(t);
        if !rs.has_two_lengths() {
            continue;
        }
        let found: Vec<(NodeSet, bool)> = NodeSet::nonempty_subsets(t.rank())
            .into_iter()
            .map(|s| {
                let p = parabolic_from_nodes(&rs, &s).unwrap();
                let ok = find_killing_chain(&p).unwrap().is_some();
                (s, ok)
            })
            .collect();
        for (a, ok_a) in &found {
            for (b, ok_b) in &found {
                if *ok_a && a.is_subset(b) {
                    assert!(*ok_b, "{t}: chain for {a} but none for {b}");
                }
            }
        }
    }
}

#[test]
fn weyl_group_is_transitive_on_each_length_class() {
    for t in types_up_to(4) {
        let rs = build_root_system(t);
        let classes = if rs.has_two_lengths() {
            vec![LengthClass::Long, LengthClass::Short]
        } else {
            vec![LengthClass::Long]
        };
        let mut covered = BTreeSet::new();
        for cls in classes {
            let top = dominant_root(&rs, cls).unwrap();
            let orbit = weyl_orbit(&rs, &top).unwrap();
            let same: BTreeSet<Root> = rs
                .roots()
                .iter()
                .filter(|r| rs.length_class(r) == cls)
                .cloned()
                .collect();
            assert_eq!(orbit, same, "{t} {cls:?}");
            let dominant: Vec<_> = orbit
                .iter()
                .filter(|r| rs.root_to_weight(r).is_dominant())
                .collect();
            assert_eq!(dominant, vec![&top], "{t} {cls:?}");
            covered.extend(orbit);
        }
        assert_eq!(covered.len(), rs.roots().len());
    }
}

#[test]
fn compact_roots_are_closed_under_negation() {
    for name in [
        "so(2,3)", "so(4,5)", "sp(2,R)", "sp(1,3)", "su(2,3)", "g2-split", "so(4,4)", "so(2,6)",
    ] {
        let rf = lookup_real_form(name).unwrap();
        let rs = build_root_system(rf.complex_type());
        let k = compact_roots(&rf, &rs).unwrap();
        assert!(k.iter().all(|r| k.contains(&r.neg())), "{name}");
        // compact roots form a closed subsystem
        for a in &k {
            for b in &k {
                let s = a.add(b);
                if rs.contains(&s) {
                    assert!(k.contains(&s), "{name}: {a} + {b}");
                }
            }
        }
    }
}

#[test]
fn hermitian_symmetric_dimensions() {
    for p in 1..=4 {
        for q in 1..=4 {
            let rf = lookup_real_form(&format!("su({p},{q})")).unwrap();
            assert_eq!(repthy::hermitian_dim(&rf).unwrap(), p * q);
        }
    }
    for n in 1..=6 {
        let rf = lookup_real_form(&format!("sp({n},R)")).unwrap();
        assert_eq!(repthy::hermitian_dim(&rf).unwrap(), n * (n + 1) / 2);
    }
    // so(2,4) would be D3, realised only as su(2,2)
    for m in [3, 5, 6, 7, 8, 9] {
        let rf = lookup_real_form(&format!("so(2,{m})")).unwrap();
        assert_eq!(repthy::hermitian_dim(&rf).unwrap(), m, "so(2,{m})");
    }
}

#[test]
fn registry_agrees_with_sweeps() {
    let registry = ExceptionRegistry::standard();
    for t in types_up_to(6)
        .into_iter()
        .filter(|t| matches!(t.family(), Family::B | Family::C | Family::G))
    {
        let rs = build_root_system(t);
        let report = sweep_exceptions(&rs);
        let swept: BTreeSet<NodeSet> = report.exceptions.into_iter().collect();
        assert_eq!(swept, registry.node_patterns(t.family(), t.rank()), "{t}");
        registry.self_check(t.rank()).unwrap();
    }
}

#[test]
fn real_form_names_round_trip() {
    for name in [
        "so(2,3)",
        "so(4,5)",
        "sp(2,R)",
        "sp(1,2)",
        "su(2,2)",
        "sl(3,R)",
        "g2-split",
        "g2-compact",
        "so(7)",
        "sp(2)",
    ] {
        let rf = lookup_real_form(name).unwrap();
        let again = lookup_real_form(rf.name()).unwrap();
        assert_eq!(again.name(), rf.name());
        assert_eq!(again.complex_type(), rf.complex_type());
        assert_eq!(again.painted(), rf.painted());
    }
}
