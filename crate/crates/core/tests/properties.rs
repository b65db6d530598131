//! Randomised invariants, each compared against the plain oracles in
//! `common` where one exists.

mod common;

use std::collections::BTreeSet;

use common::{classify, is_iasgl, set, subsets, sumset as oracle_sumset, to_set, Set};
use iasgl::io::Document;
use iasgl::{
    build_realisation, highest_rung, search_iasgl, structural_gate, sumset, verify_iasgl, verify_iasi, verify_iasl,
    Graph, GroundSet, IntegerSet, Labeling, Rung, SearchConfig, SearchStatus, SummandMode,
};
use proptest::prelude::*;

fn small_set(max: u64, len: usize) -> impl Strategy<Value = IntegerSet> {
    proptest::collection::btree_set(0..=max, 1..=len).prop_map(|s| IntegerSet::new(s))
}

fn ground(max: u64, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::btree_set(1..=max, (n.start() - 1)..=(n.end() - 1))
        .prop_map(|s| std::iter::once(0).chain(s).collect())
}

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order)
        .prop_flat_map(|order| {
            let pairs: Vec<(usize, usize)> =
                (0..order).flat_map(|i| (i + 1..order).map(move |j| (i, j))).collect();
            let k = pairs.len();
            (Just(order), proptest::sample::subsequence(pairs, 1..=k))
        })
        .prop_filter_map("isolated vertex", |(order, e)| Graph::from_edge_indices(order, e).ok())
}

/// A graph plus a labeling of it by subsets of `x`, injective or not.
fn labelled(x: Vec<u64>) -> impl Strategy<Value = (Graph, Labeling)> {
    let pool = subsets(&x);
    graph(6).prop_flat_map(move |g| {
        let ids: Vec<String> = g.ids().to_vec();
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let labels = proptest::collection::vec(proptest::sample::select(pool.clone()), ids.len());
        (Just(g), labels).prop_map(move |(g, ls)| {
            let f = Labeling::from_pairs(
                gx.clone(),
                ids.iter().cloned().zip(ls.into_iter().map(|s| IntegerSet::new(s))),
            )
            .unwrap();
            (g, f)
        })
    })
}

proptest! {
    #[test]
    fn sumset_matches_oracle_and_laws(a in small_set(40, 6), b in small_set(40, 6), c in 1u64..50) {
        let s = sumset(&a, &b).unwrap();
        prop_assert_eq!(to_set(&s), oracle_sumset(&to_set(&a), &to_set(&b)));
        prop_assert_eq!(&s, &sumset(&b, &a).unwrap());
        prop_assert_eq!(sumset(&a, &IntegerSet::zero()).unwrap(), a.clone());
        prop_assert!(s.len() >= a.len() + b.len() - 1);
        prop_assert!(s.len() <= a.len() * b.len());
        prop_assert_eq!(sumset(&a.scale(c).unwrap(), &b.scale(c).unwrap()).unwrap(), s.scale(c).unwrap());
    }

    #[test]
    fn ladder_is_monotone((g, f) in ground(6, 2..=3).prop_flat_map(labelled)) {
        let l = verify_iasl(&g, &f).unwrap().ok;
        let i = verify_iasi(&g, &f).unwrap().ok;
        let gl = verify_iasgl(&g, &f).unwrap().ok;
        prop_assert!(!gl || i);
        prop_assert!(!i || l);
        let (rung, violations) = highest_rung(&g, &f).unwrap();
        let expect = if gl { Rung::Iasgl } else if i { Rung::Iasi } else if l { Rung::Iasl } else { Rung::None };
        prop_assert_eq!(rung, expect);
        prop_assert_eq!(violations.is_empty(), gl);
    }

    #[test]
    fn iasgl_verdict_matches_oracle((g, f) in ground(6, 2..=3).prop_flat_map(labelled)) {
        let x: Vec<u64> = f.ground().elements().to_vec();
        let labels: Vec<Set> = g.ids().iter().map(|id| to_set(f.label(id).unwrap())).collect();
        prop_assert_eq!(verify_iasgl(&g, &f).unwrap().ok, is_iasgl(g.edges(), &labels, &x));
    }

    #[test]
    fn document_round_trip((g, f) in ground(9, 2..=4).prop_flat_map(labelled)) {
        let doc = Document::from_labeled(&g, &f).unwrap();
        let back = Document::from_json(&doc.to_json_pretty()).unwrap();
        prop_assert_eq!(back.graph().unwrap(), g.clone());
        prop_assert_eq!(back.labeling().unwrap(), f);
        let bare = Document::from_json(&Document::from_graph(&g).to_json_pretty()).unwrap();
        prop_assert_eq!(bare.graph().unwrap(), g);
        prop_assert!(!bare.has_labels());
    }

    #[test]
    fn classification_matches_double_loop(x in ground(12, 2..=5), equal in any::<bool>()) {
        let mode = if equal { SummandMode::AllowEqual } else { SummandMode::DistinctLabels };
        let c = GroundSet::from_elements(x.iter().copied()).unwrap().classification(mode).unwrap();
        let o = classify(&x, equal);
        let conv = |v: &[IntegerSet]| v.iter().map(to_set).collect::<Vec<_>>();
        prop_assert_eq!(conv(&c.non_sumsets), o.non_sumsets);
        prop_assert_eq!(conv(&c.non_summands), o.non_summands);
        prop_assert_eq!(conv(&c.neither), o.neither);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    /// Whenever the gate rejects, brute force finds nothing.
    #[test]
    fn gate_is_sound(g in graph(7), x in ground(5, 2..=3)) {
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let report = structural_gate(&g, &gx, SummandMode::DistinctLabels).unwrap();
        if !report.passed && g.order() < (1 << x.len()) {
            prop_assert!(common::all_iasgl(g.order(), g.edges(), &x).is_empty());
        }
    }

    #[test]
    fn builder_invariants(x in ground(9, 2..=4), prefer in any::<bool>()) {
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let r = build_realisation(&gx, prefer, SummandMode::DistinctLabels).unwrap();
        let labels: Vec<Set> = r.graph.ids().iter().map(|id| to_set(r.labeling.label(id).unwrap())).collect();
        prop_assert!(is_iasgl(r.graph.edges(), &labels, &x));
        prop_assert_eq!(r.graph.size(), (1 << x.len()) - 2);
        prop_assert_eq!(r.non_bipartite, common::has_odd_cycle(r.graph.order(), r.graph.edges()));
        if !prefer {
            prop_assert!(!r.bipartite_forced);
        }
        if r.bipartite_forced {
            prop_assert!(!r.non_bipartite);
        }
        let traced: BTreeSet<Set> = r.assignment_trace.iter().map(|t| to_set(&t.target)).collect();
        let targets: BTreeSet<Set> = subsets(&x).into_iter().filter(|s| *s != set(&[0])).collect();
        prop_assert_eq!(traced, targets);
    }

    /// Dilating X and every label preserves existence and witnesses.
    #[test]
    fn scaling_invariance(leaves in 1usize..=7, x in ground(5, 2..=3), c in 2u64..6) {
        let g = Graph::generate(iasgl::Family::Star, leaves).unwrap();
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let cfg = SearchConfig { time_budget_ms: None, ..SearchConfig::default() };
        let a = search_iasgl(&g, &gx, &cfg).unwrap();
        let b = search_iasgl(&g, &gx.scale(c).unwrap(), &cfg).unwrap();
        prop_assert_eq!(a.status, b.status);
        if a.status == SearchStatus::Found {
            prop_assert!(verify_iasgl(&g, &a.witnesses[0].scale(c).unwrap()).unwrap().ok);
        }
    }
}
