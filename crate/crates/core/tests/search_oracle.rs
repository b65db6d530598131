//! Exhaustive search against brute-force enumeration of injective labelings.

mod common;

use std::collections::BTreeSet;

use common::{all_iasgl, canonical_family, to_set, Set};
use iasgl::{enumerate_free_trees, search_iasgl, Family, Graph, GroundSet, PruneRules, SearchConfig, SearchStatus};
use proptest::prelude::*;

fn exhaustive(rules: PruneRules) -> SearchConfig {
    SearchConfig { find_all: true, time_budget_ms: None, rules, ..SearchConfig::default() }
}

fn witness_set(g: &Graph, x: &GroundSet, cfg: &SearchConfig) -> BTreeSet<Vec<Set>> {
    let o = search_iasgl(g, x, cfg).unwrap();
    assert_ne!(o.status, SearchStatus::BudgetExceeded);
    o.witnesses
        .iter()
        .map(|f| g.ids().iter().map(|id| to_set(f.label(id).unwrap())).collect())
        .collect()
}

fn oracle_set(g: &Graph, x: &[u64]) -> BTreeSet<Vec<Set>> {
    all_iasgl(g.order(), g.edges(), x).into_iter().collect()
}

fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for m in 3..=7 {
        for (i, t) in enumerate_free_trees(m).unwrap().into_iter().enumerate() {
            out.push((format!("tree{m}#{i}"), t));
        }
    }
    for (fam, lo, hi) in [(Family::Path, 2, 7), (Family::Cycle, 3, 7), (Family::Complete, 2, 4), (Family::Star, 1, 7)] {
        for m in lo..=hi {
            out.push((format!("{}:{m}", fam.name()), Graph::generate(fam, m).unwrap()));
        }
    }
    // six edges: triangle plus a pendant path, bowtie minus an edge, K4 minus an edge plus a pendant
    let extra: [(usize, &[(usize, usize)]); 3] = [
        (6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 5)]),
        (5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]),
        (5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (0, 4)]),
    ];
    for (k, (order, edges)) in extra.into_iter().enumerate() {
        out.push((format!("extra#{k}"), Graph::from_edge_indices(order, edges.iter().copied()).unwrap()));
    }
    out
}

fn ground_sets() -> Vec<Vec<u64>> {
    let mut xs = canonical_family(2, 3);
    xs.extend(canonical_family(3, 5));
    xs.push(vec![0, 2, 4]);
    xs.push(vec![0, 3, 9]);
    xs
}

#[test]
fn witness_sets_match_enumeration() {
    let mut found = 0;
    for (name, g) in corpus() {
        for x in ground_sets() {
            if g.order() >= (1 << x.len()) {
                continue;
            }
            let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
            let got = witness_set(&g, &gx, &exhaustive(PruneRules::default()));
            let want = oracle_set(&g, &x);
            assert_eq!(got, want, "{name} over {x:?}");
            found += usize::from(!want.is_empty());
        }
    }
    // the corpus is not vacuous: stars K_{1,2} and K_{1,6} admit labelings
    assert!(found > 0);
}

#[test]
fn first_witness_agrees_with_existence() {
    for (name, g) in corpus() {
        for x in ground_sets() {
            if g.order() >= (1 << x.len()) {
                continue;
            }
            let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
            let o = search_iasgl(&g, &gx, &SearchConfig { time_budget_ms: None, ..SearchConfig::default() }).unwrap();
            let exists = !oracle_set(&g, &x).is_empty();
            assert_eq!(o.status == SearchStatus::Found, exists, "{name} over {x:?}: {:?}", o.status);
            assert!(o.witnesses.len() <= 1);
        }
    }
}

#[test]
fn each_rule_is_safe_to_disable() {
    let all = PruneRules::default();
    let toggles: [fn(&mut PruneRules); 5] = [
        |r| r.gate = false,
        |r| r.zero_degree = false,
        |r| r.non_summand_pendant = false,
        |r| r.edge_check = false,
        |r| r.coverage = false,
    ];
    let cases = [
        (Graph::generate(Family::Star, 6).unwrap(), vec![0, 1, 2]),
        (Graph::generate(Family::Star, 6).unwrap(), vec![0, 1, 3]),
        (Graph::generate(Family::Star, 2).unwrap(), vec![0, 1]),
        (Graph::generate(Family::Cycle, 6).unwrap(), vec![0, 1, 2]),
        (Graph::generate(Family::Complete, 4).unwrap(), vec![0, 1, 2]),
        (Graph::generate(Family::Path, 3).unwrap(), vec![0, 1]),
    ];
    for (g, x) in cases {
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let base = witness_set(&g, &gx, &exhaustive(all));
        for t in toggles {
            let mut r = all;
            t(&mut r);
            assert_eq!(witness_set(&g, &gx, &exhaustive(r)), base, "{r:?} over {x:?}");
        }
        assert_eq!(witness_set(&g, &gx, &exhaustive(PruneRules::none())), base);
    }
}

#[test]
fn star_witness_counts() {
    // K_{1,2^n-2} over X: {0} at the centre, leaves take the rest in any order
    for (x, leaves) in [(vec![0u64, 1], 2usize), (vec![0, 1, 2], 6)] {
        let g = Graph::generate(Family::Star, leaves).unwrap();
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        let n = witness_set(&g, &gx, &exhaustive(PruneRules::default())).len();
        assert_eq!(n, (1..=leaves).product::<usize>(), "{x:?}");
    }
}

fn six_edge_graph() -> impl Strategy<Value = Graph> {
    (4usize..=7)
        .prop_flat_map(|order| {
            let pairs: Vec<(usize, usize)> =
                (0..order).flat_map(|i| (i + 1..order).map(move |j| (i, j))).collect();
            (Just(order), proptest::sample::subsequence(pairs, 6))
        })
        .prop_filter_map("isolated vertex", |(order, edges)| Graph::from_edge_indices(order, edges).ok())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn random_graphs_match_enumeration(g in six_edge_graph(), pick in 0usize..8) {
        let xs = canonical_family(3, 5);
        let x = &xs[pick % xs.len()];
        let gx = GroundSet::from_elements(x.iter().copied()).unwrap();
        prop_assert_eq!(witness_set(&g, &gx, &exhaustive(PruneRules::default())), oracle_set(&g, x));
    }
}
