mod common;

use common::{choose, coloring_oracle, embeds_oracle, nu_oracle, special_oracle};
use proptest::prelude::*;
use tmatch::kneser::{
    chromatic_number, conflict_graph, contains_pattern, contains_pattern_with, eta, extremal_gfree_family,
    gfree_bound, kneser_adjacent, parse_builtin, parse_pattern, special_subgraphs, Strategy,
};
use tmatch::{ell, enumerate_ksets, nu_t, star, star_union, BigCount, Error, KSet, PatternGraph, SearchBudget, TSetSystem};

const FREE: SearchBudget = SearchBudget::unlimited();

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for u in &mut v {
        u.sort();
    }
    v.sort();
    v
}

#[test]
fn adjacency() {
    assert!(kneser_adjacent(KSet::of(&[1, 2]), KSet::of(&[3, 4]), 1).unwrap());
    assert!(!kneser_adjacent(KSet::of(&[1, 2]), KSet::of(&[2, 4]), 1).unwrap());
    assert!(kneser_adjacent(KSet::of(&[1, 2, 3]), KSet::of(&[1, 4, 5]), 2).unwrap());
    assert!(matches!(kneser_adjacent(KSet::of(&[1, 2]), KSet::of(&[1, 2]), 1), Err(Error::IdenticalSets(_))));
}

#[test]
fn petersen() {
    let g = conflict_graph(&enumerate_ksets(5, 2).unwrap(), 1);
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(g.edge_count(), 15);
    assert!((0..10).all(|v| g.degree(v) == 3));
    assert_eq!(chromatic_number(&g, FREE).unwrap(), 3);
    assert_eq!(coloring_oracle(&g).0, 3);
}

#[test]
fn star_conflict_graph_is_edgeless() {
    let s = star(7, 3, KSet::of(&[2, 5])).unwrap();
    assert_eq!(conflict_graph(&s, 2).edge_count(), 0);
}

#[test]
fn degenerate_patterns() {
    for m in 1..=6 {
        let k = PatternGraph::complete(m);
        assert_eq!(chromatic_number(&k, FREE).unwrap(), m);
        assert_eq!(eta(&k, FREE).unwrap().eta, 1);
        assert_eq!(special_subgraphs(&k, FREE).unwrap(), (0..m).map(|v| vec![v]).collect::<Vec<_>>());
    }
    let e = PatternGraph::edgeless(4);
    assert_eq!(chromatic_number(&e, FREE).unwrap(), 1);
    assert_eq!(special_subgraphs(&e, FREE).unwrap(), vec![vec![0, 1, 2, 3]]);
    assert_eq!(chromatic_number(&PatternGraph::edgeless(0), FREE).unwrap(), 0);
}

#[test]
fn bipartite_patterns() {
    let k23 = parse_builtin("K2x3").unwrap();
    let a = eta(&k23, FREE).unwrap();
    assert_eq!((a.chi, a.eta), (2, 2));
    assert_eq!(sorted(special_subgraphs(&k23, FREE).unwrap()), special_oracle(&k23));
    for l in 1..=5 {
        let star = PatternGraph::complete_multipartite(&[1, l]);
        let a = eta(&star, FREE).unwrap();
        assert_eq!((a.chi, a.eta), (2, 1));
    }
    assert_eq!(parse_pattern(r#"{"vertices": 3, "edges": [[1, 2], [1, 3]]}"#).unwrap(), parse_builtin("K1,2").unwrap());
}

#[test]
fn pattern_bounds() {
    let (n, k, t) = (12, 4, 2);
    let k2 = PatternGraph::complete(2);
    assert_eq!(gfree_bound(n, k, t, &k2, FREE).unwrap(), BigCount::from(choose(10, 2)));
    for s in 1..=3 {
        assert_eq!(gfree_bound(n, k, t, &PatternGraph::complete(s + 1), FREE).unwrap(), ell(n, k, t, s as u32).unwrap());
    }
    for name in ["K3", "K2x2", "K1,2,2", "K2,3"] {
        let g = parse_builtin(name).unwrap();
        let (q, e) = coloring_oracle(&g);
        let expected = choose(12, 3) - choose(12 - q as u64 + 1, 3) + e as u64 - 1;
        assert_eq!(gfree_bound(12, 3, 1, &g, FREE).unwrap(), BigCount::from(expected), "{name}");
    }
}

#[test]
fn extremal_families_meet_the_bound() {
    for (n, k, t) in [(10, 3, 1), (12, 4, 2)] {
        for name in ["K2", "K3", "K1,2", "K2,2"] {
            let g = parse_builtin(name).unwrap();
            let x = extremal_gfree_family(n, k, t, &g, None, FREE).unwrap();
            assert_eq!(BigCount::from(x.family.len()), gfree_bound(n, k, t, &g, FREE).unwrap());
            assert!(!contains_pattern(&x.family, t, &g, FREE).unwrap().contains, "{name} at {n},{k},{t}");
            if x.eta == 1 {
                let centers = TSetSystem::new(n, t, x.centers.iter().copied()).unwrap();
                assert_eq!(x.family, star_union(n, k, &centers).unwrap());
            }
        }
    }
    // K3-free is the same as having no three pairwise disjoint members.
    let x = extremal_gfree_family(10, 3, 1, &PatternGraph::complete(3), None, FREE).unwrap();
    assert_eq!(nu_t(&x.family, 1, FREE).unwrap().exact().unwrap().size(), 2);
}

#[test]
fn star_plus_disjoint_set() {
    let base = star(9, 3, KSet::of(&[1])).unwrap();
    let host = base.with_member(KSet::of(&[2, 3, 4])).unwrap();
    let path = parse_builtin("K1,2").unwrap();
    let report = contains_pattern(&host, 1, &path, FREE).unwrap();
    assert_eq!(report.contains, embeds_oracle(&path, &conflict_graph(&host, 1)));
    assert!(report.contains);
    assert!(report.validate(&host, 1, &path));
    let report = contains_pattern(&base, 1, &PatternGraph::complete(2), FREE).unwrap();
    assert!(!report.contains);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn coloring_matches_enumeration(g in common::small_graph(8)) {
        let a = eta(&g, FREE).unwrap();
        prop_assert_eq!((a.chi, a.eta), coloring_oracle(&g));
        prop_assert_eq!(chromatic_number(&g, FREE).unwrap(), a.chi);
        prop_assert!(g.edges().iter().all(|&(u, v)| a.coloring[u] != a.coloring[v]));
        let classes = a.classes();
        prop_assert_eq!(classes.len(), a.chi);
        prop_assert_eq!(classes.iter().map(Vec::len).min(), Some(a.eta));
    }

    #[test]
    fn special_subgraphs_match_enumeration(g in common::small_graph(6)) {
        prop_assert_eq!(sorted(special_subgraphs(&g, FREE).unwrap()), special_oracle(&g));
    }

    #[test]
    fn cliques_are_matchings((f, t) in common::small_family(), m in 1usize..=4) {
        let report = contains_pattern(&f, t, &PatternGraph::complete(m), FREE).unwrap();
        prop_assert_eq!(report.contains, nu_oracle(&f, t) >= m);
        prop_assert!(report.validate(&f, t, &PatternGraph::complete(m)));
    }

    #[test]
    fn multipartite_fast_path_agrees(
        (f, t) in common::small_family(),
        parts in proptest::collection::vec(1usize..=3, 1..=3),
    ) {
        let g = PatternGraph::complete_multipartite(&parts);
        prop_assume!(g.vertex_count() <= 8);
        let fast = contains_pattern_with(&f, t, &g, FREE, Strategy::Multipartite).unwrap();
        let generic = contains_pattern_with(&f, t, &g, FREE, Strategy::Generic).unwrap();
        prop_assert_eq!(fast.contains, generic.contains);
        prop_assert!(fast.validate(&f, t, &g) && generic.validate(&f, t, &g));
        if g.vertex_count() <= 4 {
            prop_assert_eq!(fast.contains, embeds_oracle(&g, &conflict_graph(&f, t)));
        }
    }

    #[test]
    fn generic_embedding_matches_oracle((f, t) in common::small_family(), g in common::small_graph(4)) {
        let report = contains_pattern_with(&f, t, &g, FREE, Strategy::Generic).unwrap();
        prop_assert_eq!(report.contains, embeds_oracle(&g, &conflict_graph(&f, t)));
        prop_assert!(report.validate(&f, t, &g));
    }

    #[test]
    fn conflict_graphs_are_simple((f, t) in common::small_family()) {
        let g = conflict_graph(&f, t);
        for u in 0..g.vertex_count() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                if u != v {
                    let (a, b) = (f.members()[u], f.members()[v]);
                    prop_assert_eq!(g.has_edge(u, v), (a.bits() & b.bits()).count_ones() < t);
                }
            }
        }
    }
}
