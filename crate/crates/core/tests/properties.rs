mod common;

use common::{brute_colorings, chromatic_polynomial};
use proptest::prelude::*;
use recolor::catalog::{kll_frozen_coloring, NamedGraph};
use recolor::coloring::{enumerate_colorings, is_frozen, partition_isomorphic};
use recolor::io::{parse_graph, write_dimacs, write_edge_list, GraphFormat};
use recolor::procedures::{good_certificate, recolor_via_certificate, renaming_walk};
use recolor::reconfig::{
    check_bound, component_of, reconfig_connected, shortest_recoloring_path, verify_path, DEFAULT_BUDGET,
};
use recolor::recognizers::recognize_kll_minus_matching;
use recolor::subgraph::canonical_key;
use recolor::{Coloring, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// A proper coloring of `g` picked by index among all `ell`-colorings.
fn pick(g: &Graph, ell: usize, seed: usize) -> Option<Coloring> {
    let all = brute_colorings(g, ell);
    (!all.is_empty()).then(|| Coloring::new(all[seed % all.len()].clone(), ell))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels((g, perm) in graph_and_perm(7)) {
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.induced(&perm)));
    }

    #[test]
    fn coloring_count_matches_chromatic_polynomial(g in graph(6), ell in 1usize..=4) {
        let count = enumerate_colorings(&g, ell).count() as i64;
        prop_assert_eq!(count, chromatic_polynomial(&g, ell as i64));
    }

    #[test]
    fn shortest_paths_verify(g in graph(5), seeds in (0usize..10_000, 0usize..10_000)) {
        let ell = 4;
        let (Some(a), Some(b)) = (pick(&g, ell, seeds.0), pick(&g, ell, seeds.1)) else { return Ok(()) };
        if let Some(p) = shortest_recoloring_path(&g, &a, &b, DEFAULT_BUDGET).unwrap() {
            verify_path(&g, &p).unwrap();
            prop_assert_eq!(p.end(), b.clone());
            let differ = a.colors.iter().zip(&b.colors).filter(|(x, y)| x != y).count();
            prop_assert!(p.len() >= differ);
            verify_path(&g, &p.reversed()).unwrap();
        }
    }

    #[test]
    fn certificates_replay_to_their_target(g in graph(7), seed in 0usize..10_000, extra in 1usize..=2) {
        let Some(cert) = good_certificate(&g) else { return Ok(()) };
        let ell = cert.chi + extra;
        let Some(a) = pick(&g, ell, seed) else { return Ok(()) };
        let p = recolor_via_certificate(&g, &cert, &a, ell).unwrap();
        prop_assert_eq!(&p.end().colors, &cert.target);
        if cert.good {
            check_bound(&g, &p, g.n()).unwrap();
        }
    }

    #[test]
    fn renaming_needs_at_most_two_moves(g in graph(6), seed in 0usize..10_000, shift in 1usize..4) {
        let ell = 4;
        let Some(a) = pick(&g, ell, seed) else { return Ok(()) };
        if a.num_colors_used() >= ell {
            return Ok(());
        }
        let b = Coloring::new(a.colors.iter().map(|&c| (c - 1 + shift) % ell + 1).collect(), ell);
        prop_assert!(partition_isomorphic(&a, &b).unwrap());
        let p = renaming_walk(&g, &a, &b, ell).unwrap();
        prop_assert_eq!(p.end(), b);
        check_bound(&g, &p, 2).unwrap();
    }

    #[test]
    fn frozen_colorings_are_isolated(g in graph(6), seed in 0usize..10_000, ell in 2usize..=4) {
        let Some(a) = pick(&g, ell, seed) else { return Ok(()) };
        if is_frozen(&g, &a).unwrap() {
            prop_assert_eq!(component_of(&g, &a, DEFAULT_BUDGET).unwrap().len(), 1);
        }
    }

    #[test]
    fn recognized_kll_minus_matching_is_frozen((l, perm) in (3usize..=5).prop_flat_map(|l| {
        (Just(l), Just((0..2 * l).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let g = NamedGraph::KllMinusMatching(l).build();
        let h = g.induced(&perm);
        prop_assert_eq!(recognize_kll_minus_matching(&h), Some(l));
        let frozen = kll_frozen_coloring(l);
        prop_assert!(is_frozen(&g, &frozen).unwrap());
        prop_assert!(!reconfig_connected(&g, l, DEFAULT_BUDGET).unwrap().connected);
    }

    #[test]
    fn formats_round_trip(g in graph(8)) {
        let el = parse_graph(&write_edge_list(&g), Some(GraphFormat::EdgeList)).unwrap().graph;
        let dimacs = parse_graph(&write_dimacs(&g), None).unwrap().graph;
        prop_assert_eq!(&el, &g);
        prop_assert_eq!(&dimacs, &g);
    }
}
