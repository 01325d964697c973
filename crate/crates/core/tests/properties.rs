mod common;

use alliance_core::graph::generators::all_labeled_cubic;
use alliance_core::graph::*;
use alliance_core::kernel::{self, Predicate};
use alliance_core::solvers::{self, min_satisfying, Query, SearchOptions};
use common::*;
use proptest::prelude::*;

const MONOTONE: [Predicate; 5] = [
    Predicate::GlobalOffensive,
    Predicate::GlobalStrongOffensive,
    Predicate::KDominating(1),
    Predicate::KDominating(2),
    Predicate::Dominating,
];

fn subset_of(g: &Graph, bits: u64) -> VertexSet {
    VertexSet::from_bits(g.order(), bits & g.vertices().bits())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trips(g in connected_graph(12)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn monotone_predicates_are_upward_closed(g in connected_graph(10), bits in any::<u64>(), v in 0usize..10) {
        let s = subset_of(&g, bits);
        let v = v % g.order();
        let mut t = s;
        t.insert(v);
        for p in MONOTONE {
            if p.holds(&g, &s) {
                prop_assert!(p.holds(&g, &t), "{:?} lost on adding {}", p, v);
            }
        }
    }

    #[test]
    fn global_alliances_are_alliances(g in connected_graph(10), bits in any::<u64>()) {
        let s = subset_of(&g, bits);
        if !s.is_empty() {
            if kernel::is_global_offensive(&g, &s).unwrap().holds {
                prop_assert!(kernel::is_offensive_alliance(&g, &s).unwrap().holds);
                prop_assert!(kernel::is_dominating(&g, &s));
            }
            if kernel::is_global_strong_offensive(&g, &s).unwrap().holds {
                prop_assert!(kernel::is_global_offensive(&g, &s).unwrap().holds);
            }
        }
    }

    #[test]
    fn sda_free_sets_are_downward_closed(g in connected_graph(10), bits in any::<u64>(), v in 0usize..10) {
        let x = subset_of(&g, bits);
        let mut y = x;
        y.remove(v % g.order());
        if kernel::is_sda_free(&g, &x) {
            prop_assert!(kernel::is_sda_free(&g, &y));
        }
        let r = kernel::sda_residue(&g, &x);
        prop_assert!(r.is_subset(&x));
        if !r.is_empty() {
            prop_assert!(kernel::is_strong_defensive_alliance(&g, &r).unwrap());
        }
    }

    #[test]
    fn bipartiteness_matches_two_colouring_search(g in connected_graph(10)) {
        let n = g.order();
        let brute = all_masks(n).any(|m| independent(&g, m) && independent(&g, !m & g.vertices().bits()));
        match is_bipartite(&g) {
            Some(b) => {
                prop_assert!(brute);
                prop_assert_eq!(b.left.union(&b.right), g.vertices());
                prop_assert!(b.left.intersection(&b.right).is_empty());
                prop_assert!(kernel::is_independent(&g, &b.left) && kernel::is_independent(&g, &b.right));
            }
            None => prop_assert!(!brute),
        }
    }

    #[test]
    fn blocks_partition_the_edges(g in connected_graph(12)) {
        let d = blocks(&g).unwrap();
        for (u, v) in g.edges() {
            let holders = d.blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count();
            prop_assert_eq!(holders, 1, "edge {}-{}", u, v);
        }
        for v in g.vertices().iter() {
            let count = d.blocks.iter().filter(|b| b.contains(v)).count();
            prop_assert_eq!(d.cut_vertices.contains(v), count > 1);
        }
    }

    #[test]
    fn line_graph_degrees(g in connected_graph(10)) {
        prop_assume!(g.size() > 0);
        let l = line_graph(&g).unwrap();
        prop_assert_eq!(l.graph.order(), g.size());
        for (i, &(u, v)) in l.edge_map.iter().enumerate() {
            prop_assert_eq!(l.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
        if let Some(d) = g.regular_degree() {
            prop_assert_eq!(l.graph.regular_degree(), Some(2 * d - 2));
        }
    }

    #[test]
    fn parallel_and_sequential_searches_agree(g in connected_graph(12)) {
        let par = SearchOptions { parallel: true, ..SearchOptions::default() };
        let seq = par.sequential();
        for q in [
            Query::plain(Predicate::GlobalOffensive),
            Query::plain(Predicate::Offensive),
            Query::independent(Predicate::GlobalOffensive),
            Query::plain(Predicate::KDominating(2)),
        ] {
            prop_assert_eq!(min_satisfying(&g, q, &par).unwrap(), min_satisfying(&g, q, &seq).unwrap());
        }
        prop_assert_eq!(solvers::phi0(&g, &par).unwrap(), solvers::phi0(&g, &seq).unwrap());
    }

    #[test]
    fn invariant_chain(g in connected_graph(9)) {
        let o = SearchOptions::default();
        let gamma = solvers::gamma(&g, &o).unwrap().size;
        let go = solvers::gamma_o(&g, &o).unwrap().size;
        let alpha = solvers::independence_number(&g, &o).unwrap().size;
        let ig = solvers::i_gamma(&g, &o).unwrap().size;
        prop_assert!(gamma <= go);
        if let Some(gi) = solvers::gamma_i(&g, &o).unwrap() {
            prop_assert!(go <= gi.size && gi.size <= alpha && ig <= gi.size);
            if let Some(ai) = solvers::a_i(&g, &o).unwrap() {
                prop_assert!(ai.size <= gi.size);
            }
        }
        let phi = solvers::phi0(&g, &o).unwrap().size;
        prop_assert_eq!(phi + solvers::zeta0(&g, &o).unwrap().size, g.order());
    }
}

#[test]
fn cubic_strong_alliances_are_three_dominating_sets_with_independent_complement() {
    for n in [4, 6, 8] {
        for g in all_labeled_cubic(n, false).unwrap() {
            let full = g.vertices().bits();
            for m in 1..=full {
                let s = VertexSet::from_bits(n, m);
                let strong = Predicate::GlobalStrongOffensive.holds(&g, &s);
                assert_eq!(strong, Predicate::KDominating(3).holds(&g, &s), "{g:?} {s}");
                assert_eq!(strong, kernel::is_independent(&g, &s.complement()), "{g:?} {s}");
            }
        }
    }
}
