//! Property tests over random graphs for the cross-module invariants.

use proptest::prelude::*;

use edgeideal::betti::{hochster_betti_table, ideal_of_graph, independence_complex};
use edgeideal::config::Config;
use edgeideal::decomp::{is_bipartite, is_c5_free, is_vertex_decomposable, verify_certificate};
use edgeideal::dual::{alexander_dual_of_edge_ideal, double_dual_check};
use edgeideal::generate;
use edgeideal::graph::Graph;
use edgeideal::homology::FieldChar;
use edgeideal::invariants::{bight, c_number, d_number, d_prime_number};
use edgeideal::vset::VertexSet;

fn cfg() -> Config {
    Config::default()
}

/// Random graph strategy: n vertices, each possible edge kept by bitmask.
fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        (Just(n), 0..1u64 << m).prop_map(|(n, bits)| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covers_are_complements_of_maximal_independents(g in graphs(7)) {
        let cfg = cfg();
        let mis = g.maximal_independent_sets(&cfg).unwrap();
        let covers = g.minimal_vertex_covers(&cfg).unwrap();
        let mut complements: Vec<VertexSet> =
            mis.iter().map(|&f| g.vertices().difference(f)).collect();
        complements.sort();
        prop_assert_eq!(covers.clone(), complements);
        for c in covers {
            prop_assert!(g.is_vertex_cover(c));
        }
    }

    #[test]
    fn edge_list_round_trip(g in graphs(8)) {
        let parsed = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(parsed.n(), g.n());
        prop_assert_eq!(parsed.edges(), g.edges());
    }

    #[test]
    fn stanley_reisner_is_independence_complex(g in graphs(6)) {
        let cfg = cfg();
        if g.edge_count() > 0 {
            prop_assert_eq!(
                ideal_of_graph(&g).stanley_reisner_complex().unwrap(),
                independence_complex(&g, &cfg).unwrap()
            );
        }
    }

    #[test]
    fn betti_table_structure(g in graphs(6)) {
        let table = hochster_betti_table(&ideal_of_graph(&g), FieldChar::Zero, &cfg()).unwrap();
        prop_assert_eq!(table.entries.get(&(0, 0)), Some(&1));
        prop_assert_eq!(
            table.entries.get(&(1, 2)).copied().unwrap_or(0),
            g.edge_count() as u64
        );
        prop_assert_eq!(table.depth() + table.pd(), g.n());
        for &(i, j) in table.entries.keys() {
            prop_assert!(i <= j && j <= g.n());
        }
    }

    #[test]
    fn chain_of_invariants(g in graphs(7)) {
        let cfg = cfg();
        let c = c_number(&g, &cfg).unwrap().value;
        let d = d_number(&g, &cfg).unwrap().value;
        let dp = d_prime_number(&g, &cfg).unwrap().value;
        let b = bight(&g, &cfg).unwrap();
        prop_assert!(c <= d && d <= dp && dp <= b);
    }

    #[test]
    fn decomposability_certificates_replay(g in graphs(6)) {
        let (vd, cert) = is_vertex_decomposable(&g, &cfg()).unwrap();
        prop_assert_eq!(vd, cert.is_some());
        if let Some(cert) = cert {
            prop_assert!(verify_certificate(&g, &cert));
        }
    }

    #[test]
    fn double_dual_and_dual_generators(g in graphs(6)) {
        let cfg = cfg();
        prop_assert!(double_dual_check(&g, &cfg).unwrap());
        let dual = alexander_dual_of_edge_ideal(&g, &cfg).unwrap();
        for cover in &dual.covers {
            prop_assert!(g.is_vertex_cover(*cover));
        }
    }

    #[test]
    fn bipartite_graphs_are_c5_free(g in graphs(7)) {
        if is_bipartite(&g) {
            prop_assert!(is_c5_free(&g).0);
        }
    }

    #[test]
    fn betti_char_zero_matches_large_prime_small(g in graphs(5)) {
        let cfg = cfg();
        let ideal = ideal_of_graph(&g);
        let q = hochster_betti_table(&ideal, FieldChar::Zero, &cfg).unwrap();
        let p = hochster_betti_table(&ideal, FieldChar::new(1_000_003).unwrap(), &cfg).unwrap();
        prop_assert_eq!(q.entries, p.entries);
    }

    #[test]
    fn shedding_implies_dominated_neighbor_on_c5_free(g in graphs(7)) {
        if !is_c5_free(&g).0 {
            return Ok(());
        }
        for x in 0..g.n() {
            if edgeideal::decomp::is_shedding_vertex(&g, x).unwrap() {
                prop_assert!(
                    edgeideal::decomp::dominated_neighbor(&g, x).unwrap().is_some(),
                    "vertex {} in {:?}", x, g
                );
            }
        }
    }

    #[test]
    fn whiskers_satisfy_the_equalities(base in graphs(5)) {
        let cfg = cfg();
        let g = generate::whisker(&base).unwrap();
        if g.n() == 0 || !is_c5_free(&g).0 {
            return Ok(());
        }
        // whiskered graphs are chordal-or-not, but always vertex decomposable
        prop_assert!(is_vertex_decomposable(&g, &cfg).unwrap().0);
        let table = hochster_betti_table(&ideal_of_graph(&g), FieldChar::Zero, &cfg).unwrap();
        prop_assert_eq!(table.reg(), c_number(&g, &cfg).unwrap().value);
        prop_assert_eq!(table.pd(), bight(&g, &cfg).unwrap());
        prop_assert_eq!(table.pd(), d_prime_number(&g, &cfg).unwrap().value);
    }

    #[test]
    fn generators_are_deterministic(name_ix in 0..5usize, n in 2..=8usize, seed in 0..u64::MAX) {
        let cfg = cfg();
        let name = ["tree", "forest", "chordal", "random", "whisker-of(tree)"][name_ix];
        let family = generate::lookup(name).unwrap();
        let a = family.generate(n, seed, &cfg).unwrap();
        let b = family.generate(n, seed, &cfg).unwrap();
        prop_assert_eq!(a.edges(), b.edges());
    }
}
