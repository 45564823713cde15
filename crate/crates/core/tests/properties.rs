//! Structural and spectral invariants, exhaustive at small orders and
//! randomised above them.

use proptest::prelude::*;
use spectra_core::enumerate::{classes, enumerate, Constraints};
use spectra_core::forbidden::{contains_subgraph, has_path_subgraph, Pattern};
use spectra_core::spectral::{
    largest_eigenvalue_small, neighborhood_decomposition, PartitionMode, QuotientMatrix,
    RESIDUAL_TOLERANCE,
};
use spectra_core::{canonical_form, canonical_key, graph6, q_max, Graph};

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_permutation(min: usize, max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(min, max).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn neighbourhood_identity_holds(g: &Graph) {
    for u in 0..g.order() {
        if g.degree(u).unwrap() == 0 {
            continue;
        }
        let d = neighborhood_decomposition(g, u).unwrap();
        let sum: usize = g
            .neighbors(u)
            .unwrap()
            .iter()
            .map(|w| g.degree(w).unwrap())
            .sum();
        assert_eq!(
            sum,
            d.degree + 2 * d.inner_edges + d.outer_edges,
            "{g:?} at {u}"
        );
        assert_eq!(
            d.outer_edges,
            g.edges_between(&g.neighbors(u).unwrap(), &g.second_neighborhood(u).unwrap())
                .unwrap()
        );
    }
}

#[test]
fn neighbourhood_identity_on_all_small_graphs() {
    for n in 1..=7 {
        for g in classes(n).unwrap().iter() {
            neighbourhood_identity_holds(g);
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
            assert_eq!(&g.induced_subgraph(&g.vertices()).unwrap(), g);
        }
    }
}

#[test]
fn graph6_round_trips_every_class_up_to_eight() {
    for n in 1..=8 {
        for g in classes(n).unwrap().iter() {
            assert_eq!(&graph6::decode(&graph6::encode(g)).unwrap(), g);
        }
    }
}

#[test]
fn edge_deletion_strictly_lowers_q_on_small_connected_graphs() {
    for n in 2..=6 {
        for g in enumerate(n, Constraints::CONNECTED).unwrap() {
            let q = q_max(&g).q;
            for (u, v) in g.edges().collect::<Vec<_>>() {
                let h = g.without_edge(u, v).unwrap();
                assert!(q_max(&h).q < q - 1e-9, "{g:?} minus {u}{v}");
            }
        }
    }
}

#[test]
fn theta_free_neighbourhoods_avoid_short_paths() {
    let t122: Pattern = "theta-1-2-2".parse().unwrap();
    let t123: Pattern = "theta-1-2-3".parse().unwrap();
    for n in 1..=7 {
        for g in classes(n).unwrap().iter() {
            let free122 = contains_subgraph(g, &t122).is_none();
            let free123 = contains_subgraph(g, &t123).is_none();
            for u in 0..n {
                let nb = g.neighbors(u).unwrap();
                if nb.is_empty() {
                    continue;
                }
                let h = g.induced_subgraph(&nb).unwrap();
                if free122 {
                    assert!(!has_path_subgraph(&h, 3), "{g:?} at {u}");
                }
                if free123 {
                    assert!(!has_path_subgraph(&h, 4), "{g:?} at {u}");
                }
            }
        }
    }
}

#[test]
fn degree_quotient_of_semiregular_graphs() {
    // the bipartition of any semi-regular bipartite graph is equitable, and
    // its Q-quotient carries the top eigenvalue
    for n in 2..=7 {
        for g in enumerate(n, Constraints::CONNECTED).unwrap() {
            if !g.is_semiregular_bipartite() {
                continue;
            }
            let (a, b) = g.bipartition().unwrap();
            let qm = QuotientMatrix::new(&g, &[a, b], PartitionMode::SignlessLaplacian).unwrap();
            assert!((qm.largest_eigenvalue() - q_max(&g).q).abs() < 1e-9);
            assert!(
                (largest_eigenvalue_small(&qm.to_f64()) - qm.largest_eigenvalue()).abs() < 1e-12
            );
        }
    }
}

proptest! {
    #[test]
    fn canonical_key_ignores_labels((g, perm) in with_permutation(1, 10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        let (key, labeling) = canonical_form(&h).unwrap();
        prop_assert_eq!(h.relabel(&labeling).unwrap(), key.to_graph());
    }

    #[test]
    fn identity_and_degree_sum(g in graph_strategy(1, 30)) {
        neighbourhood_identity_holds(&g);
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(1, 64)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn spectral_result_invariants(g in graph_strategy(1, 24)) {
        let r = q_max(&g);
        prop_assert!(r.residual <= RESIDUAL_TOLERANCE);
        let bound = 4.0 * g.size() as f64 / g.order() as f64;
        prop_assert!(r.q >= bound - 1e-9);
        prop_assert!((r.power_estimate - r.q).abs() < 1e-6);
        if g.is_connected() && g.order() > 1 {
            prop_assert!(r.vector.iter().all(|&x| x > 0.0));
        }
    }

    #[test]
    fn containment_survives_adding_edges(g in graph_strategy(4, 9), u in 0usize..9, v in 0usize..9) {
        let p: Pattern = "theta-1-2-2".parse().unwrap();
        let n = g.order();
        let (u, v) = (u % n, v % n);
        if u != v && contains_subgraph(&g, &p).is_some() {
            let h = g.with_edge(u, v).unwrap();
            prop_assert!(contains_subgraph(&h, &p).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_deletion_lowers_q_on_random_connected_graphs(g in graph_strategy(3, 20), pick in any::<usize>()) {
        prop_assume!(g.is_connected());
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[pick % edges.len()];
        let h = g.without_edge(u, v).unwrap();
        prop_assert!(q_max(&h).q < q_max(&g).q - 1e-9);
    }
}
