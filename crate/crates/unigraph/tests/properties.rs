//! Randomized invariants over arbitrary small graphs.

use proptest::prelude::*;

use unigraph::decompose::block_decomposition;
use unigraph::soc::decide_unimodular;
use unigraph::toric::{enumerate_circuits, enumerate_graver, EnumerationCaps};
use unigraph::Graph;

/// Arbitrary simple graph on at most 7 vertices.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2..=7usize)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            let len = pairs.len();
            (Just(n), Just(pairs), proptest::bits::u32::masked((1 << len) - 1))
        })
        .prop_map(|(n, pairs, mask)| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p)
                .collect();
            Graph::from_indices(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn block_edges_partition_and_verdict_is_blockwise(g in small_graph()) {
        let dec = block_decomposition(&g);
        let mut seen = vec![false; g.edge_count()];
        for b in &dec.blocks {
            for &e in &b.edges {
                prop_assert!(!seen[e], "edge {e} in two blocks");
                seen[e] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));

        // the graph is unimodular iff gluing its blocks at cut vertices
        // never yields two disjoint odd cycles; rebuilding each block as
        // its own graph must therefore give all-unimodular blocks whenever
        // the whole graph is unimodular
        if decide_unimodular(&g).verdict.is_unimodular() {
            for b in &dec.blocks {
                let mut map = std::collections::HashMap::new();
                let mut edges = Vec::new();
                for &e in &b.edges {
                    let [u, v] = g.endpoints(e);
                    let n = map.len();
                    let iu = *map.entry(u).or_insert(n);
                    let n = map.len();
                    let iv = *map.entry(v).or_insert(n);
                    edges.push((iu, iv));
                }
                let bg = Graph::from_indices(map.len(), &edges).unwrap();
                prop_assert!(decide_unimodular(&bg).verdict.is_unimodular());
            }
        }
    }

    #[test]
    fn circuits_sit_inside_graver(g in small_graph()) {
        let caps = EnumerationCaps::default();
        let circuits = enumerate_circuits(&g, &caps);
        let graver = enumerate_graver(&g, &caps);
        prop_assert!(circuits.is_subset_of(&graver));
        for b in &circuits.elements {
            prop_assert!(b.is_homogeneous(&g));
        }
        for b in &graver.elements {
            prop_assert!(b.is_homogeneous(&g));
        }
    }

    #[test]
    fn unimodular_graphs_survive_vertex_deletion(g in small_graph()) {
        if !decide_unimodular(&g).verdict.is_unimodular() {
            return Ok(());
        }
        // deleting a vertex deletes incidence-matrix rows and columns:
        // hereditarity says the verdict cannot flip
        for v in 0..g.vertex_count() {
            if g.vertex_count() == 1 {
                break;
            }
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
            let pos = |u: usize| keep.iter().position(|&k| k == u).unwrap();
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .filter(|&&[a, b]| a != v && b != v)
                .map(|&[a, b]| (pos(a), pos(b)))
                .collect();
            let h = Graph::from_indices(keep.len(), &edges).unwrap();
            prop_assert!(decide_unimodular(&h).verdict.is_unimodular());
        }
    }
}
