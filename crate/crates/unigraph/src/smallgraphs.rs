//! Exhaustive enumeration of small connected simple graphs up to
//! isomorphism, for brute-force oracle sweeps.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest vertex count the canonical form supports (adjacency fits u64 and
/// the permutation sweep stays cheap).
pub const MAX_VERTICES: usize = 8;

/// Canonical form of a graph on at most [`MAX_VERTICES`] vertices: the
/// minimum, over all vertex permutations, of the upper-triangle adjacency
/// bitmask. Equal forms ⇔ isomorphic (for equal vertex counts).
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_VERTICES, "canonical_form supports n <= {MAX_VERTICES}");
    let mut adj = vec![vec![false; n]; n];
    for &[u, v] in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    canonical_adjacency(&adj)
}

fn pair_bit(n: usize, i: usize, j: usize) -> u64 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    1u64 << (a * n + b)
}

fn canonical_adjacency(adj: &[Vec<bool>]) -> u64 {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    // Heap's algorithm over all permutations
    let mut c = vec![0usize; n];
    let eval = |perm: &[usize], best: &mut u64| {
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]][perm[j]] {
                    mask |= pair_bit(n, i, j);
                }
            }
        }
        if mask < *best {
            *best = mask;
        }
    };
    eval(&perm, &mut best);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            eval(&perm, &mut best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// True iff the two graphs are isomorphic (both must have at most
/// [`MAX_VERTICES`] vertices).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask & pair_bit(n, i, j) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_indices(n, &edges).unwrap()
}

/// All connected simple graphs on exactly `n` vertices, one per isomorphism
/// class. Built by vertex augmentation: every connected graph arises from a
/// connected graph on one fewer vertex by re-attaching a non-cut vertex.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_VERTICES).contains(&n));
    let mut level: Vec<Graph> = vec![Graph::from_indices(1, &[]).unwrap()];
    for size in 2..=n {
        let mut forms = BTreeSet::new();
        for h in &level {
            let new = size - 1;
            for nbrs in 1u32..(1 << new) {
                let mut edges: Vec<(usize, usize)> =
                    h.edges().iter().map(|&[u, v]| (u, v)).collect();
                for v in 0..new {
                    if nbrs >> v & 1 == 1 {
                        edges.push((v, new));
                    }
                }
                let g = Graph::from_indices(size, &edges).unwrap();
                forms.insert(canonical_form(&g));
            }
        }
        level = forms.into_iter().map(|m| graph_from_mask(size, m)).collect();
    }
    level
}

/// All connected simple graphs with between 1 and `max_n` vertices, one per
/// isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_oeis_a001349() {
        // connected graphs on 1..=6 vertices
        for (n, expect) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(connected_graphs(n).len(), expect, "n = {n}");
        }
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let a = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::from_indices(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let path = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &path));
    }

    #[test]
    fn enumerated_graphs_are_connected_and_distinct() {
        let graphs = connected_graphs(5);
        let mut forms = BTreeSet::new();
        for g in &graphs {
            assert_eq!(crate::decompose::connected_components(g).len(), 1);
            assert!(forms.insert(canonical_form(g)));
        }
    }
}
