//! Graph representation, incidence matrices, walks and walk binomials.
//!
//! Vertices carry opaque string labels and are referenced internally by
//! index; edges are identified by their position in the input order, since
//! binomials are exponent vectors over edge indices.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("parallel edge between `{0}` and `{1}`")]
    ParallelEdge(String, String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// A simple undirected finite graph. No self-loops, no parallel edges.
/// Connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<[usize; 2]>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index)
    index: HashMap<String, usize>,
}

impl Graph {
    /// Build a validated graph from vertex labels and unordered label pairs.
    /// Edge `i` of the result is the `i`-th input pair.
    pub fn new<S, T>(vertices: &[S], edge_pairs: &[(T, T)]) -> Result<Graph, GraphError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut labels = Vec::with_capacity(vertices.len());
        let mut index = HashMap::with_capacity(vertices.len());
        for v in vertices {
            let label = v.as_ref().to_string();
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(GraphError::DuplicateVertex(label));
            }
            labels.push(label);
        }
        let mut edges = Vec::with_capacity(edge_pairs.len());
        let mut seen = HashMap::new();
        for (a, b) in edge_pairs {
            let a = a.as_ref();
            let b = b.as_ref();
            let u = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
            let w = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
            if u == w {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            let key = (u.min(w), u.max(w));
            if seen.insert(key, edges.len()).is_some() {
                return Err(GraphError::ParallelEdge(a.to_string(), b.to_string()));
            }
            edges.push([u, w]);
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (i, &[u, w]) in edges.iter().enumerate() {
            adj[u].push((w, i));
            adj[w].push((u, i));
        }
        Ok(Graph {
            labels,
            edges,
            adj,
            index,
        })
    }

    /// Convenience constructor over vertex indices `0..n` with labels
    /// `"0"`, `"1"`, ...
    pub fn from_indices(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> = edge_pairs
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
        Graph::new(&labels, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> [usize; 2] {
        self.edges[edge]
    }

    /// Neighbors of `v` as `(neighbor, edge index)` pairs, in edge input order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Index of the edge joining `u` and `w`, if present.
    pub fn edge_between(&self, u: usize, w: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .find(|&&(nbr, _)| nbr == w)
            .map(|&(_, e)| e)
    }

    pub fn other_endpoint(&self, edge: usize, v: usize) -> usize {
        let [a, b] = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    /// The 0/1 vertex-by-edge incidence matrix; column `j` has 1s exactly at
    /// the endpoints of edge `j`.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let n = self.vertex_count();
        let m = self.edge_count();
        let mut entries = vec![0u8; n * m];
        for (j, &[u, w]) in self.edges.iter().enumerate() {
            entries[u * m + j] = 1;
            entries[w * m + j] = 1;
        }
        IncidenceMatrix { n, m, entries }
    }
}

/// Vertex-by-edge 0/1 incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    m: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.m + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.m..(row + 1) * self.m]
    }

    /// Matrix-vector product over the integers.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.m);
        (0..self.n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .map(|(&a, &xi)| a as i64 * xi)
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            for c in 0..self.m {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("edge {edge} does not join walk vertices {from} and {to}")]
    Inconsistent { edge: usize, from: usize, to: usize },
    #[error("no edge between consecutive walk vertices {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("walk is not closed")]
    NotClosed,
    #[error("walk has odd length")]
    OddLength,
    #[error("walk is empty")]
    Empty,
}

/// A walk: alternating vertex/edge sequence, each edge joining the adjacent
/// vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Walk {
    pub fn new(g: &Graph, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Walk, WalkError> {
        if vertices.is_empty() || vertices.len() != edges.len() + 1 {
            return Err(WalkError::Empty);
        }
        for (j, &e) in edges.iter().enumerate() {
            let [a, b] = g.endpoints(e);
            let (u, w) = (vertices[j], vertices[j + 1]);
            if !((a == u && b == w) || (a == w && b == u)) {
                return Err(WalkError::Inconsistent {
                    edge: e,
                    from: u,
                    to: w,
                });
            }
        }
        Ok(Walk { vertices, edges })
    }

    /// Build a walk from a vertex sequence; edges are looked up (unique in a
    /// simple graph).
    pub fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Result<Walk, WalkError> {
        if vertices.is_empty() {
            return Err(WalkError::Empty);
        }
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for pair in vertices.windows(2) {
            let e = g
                .edge_between(pair[0], pair[1])
                .ok_or(WalkError::MissingEdge(pair[0], pair[1]))?;
            edges.push(e);
        }
        Ok(Walk { vertices, edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Walk { vertices, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn triangle() -> Graph {
        Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).unwrap()
    }

    #[test]
    fn builds_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_between(0, 2), Some(2));
    }

    #[test]
    fn single_vertex_no_edges() {
        let g = Graph::new::<_, &str>(&["1"], &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_parallel_edge() {
        let err = Graph::new(&["1", "2"], &[("1", "2"), ("2", "1")]).unwrap_err();
        assert_eq!(err, GraphError::ParallelEdge("2".into(), "1".into()));
    }

    #[test]
    fn rejects_self_loop_and_unknowns() {
        assert_eq!(
            Graph::new(&["1", "2"], &[("1", "1")]).unwrap_err(),
            GraphError::SelfLoop("1".into())
        );
        assert_eq!(
            Graph::new(&["1", "2"], &[("1", "3")]).unwrap_err(),
            GraphError::UnknownEndpoint("3".into())
        );
        assert_eq!(
            Graph::new(&["1", "1"], &[] as &[(&str, &str)]).unwrap_err(),
            GraphError::DuplicateVertex("1".into())
        );
    }

    #[test]
    fn incidence_matrix_triangle() {
        let g = triangle();
        let a = g.incidence_matrix();
        let rows: Vec<Vec<u8>> = (0..3).map(|r| a.row(r).to_vec()).collect();
        assert_eq!(rows, vec![vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn incidence_matrix_cycle_row_col_sums() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = g.incidence_matrix();
        for r in 0..4 {
            assert_eq!(a.row(r).iter().map(|&x| x as u32).sum::<u32>(), 2);
        }
        for c in 0..4 {
            let s: u32 = (0..4).map(|r| a.entry(r, c) as u32).sum();
            assert_eq!(s, 2);
        }
    }

    #[test]
    fn incidence_matrix_path() {
        let g = Graph::from_indices(3, &[(0, 1), (1, 2)]).unwrap();
        let a = g.incidence_matrix();
        assert_eq!(a.rows(), 3);
        assert_eq!(a.cols(), 2);
        let sums: Vec<u32> = (0..3)
            .map(|r| a.row(r).iter().map(|&x| x as u32).sum())
            .collect();
        assert_eq!(sums, vec![1, 2, 1]);
    }

    #[test]
    fn walk_consistency_checked() {
        let g = triangle();
        assert!(Walk::new(&g, vec![0, 1, 2, 0], vec![0, 1, 2]).is_ok());
        assert!(matches!(
            Walk::new(&g, vec![0, 1, 2, 0], vec![0, 2, 1]),
            Err(WalkError::Inconsistent { .. })
        ));
    }
}
