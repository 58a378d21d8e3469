//! Circuits and Graver bases of graph toric ideals.
//!
//! The primary path is purely structural: candidate connected edge
//! subgraphs are classified against the known subgraph forms (even cycles;
//! block trees whose blocks are cycles or cut edges with the odd separation
//! condition) and converted to walk binomials. An exhaustive kernel search
//! doubles as an independent oracle; it is never the default.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::binomial::{walk_binomial, Binomial};
use crate::decompose::{block_decomposition_masked, BlockDecomposition};
use crate::graph::{Graph, Walk};
use crate::linalg::rank_of;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("kernel search space exceeds the configured budget of {0} nodes")]
    SearchSpaceExceeded(u64),
    #[error("binomial is not homogeneous for this graph (not a kernel member)")]
    NotHomogeneous,
    #[error("graphs with more than 64 edges are not supported by the enumerators")]
    TooManyEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Circuits,
    Graver,
}

/// A canonical-ordered set of sign-normalized binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub kind: BasisKind,
    /// Sorted, deduplicated, sign-normalized.
    pub elements: Vec<Binomial>,
    /// Subgraph edge-count cap in force during enumeration, if any.
    pub edge_cap: Option<usize>,
    /// False whenever any cap truncated the enumeration.
    pub complete: bool,
}

impl BasisSet {
    pub fn contains(&self, b: &Binomial) -> bool {
        let n = b.sign_normalized();
        self.elements.binary_search(&n).is_ok()
    }

    pub fn is_subset_of(&self, other: &BasisSet) -> bool {
        self.elements.iter().all(|b| other.contains(b))
    }

    pub fn all_square_free(&self) -> bool {
        self.elements.iter().all(|b| b.is_square_free())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Largest candidate subgraph, in edges.
    pub max_subgraph_edges: usize,
    /// Most elements to return.
    pub max_elements: usize,
    /// Most candidate subgraphs (or kernel search nodes) to explore.
    pub exploration_budget: u64,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_subgraph_edges: 20,
            max_elements: 100_000,
            exploration_budget: 50_000_000,
        }
    }
}

// ---------------------------------------------------------------------------
// subgraph classification

enum Shape {
    EvenCycle,
    /// Multi-block form: blocks are cycles or cut edges, each cut vertex in
    /// exactly two blocks, odd cycle-edge total on both sides of every cut.
    BlockTree {
        dec: BlockDecomposition,
        /// Per block: (cut vertex, neighboring block).
        tree: Vec<Vec<(usize, usize)>>,
    },
}

fn classify_subgraph(g: &Graph, edges: &[usize]) -> Option<Shape> {
    let n = g.vertex_count();
    let mut emask = vec![false; g.edge_count()];
    let mut vmask = vec![false; n];
    let mut degree = vec![0usize; n];
    for &e in edges {
        emask[e] = true;
        for v in g.endpoints(e) {
            vmask[v] = true;
            degree[v] += 1;
        }
    }
    // every vertex of a primitive subgraph lies on a cycle or a doubled cut
    // edge, hence has degree at least 2
    if (0..n).any(|v| vmask[v] && degree[v] < 2) {
        return None;
    }

    let dec = block_decomposition_masked(g, &vmask, &emask);
    if dec.blocks.len() == 1 {
        let b = &dec.blocks[0];
        let is_cycle = b.edges.len() == b.vertices.len();
        if is_cycle && b.edges.len().is_multiple_of(2) {
            return Some(Shape::EvenCycle);
        }
        return None;
    }

    // every block a cycle or a cut edge
    for b in &dec.blocks {
        let is_cycle = b.edges.len() == b.vertices.len();
        if !is_cycle && b.edges.len() != 1 {
            return None;
        }
    }
    // every cut vertex in exactly two blocks
    let mut membership = vec![Vec::new(); n];
    for (i, b) in dec.blocks.iter().enumerate() {
        for &v in &b.vertices {
            membership[v].push(i);
        }
    }
    if membership.iter().any(|m| m.len() > 2) {
        return None;
    }

    let mut tree = vec![Vec::new(); dec.blocks.len()];
    for (v, m) in membership.iter().enumerate() {
        if m.len() == 2 {
            tree[m[0]].push((v, m[1]));
            tree[m[1]].push((v, m[0]));
        }
    }

    // odd separation: at each cut vertex, both sides hold an odd number of
    // cycle-block edges
    let cycle_edges =
        |b: &crate::decompose::Block| if b.edges.len() == 1 { 0 } else { b.edges.len() };
    let total: usize = dec.blocks.iter().map(cycle_edges).sum();
    if !total.is_multiple_of(2) {
        return None;
    }
    fn side_sum(
        tree: &[Vec<(usize, usize)>],
        dec: &BlockDecomposition,
        cycle_edges: &dyn Fn(&crate::decompose::Block) -> usize,
        block: usize,
        banned: usize,
    ) -> usize {
        let mut sum = 0;
        let mut stack = vec![block];
        let mut seen = vec![false; tree.len()];
        seen[banned] = true;
        seen[block] = true;
        while let Some(b) = stack.pop() {
            sum += cycle_edges(&dec.blocks[b]);
            for &(_, nb) in &tree[b] {
                if !seen[nb] {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        sum
    }
    for (b, adj) in tree.iter().enumerate() {
        for &(_, nb) in adj {
            if nb > b {
                let side = side_sum(&tree, &dec, &cycle_edges, b, nb);
                if side.is_multiple_of(2) || (total - side).is_multiple_of(2) {
                    return None;
                }
            }
        }
    }

    Some(Shape::BlockTree { dec, tree })
}

/// Restrict a primitive block-tree shape to the circuit forms: exactly two
/// cycle blocks, both odd, sitting at the two ends of a path of cut edges.
fn is_circuit_shape(dec: &BlockDecomposition, tree: &[Vec<(usize, usize)>]) -> bool {
    let mut cycle_ids = Vec::new();
    for (i, b) in dec.blocks.iter().enumerate() {
        if b.edges.len() > 1 {
            if b.edges.len() % 2 == 0 {
                return false;
            }
            cycle_ids.push(i);
        }
    }
    if cycle_ids.len() != 2 {
        return false;
    }
    // path shape: cycle blocks are tree leaves, cut edges have two neighbors
    for (i, adj) in tree.iter().enumerate() {
        let expect = if dec.blocks[i].edges.len() > 1 { 1 } else { 2 };
        if adj.len() != expect {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// walk reconstruction

/// Vertices of a cycle block in traversal order, starting at `entry` and
/// moving towards its smaller in-block neighbor.
fn cycle_order(g: &Graph, block_edges: &[usize], entry: usize) -> Vec<usize> {
    let mut nbrs: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for &e in block_edges {
        let [a, b] = g.endpoints(e);
        nbrs.entry(a).or_default().push(b);
        nbrs.entry(b).or_default().push(a);
    }
    for v in nbrs.values_mut() {
        v.sort_unstable();
    }
    let mut order = vec![entry];
    let mut prev = entry;
    let mut cur = nbrs[&entry][0];
    while cur != entry {
        order.push(cur);
        let next = *nbrs[&cur].iter().find(|&&x| x != prev).unwrap();
        prev = cur;
        cur = next;
    }
    order
}

/// Closed vertex walk `[entry, ..., entry]` covering the block and all its
/// descendants: cycle edges once, cut edges twice. Detours through pendant
/// subtrees have odd length, which produces the primitive alternation.
fn emit_walk(
    g: &Graph,
    dec: &BlockDecomposition,
    tree: &[Vec<(usize, usize)>],
    block: usize,
    entry: usize,
    parent: Option<usize>,
) -> Vec<usize> {
    let child_at = |v: usize| -> Option<usize> {
        tree[block]
            .iter()
            .find(|&&(cv, nb)| cv == v && Some(nb) != parent)
            .map(|&(_, nb)| nb)
    };
    let b = &dec.blocks[block];
    if b.edges.len() == 1 {
        let [x, y] = g.endpoints(b.edges[0]);
        let other = if x == entry { y } else { x };
        let child = child_at(other).expect("cut edge must lead to a further block");
        let mut seq = vec![entry];
        seq.extend(emit_walk(g, dec, tree, child, other, Some(block)));
        seq.push(entry);
        seq
    } else {
        let order = cycle_order(g, &b.edges, entry);
        let mut seq = Vec::new();
        for &v in &order {
            seq.push(v);
            if let Some(child) = child_at(v) {
                let sub = emit_walk(g, dec, tree, child, v, Some(block));
                seq.extend(sub.into_iter().skip(1));
            }
        }
        seq.push(entry);
        seq
    }
}

fn shape_binomial(g: &Graph, edges: &[usize], shape: &Shape) -> Binomial {
    let seq = match shape {
        Shape::EvenCycle => {
            let entry = edges
                .iter()
                .flat_map(|&e| g.endpoints(e))
                .min()
                .unwrap();
            let mut order = cycle_order(g, edges, entry);
            order.push(entry);
            order
        }
        Shape::BlockTree { dec, tree } => {
            let root = (0..dec.blocks.len())
                .find(|&i| dec.blocks[i].edges.len() > 1)
                .expect("at least one cycle block");
            let entry = dec.blocks[root].vertices[0];
            emit_walk(g, dec, tree, root, entry, None)
        }
    };
    let walk = Walk::from_vertices(g, seq).expect("reconstructed walk is consistent");
    walk_binomial(&walk)
        .expect("reconstructed walk is closed and even")
        .sign_normalized()
}

// ---------------------------------------------------------------------------
// connected edge-subset enumeration (ESU over the line graph)

fn connected_edge_subsets(
    g: &Graph,
    max_size: usize,
    budget: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool, ToricError> {
    let m = g.edge_count();
    if m > 64 {
        return Err(ToricError::TooManyEdges);
    }
    let mut adj = vec![0u64; m];
    for v in 0..g.vertex_count() {
        for &(_, e1) in g.neighbors(v) {
            for &(_, e2) in g.neighbors(v) {
                if e1 != e2 {
                    adj[e1] |= 1 << e2;
                }
            }
        }
    }
    let mut explored: u64 = 0;

    struct Ctx<'a> {
        adj: &'a [u64],
        max_size: usize,
        budget: u64,
        /// Edges greater than the start edge of the current root.
        mask_gt: u64,
        explored: &'a mut u64,
        visit: &'a mut dyn FnMut(&[usize]) -> bool,
        stack_edges: Vec<usize>,
    }

    // returns false when the budget or the caller stopped the walk
    fn extend(ctx: &mut Ctx<'_>, ext: u64, closed_nbhd: u64) -> bool {
        *ctx.explored += 1;
        if *ctx.explored > ctx.budget {
            return false;
        }
        if !(ctx.visit)(&ctx.stack_edges) {
            return false;
        }
        if ctx.stack_edges.len() == ctx.max_size {
            return true;
        }
        let mut remaining = ext;
        while remaining != 0 {
            let w = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let new_ext = remaining | (ctx.adj[w] & !closed_nbhd & ctx.mask_gt);
            let new_closed = closed_nbhd | ctx.adj[w] | (1 << w);
            ctx.stack_edges.push(w);
            let ok = extend(ctx, new_ext, new_closed);
            ctx.stack_edges.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    let mut complete = true;
    for s in 0..m {
        let mask_gt = if s + 1 >= 64 {
            0
        } else {
            !((1u64 << (s + 1)) - 1)
        };
        let ext = adj[s] & mask_gt;
        let mut ctx = Ctx {
            adj: &adj,
            max_size,
            budget,
            mask_gt,
            explored: &mut explored,
            visit,
            stack_edges: vec![s],
        };
        if !extend(&mut ctx, ext, adj[s] | (1 << s)) {
            complete = false;
            break;
        }
    }
    if max_size < m {
        complete = false;
    }
    Ok(complete)
}

// ---------------------------------------------------------------------------
// public enumeration API

fn enumerate_forms(g: &Graph, caps: &EnumerationCaps, kind: BasisKind) -> BasisSet {
    let mut set: BTreeSet<Binomial> = BTreeSet::new();
    let mut capped = false;
    let result = connected_edge_subsets(
        g,
        caps.max_subgraph_edges.min(g.edge_count()),
        caps.exploration_budget,
        &mut |edges| {
            if edges.len() < 3 {
                return true;
            }
            let mut sorted = edges.to_vec();
            sorted.sort_unstable();
            if let Some(shape) = classify_subgraph(g, &sorted) {
                let accept = match (&shape, kind) {
                    (_, BasisKind::Graver) => true,
                    (Shape::EvenCycle, BasisKind::Circuits) => true,
                    (Shape::BlockTree { dec, tree }, BasisKind::Circuits) => {
                        is_circuit_shape(dec, tree)
                    }
                };
                if accept {
                    set.insert(shape_binomial(g, &sorted, &shape));
                    if set.len() >= caps.max_elements {
                        capped = true;
                        return false;
                    }
                }
            }
            true
        },
    );
    let complete = matches!(result, Ok(true)) && !capped;
    BasisSet {
        kind,
        elements: set.into_iter().collect(),
        edge_cap: Some(caps.max_subgraph_edges.min(g.edge_count())),
        complete,
    }
}

/// Circuits of the toric ideal of `g`: even cycles, two odd cycles sharing
/// one vertex, and two vertex-disjoint odd cycles joined by a path.
pub fn enumerate_circuits(g: &Graph, caps: &EnumerationCaps) -> BasisSet {
    enumerate_forms(g, caps, BasisKind::Circuits)
}

/// The Graver basis of the toric ideal of `g`, by structural enumeration of
/// primitive subgraphs.
pub fn enumerate_graver(g: &Graph, caps: &EnumerationCaps) -> BasisSet {
    enumerate_forms(g, caps, BasisKind::Graver)
}

/// Exhaustive kernel-lattice search: all integer vectors in ker(A_G) with
/// coordinates bounded by `coord_bound`, filtered to primitive elements by
/// pairwise side-wise divisibility.
///
/// The result is flagged complete only when the caller certifies the bound
/// (`bound_certified`): no coordinate bound for general Graver elements is
/// assumed here.
pub fn kernel_oracle_graver(
    g: &Graph,
    coord_bound: i64,
    bound_certified: bool,
    budget: u64,
) -> Result<BasisSet, ToricError> {
    assert!(coord_bound >= 1);
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut incident_remaining = vec![0i64; n];
    for &[u, w] in g.edges() {
        incident_remaining[u] += 1;
        incident_remaining[w] += 1;
    }

    let mut sums = vec![0i64; n];
    let mut remaining = incident_remaining.clone();
    let mut vec_cur = vec![0i64; m];
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut nodes: u64 = 0;

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        bound: i64,
        e: usize,
        seen_nonzero: bool,
        sums: &mut [i64],
        remaining: &mut [i64],
        cur: &mut [i64],
        found: &mut Vec<Vec<i64>>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<(), ToricError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(ToricError::SearchSpaceExceeded(budget));
        }
        if e == g.edge_count() {
            if seen_nonzero {
                found.push(cur.to_vec());
            }
            return Ok(());
        }
        let [u, w] = g.endpoints(e);
        // sign normalization: the first nonzero coordinate is positive
        let lo = if seen_nonzero { -bound } else { 0 };
        for val in lo..=bound {
            sums[u] += val;
            sums[w] += val;
            remaining[u] -= 1;
            remaining[w] -= 1;
            cur[e] = val;
            let feasible = [u, w].iter().all(|&v| {
                if remaining[v] == 0 {
                    sums[v] == 0
                } else {
                    sums[v].abs() <= remaining[v] * bound
                }
            });
            if feasible {
                dfs(
                    g,
                    bound,
                    e + 1,
                    seen_nonzero || val != 0,
                    sums,
                    remaining,
                    cur,
                    found,
                    nodes,
                    budget,
                )?;
            }
            sums[u] -= val;
            sums[w] -= val;
            remaining[u] += 1;
            remaining[w] += 1;
            cur[e] = 0;
        }
        Ok(())
    }

    if m > 0 {
        dfs(
            g,
            coord_bound,
            0,
            false,
            &mut sums,
            &mut remaining,
            &mut vec_cur,
            &mut found,
            &mut nodes,
            budget,
        )?;
    }

    let binomials: Vec<Binomial> = found.iter().map(|v| Binomial::from_vector(v)).collect();
    let mut primitive: BTreeSet<Binomial> = BTreeSet::new();
    'outer: for (i, b) in binomials.iter().enumerate() {
        for (j, other) in binomials.iter().enumerate() {
            if i == j {
                continue;
            }
            if b.divides_sidewise(other) || b.divides_sidewise(&other.swapped()) {
                continue 'outer;
            }
        }
        primitive.insert(b.sign_normalized());
    }

    Ok(BasisSet {
        kind: BasisKind::Graver,
        elements: primitive.into_iter().collect(),
        edge_cap: None,
        complete: bound_certified,
    })
}

/// True iff circuits and Graver basis coincide and every element is
/// square-free; `None` when either enumeration was truncated.
pub fn unimodularity_via_bases(g: &Graph, caps: &EnumerationCaps) -> Option<bool> {
    let circuits = enumerate_circuits(g, caps);
    let graver = enumerate_graver(g, caps);
    if !circuits.complete || !graver.complete {
        return None;
    }
    Some(circuits.elements == graver.elements && graver.all_square_free())
}

/// Support-minimality test: `b` is a circuit iff its nonzero entries are
/// coprime and no nonzero kernel vector has strictly smaller support.
/// Decided by exact rank computations on the support columns.
pub fn is_circuit(g: &Graph, b: &Binomial) -> Result<bool, ToricError> {
    if !b.is_homogeneous(g) {
        return Err(ToricError::NotHomogeneous);
    }
    if b.is_zero() {
        return Ok(false);
    }
    let mut gcd: u32 = 0;
    for &k in b.plus().values().chain(b.minus().values()) {
        gcd = gcd_u32(gcd, k);
    }
    if gcd != 1 {
        return Ok(false);
    }
    let supp = b.support();
    let a = g.incidence_matrix();
    // minimal support <=> removing any one support column leaves the rest
    // linearly independent (any smaller-support kernel vector would live in
    // one of these column sets)
    for skip in &supp {
        let cols: Vec<usize> = supp.iter().copied().filter(|e| e != skip).collect();
        let rows: Vec<Vec<i64>> = (0..a.rows())
            .map(|r| cols.iter().map(|&c| a.entry(r, c) as i64).collect())
            .collect();
        if rank_of(&rows) < cols.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use std::collections::BTreeMap;

    fn caps() -> EnumerationCaps {
        EnumerationCaps::default()
    }

    fn four_cycle() -> Graph {
        Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_indices(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn dumbbell() -> Graph {
        Graph::from_indices(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 4), (4, 5), (5, 6), (6, 4)],
        )
        .unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_indices(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn bn(plus: &[(usize, u32)], minus: &[(usize, u32)]) -> Binomial {
        Binomial::new(
            plus.iter().copied().collect::<BTreeMap<_, _>>(),
            minus.iter().copied().collect::<BTreeMap<_, _>>(),
        )
        .sign_normalized()
    }

    #[test]
    fn four_cycle_single_circuit() {
        let c = enumerate_circuits(&four_cycle(), &caps());
        assert!(c.complete);
        assert_eq!(c.elements, vec![bn(&[(0, 1), (2, 1)], &[(1, 1), (3, 1)])]);
        let gr = enumerate_graver(&four_cycle(), &caps());
        assert_eq!(gr.elements, c.elements);
    }

    #[test]
    fn triangle_trivial_kernel() {
        let g = Graph::from_indices(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(enumerate_circuits(&g, &caps()).elements.is_empty());
        assert!(enumerate_graver(&g, &caps()).elements.is_empty());
        let oracle = kernel_oracle_graver(&g, 3, true, 1_000_000).unwrap();
        assert!(oracle.elements.is_empty());
        assert!(oracle.complete);
    }

    #[test]
    fn k4_three_quadrics() {
        let c = enumerate_circuits(&k4(), &caps());
        assert_eq!(c.elements.len(), 3);
        assert!(c.all_square_free());
        assert!(c.elements.iter().all(|b| b.degree() == 2));
        let gr = enumerate_graver(&k4(), &caps());
        assert_eq!(gr.elements, c.elements);
        let oracle = kernel_oracle_graver(&k4(), 2, true, 10_000_000).unwrap();
        assert_eq!(oracle.elements, gr.elements);
        assert_eq!(unimodularity_via_bases(&k4(), &caps()), Some(true));
    }

    #[test]
    fn dumbbell_unique_primitive_element() {
        let gr = enumerate_graver(&dumbbell(), &caps());
        assert_eq!(gr.elements.len(), 1);
        assert!(!gr.elements[0].is_square_free());
        assert!(gr.elements[0].is_homogeneous(&dumbbell()));
        let oracle = kernel_oracle_graver(&dumbbell(), 2, true, 10_000_000).unwrap();
        assert_eq!(oracle.elements, gr.elements);
        // the unique element is also the unique circuit: form (c3)
        let c = enumerate_circuits(&dumbbell(), &caps());
        assert_eq!(c.elements, gr.elements);
        assert_eq!(unimodularity_via_bases(&dumbbell(), &caps()), Some(false));
    }

    #[test]
    fn bowtie_single_square_free_cubic() {
        let gr = enumerate_graver(&bowtie(), &caps());
        assert_eq!(gr.elements.len(), 1);
        assert!(gr.elements[0].is_square_free());
        assert_eq!(gr.elements[0].degree(), 3);
        let oracle = kernel_oracle_graver(&bowtie(), 1, true, 1_000_000).unwrap();
        assert_eq!(oracle.elements, gr.elements);
        assert_eq!(unimodularity_via_bases(&bowtie(), &caps()), Some(true));
    }

    // Two triangles, each attached at a single vertex to both ends of two
    // internally disjoint length-2 paths: the full edge set is primitive
    // (middle even cycle between two odd cycles) but not a circuit.
    #[test]
    fn primitive_non_circuit() {
        let g = Graph::from_indices(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0), // triangle at 0
                (3, 4),
                (4, 5),
                (5, 3), // triangle at 3
                (0, 6),
                (6, 3), // path 1
                (0, 7),
                (7, 3), // path 2
            ],
        )
        .unwrap();
        let gr = enumerate_graver(&g, &caps());
        let c = enumerate_circuits(&g, &caps());
        assert!(c.is_subset_of(&gr));
        let extra: Vec<&Binomial> = gr
            .elements
            .iter()
            .filter(|b| !c.contains(b))
            .collect();
        assert!(!extra.is_empty());
        for b in &extra {
            assert!(!is_circuit(&g, b).unwrap());
            assert!(b.is_homogeneous(&g));
        }
        let oracle = kernel_oracle_graver(&g, 2, true, 50_000_000).unwrap();
        assert_eq!(oracle.elements, gr.elements);
    }

    #[test]
    fn is_circuit_cases() {
        let g = four_cycle();
        let b = bn(&[(0, 1), (2, 1)], &[(1, 1), (3, 1)]);
        assert!(is_circuit(&g, &b).unwrap());
        let doubled = bn(&[(0, 2), (2, 2)], &[(1, 2), (3, 2)]);
        assert!(!is_circuit(&g, &doubled).unwrap()); // gcd = 2
        let not_hom = bn(&[(0, 1)], &[]);
        assert_eq!(is_circuit(&g, &not_hom), Err(ToricError::NotHomogeneous));
        let dumb = dumbbell();
        let el = enumerate_graver(&dumb, &caps()).elements[0].clone();
        assert!(is_circuit(&dumb, &el).unwrap());
    }

    #[test]
    fn circuits_subset_of_graver() {
        for g in [four_cycle(), k4(), dumbbell(), bowtie()] {
            let c = enumerate_circuits(&g, &caps());
            let gr = enumerate_graver(&g, &caps());
            assert!(c.is_subset_of(&gr));
            for b in &gr.elements {
                assert!(b.is_homogeneous(&g));
            }
        }
    }

    #[test]
    fn element_cap_reports_incomplete() {
        let tight = EnumerationCaps {
            max_elements: 1,
            ..EnumerationCaps::default()
        };
        let c = enumerate_circuits(&k4(), &tight);
        assert!(!c.complete);
        assert_eq!(c.elements.len(), 1);
    }
}
