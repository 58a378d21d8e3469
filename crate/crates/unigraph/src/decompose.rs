//! Connected components, biconnected blocks, cut vertices, bipartiteness
//! and induced (chordless) odd cycle extraction.

use crate::graph::{Graph, Walk};

/// A cycle with a parity flag. The walk starts and ends at the cycle's
/// smallest vertex and runs towards its smaller neighbor, so equal cycles
/// compare equal. Witnesses produced by this module are chordless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    walk: Walk,
    odd: bool,
}

impl CycleWitness {
    /// Canonicalize a closed vertex sequence (first == last) into a witness.
    pub fn from_cycle_vertices(g: &Graph, cycle: &[usize]) -> CycleWitness {
        assert!(cycle.len() >= 4 && cycle.first() == cycle.last());
        let verts = &cycle[..cycle.len() - 1];
        let k = verts.len();
        let start = (0..k).min_by_key(|&i| verts[i]).unwrap();
        let succ = verts[(start + 1) % k];
        let pred = verts[(start + k - 1) % k];
        let mut seq = Vec::with_capacity(k + 1);
        if succ <= pred {
            for i in 0..=k {
                seq.push(verts[(start + i) % k]);
            }
        } else {
            for i in 0..=k {
                seq.push(verts[(start + k - i) % k]);
            }
        }
        let walk = Walk::from_vertices(g, seq).expect("cycle vertices must be adjacent");
        let odd = walk.len() % 2 == 1;
        CycleWitness { walk, odd }
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cycle vertices without the repeated endpoint.
    pub fn vertices(&self) -> &[usize] {
        let v = self.walk.vertices();
        &v[..v.len() - 1]
    }

    /// True iff no graph edge joins two non-consecutive cycle vertices.
    pub fn is_chordless(&self, g: &Graph) -> bool {
        let verts = self.vertices();
        let k = verts.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.edge_between(verts[i], verts[j]).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

/// Maximal connected subgraphs, ordered by smallest vertex index. Vertex
/// labels are preserved; edge order follows the parent graph.
pub fn connected_components(g: &Graph) -> Vec<Graph> {
    component_vertex_sets(g)
        .into_iter()
        .map(|verts| {
            let labels: Vec<&str> = verts.iter().map(|&v| g.label(v)).collect();
            let in_comp = |v: usize| verts.binary_search(&v).is_ok();
            let pairs: Vec<(&str, &str)> = g
                .edges()
                .iter()
                .filter(|&&[u, w]| in_comp(u) && in_comp(w))
                .map(|&[u, w]| (g.label(u), g.label(w)))
                .collect();
            Graph::new(&labels, &pairs).expect("component of a valid graph is valid")
        })
        .collect()
}

/// Vertex sets of the connected components, each sorted ascending, ordered
/// by smallest member.
pub fn component_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Edge indices of the block, ascending.
    pub edges: Vec<usize>,
    /// Vertices touched by those edges, ascending.
    pub vertices: Vec<usize>,
    /// True iff the block's subgraph has no odd cycle.
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by smallest edge index. Bridges appear as 1-edge blocks.
    pub blocks: Vec<Block>,
    /// Vertices lying in at least two blocks, ascending.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Number of non-bipartite blocks.
    pub fn non_bipartite_count(&self) -> usize {
        self.blocks.iter().filter(|b| !b.bipartite).count()
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let full = full_masks(g);
    block_decomposition_masked(g, &full.0, &full.1)
}

pub(crate) fn full_masks(g: &Graph) -> (Vec<bool>, Vec<bool>) {
    (
        vec![true; g.vertex_count()],
        vec![true; g.edge_count()],
    )
}

/// Lowpoint DFS (Hopcroft–Tarjan) over the alive subgraph.
pub(crate) fn block_decomposition_masked(
    g: &Graph,
    vmask: &[bool],
    emask: &[bool],
) -> BlockDecomposition {
    struct Dfs<'a> {
        g: &'a Graph,
        vmask: &'a [bool],
        emask: &'a [bool],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edge_stack: Vec<usize>,
        blocks: Vec<Vec<usize>>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent_edge: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for &(w, e) in self.g.neighbors(v) {
                if !self.emask[e] || !self.vmask[w] || parent_edge == Some(e) {
                    continue;
                }
                if self.disc[w] == 0 {
                    self.edge_stack.push(e);
                    self.visit(w, Some(e));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        // v separates the subtree at w: pop one block
                        let mut block = Vec::new();
                        while let Some(&top) = self.edge_stack.last() {
                            self.edge_stack.pop();
                            block.push(top);
                            if top == e {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.edge_stack.push(e);
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }

    let n = g.vertex_count();
    let mut dfs = Dfs {
        g,
        vmask,
        emask,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    for (v, &live) in vmask.iter().enumerate().take(n) {
        if live && dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }

    let mut blocks: Vec<Block> = dfs
        .blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> =
                edges.iter().flat_map(|&e| g.endpoints(e)).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let bipartite = {
                let mut bmask = vec![false; g.edge_count()];
                for &e in &edges {
                    bmask[e] = true;
                }
                let mut bvmask = vec![false; g.vertex_count()];
                for &v in &vertices {
                    bvmask[v] = true;
                }
                bipartite_check_masked(g, &bvmask, &bmask).is_ok()
            };
            Block {
                edges,
                vertices,
                bipartite,
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();

    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// Either a proper 2-coloring (color per vertex, `None` for vertices outside
/// the graph under inspection) or an odd chordless cycle witness.
pub fn bipartite_check(g: &Graph) -> Result<Vec<Option<u8>>, CycleWitness> {
    let (vm, em) = full_masks(g);
    bipartite_check_masked(g, &vm, &em)
}

pub(crate) fn bipartite_check_masked(
    g: &Graph,
    vmask: &[bool],
    emask: &[bool],
) -> Result<Vec<Option<u8>>, CycleWitness> {
    let n = g.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for s in 0..n {
        if !vmask[s] || color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &(w, e) in g.neighbors(v) {
                if !emask[e] || !vmask[w] {
                    continue;
                }
                match color[w] {
                    None => {
                        color[w] = Some(1 - cv);
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        let cycle = conflict_cycle(&parent, v, w);
                        let cycle = shrink_to_chordless_odd(g, emask, cycle);
                        return Err(CycleWitness::from_cycle_vertices(g, &cycle));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color)
}

/// Closed vertex sequence for the odd cycle formed by BFS-tree paths from
/// `v` and `w` up to their lowest common ancestor, plus the edge `v`–`w`.
fn conflict_cycle(parent: &[Option<usize>], v: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while let Some(px) = parent[x] {
            p.push(px);
            x = px;
        }
        p
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    // strip the common suffix down to the LCA
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pv[..i].iter().rev().copied().collect(); // lca .. v
    cycle.extend(pw[..j].iter().copied()); // w .. lca, closing the cycle
    cycle
}

/// Repeatedly shortcut chords, keeping the odd side, until chordless.
fn shrink_to_chordless_odd(g: &Graph, emask: &[bool], mut cycle: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        let verts = &cycle[..cycle.len() - 1];
        let k = verts.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if consecutive {
                    continue;
                }
                match g.edge_between(verts[i], verts[j]) {
                    Some(e) if emask[e] => e,
                    _ => continue,
                };
                // split along the chord into two shorter cycles; exactly one
                // of them is odd since the original cycle is odd
                let side_a: Vec<usize> = verts[i..=j]
                    .iter()
                    .copied()
                    .chain([verts[i]])
                    .collect();
                let mut side_b: Vec<usize> = verts[j..].to_vec();
                side_b.extend(verts[..=i].iter().copied());
                side_b.push(verts[j]);
                cycle = if (side_a.len() - 1) % 2 == 1 {
                    side_a
                } else {
                    side_b
                };
                continue 'outer;
            }
        }
        return cycle;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleEnumeration {
    /// Chordless odd cycles in canonical order.
    pub cycles: Vec<CycleWitness>,
    /// True when the cap cut the enumeration short.
    pub truncated: bool,
}

/// All chordless (induced) odd cycles, canonically ordered, truncated at
/// `cap` with an explicit flag.
pub fn enumerate_induced_odd_cycles(g: &Graph, cap: usize) -> OddCycleEnumeration {
    let (vm, em) = full_masks(g);
    enumerate_induced_odd_cycles_masked(g, &vm, &em, cap)
}

pub(crate) fn enumerate_induced_odd_cycles_masked(
    g: &Graph,
    vmask: &[bool],
    emask: &[bool],
    cap: usize,
) -> OddCycleEnumeration {
    assert!(cap >= 1);
    let n = g.vertex_count();
    let mut cycles: Vec<CycleWitness> = Vec::new();
    let mut truncated = false;

    let adjacent = |a: usize, b: usize| match g.edge_between(a, b) {
        Some(e) => emask[e],
        None => false,
    };

    // Grow chordless paths s, v1, ..., vk with all vi > s; close via the
    // edge vk–s. Reflections are dropped by requiring v1 < vk at emit time.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        vmask: &[bool],
        emask: &[bool],
        adjacent: &dyn Fn(usize, usize) -> bool,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<CycleWitness>,
        cap: usize,
        truncated: &mut bool,
    ) {
        if *truncated {
            return;
        }
        let s = path[0];
        let last = *path.last().unwrap();
        for &(u, e) in g.neighbors(last) {
            if *truncated {
                return;
            }
            if !emask[e] || !vmask[u] || u <= s || on_path[u] {
                continue;
            }
            // chordlessness: u may touch the path only at `last` (and at s,
            // which closes the cycle)
            if path.len() > 1 && path[1..path.len() - 1].iter().any(|&p| adjacent(u, p)) {
                continue;
            }
            path.push(u);
            on_path[u] = true;
            // the edge back to s is a closing edge only once the path has an
            // interior; at path length 2 it is just the path's first edge
            if path.len() >= 3 && adjacent(u, s) {
                if path[1] < u && path.len() % 2 == 1 {
                    let mut cyc = path.clone();
                    cyc.push(s);
                    cycles.push(CycleWitness::from_cycle_vertices(g, &cyc));
                    if cycles.len() >= cap {
                        *truncated = true;
                    }
                }
                // extending past a closing edge would leave a chord
            } else {
                extend(
                    g, vmask, emask, adjacent, path, on_path, cycles, cap, truncated,
                );
            }
            on_path[u] = false;
            path.pop();
        }
    }

    let mut on_path = vec![false; n];
    for s in 0..n {
        if !vmask[s] || truncated {
            continue;
        }
        let mut path = vec![s];
        on_path[s] = true;
        extend(
            g,
            vmask,
            emask,
            &adjacent,
            &mut path,
            &mut on_path,
            &mut cycles,
            cap,
            &mut truncated,
        );
        on_path[s] = false;
    }

    cycles.sort_by(|a, b| {
        (a.len(), a.walk().vertices()).cmp(&(b.len(), b.walk().vertices()))
    });
    OddCycleEnumeration { cycles, truncated }
}
