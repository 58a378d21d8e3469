//! The strong odd cycle property, link vertices, and the top-level
//! unimodularity decision with machine-checkable certificates.

use thiserror::Error;

use crate::binomial::{walk_binomial, Binomial};
use crate::decompose::{
    bipartite_check_masked, block_decomposition, component_vertex_sets,
    enumerate_induced_odd_cycles_masked, CycleWitness,
};
use crate::graph::{Graph, GraphError, Walk};

/// Default cap on induced odd cycle enumeration during SOC decisions.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SocError {
    #[error("witness cycles are not vertex-disjoint")]
    CyclesNotDisjoint,
    #[error("no path connects the two witness cycles")]
    NoConnectingPath,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Two vertex-disjoint odd cycles, as evidence against the strong odd cycle
/// property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointOddCycles {
    pub first: CycleWitness,
    pub second: CycleWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SocOutcome {
    /// Any two odd cycles intersect.
    Holds,
    Violated(DisjointOddCycles),
    /// The induced odd cycle enumeration hit its cap; no verdict.
    Indeterminate { cap: usize },
}

/// Decide the strong odd cycle property: for each induced odd cycle `C`,
/// check bipartiteness of `G − V(C)`; a coloring conflict there yields a
/// second odd cycle disjoint from `C`. Two vertex-disjoint odd cycles exist
/// iff some induced odd cycle leaves a non-bipartite remainder.
pub fn has_strong_odd_cycle_property(g: &Graph) -> SocOutcome {
    has_strong_odd_cycle_property_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn has_strong_odd_cycle_property_capped(g: &Graph, cap: usize) -> SocOutcome {
    let (vm, em) = crate::decompose::full_masks(g);
    soc_masked(g, &vm, &em, cap)
}

pub(crate) fn soc_masked(g: &Graph, vmask: &[bool], emask: &[bool], cap: usize) -> SocOutcome {
    let enumeration = enumerate_induced_odd_cycles_masked(g, vmask, emask, cap);
    for c in &enumeration.cycles {
        let mut vm = vmask.to_vec();
        for &v in c.vertices() {
            vm[v] = false;
        }
        if let Err(second) = bipartite_check_masked(g, &vm, emask) {
            return SocOutcome::Violated(DisjointOddCycles {
                first: c.clone(),
                second,
            });
        }
    }
    if enumeration.truncated {
        return SocOutcome::Indeterminate { cap };
    }
    SocOutcome::Holds
}

/// True iff deleting `v` leaves a bipartite graph — equivalently, every odd
/// cycle passes through `v`.
pub fn is_link_vertex(g: &Graph, v: usize) -> Result<bool, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(v.to_string()));
    }
    let (mut vm, em) = crate::decompose::full_masks(g);
    vm[v] = false;
    Ok(bipartite_check_masked(g, &vm, &em).is_ok())
}

/// Smallest-index link vertex, if any.
pub fn find_link_vertex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| is_link_vertex(g, v).unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    UnimodularBipartite,
    UnimodularSingleBlockSoc,
    UnimodularLinkVertex,
    NotUnimodular,
    Indeterminate,
}

impl Verdict {
    pub fn is_unimodular(self) -> bool {
        matches!(
            self,
            Verdict::UnimodularBipartite
                | Verdict::UnimodularSingleBlockSoc
                | Verdict::UnimodularLinkVertex
        )
    }
}

/// Verdict of the unimodularity decision plus everything needed to check it
/// independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    /// Number of non-bipartite blocks, over the whole graph.
    pub non_bipartite_blocks: usize,
    /// For the link-vertex case: a vertex through which every odd cycle of
    /// its component passes.
    pub link_vertex: Option<usize>,
    /// For the single-block case: index of the non-bipartite block in
    /// [`block_decomposition`] order.
    pub soc_block: Option<usize>,
    /// For the negative case: two vertex-disjoint odd cycles and a shortest
    /// connecting path.
    pub witness: Option<NegativeWitness>,
    /// The induced non-square-free circuit, for the negative case.
    pub witness_binomial: Option<Binomial>,
    pub indeterminate_reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeWitness {
    pub cycle1: CycleWitness,
    pub cycle2: CycleWitness,
    pub path: Walk,
}

/// Classify `g` per connected component: no non-bipartite block, exactly
/// one (SOC tested inside it), or several (link vertex required). Any
/// component with two vertex-disjoint odd cycles makes the whole graph not
/// unimodular and yields a self-validating witness.
pub fn decide_unimodular(g: &Graph) -> Certificate {
    decide_unimodular_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn decide_unimodular_capped(g: &Graph, cap: usize) -> Certificate {
    let dec = block_decomposition(g);
    let s_total = dec.non_bipartite_count();
    let components = component_vertex_sets(g);

    let mut indeterminate: Option<String> = None;
    let mut link_vertex: Option<usize> = None;
    let mut soc_block: Option<usize> = None;

    for comp in &components {
        let mut vmask = vec![false; g.vertex_count()];
        for &v in comp {
            vmask[v] = true;
        }
        let emask: Vec<bool> = g
            .edges()
            .iter()
            .map(|&[u, w]| vmask[u] && vmask[w])
            .collect();

        // blocks of this component, by global index
        let comp_blocks: Vec<usize> = (0..dec.blocks.len())
            .filter(|&i| vmask[dec.blocks[i].vertices[0]])
            .collect();
        let non_bip: Vec<usize> = comp_blocks
            .iter()
            .copied()
            .filter(|&i| !dec.blocks[i].bipartite)
            .collect();

        match non_bip.len() {
            0 => {}
            1 => {
                // all odd cycles live inside the unique non-bipartite block,
                // so SOC there is SOC on the component
                let block = &dec.blocks[non_bip[0]];
                let mut bvm = vec![false; g.vertex_count()];
                for &v in &block.vertices {
                    bvm[v] = true;
                }
                let mut bem = vec![false; g.edge_count()];
                for &e in &block.edges {
                    bem[e] = true;
                }
                match soc_masked(g, &bvm, &bem, cap) {
                    SocOutcome::Holds => {
                        soc_block.get_or_insert(non_bip[0]);
                    }
                    SocOutcome::Violated(pair) => {
                        return negative_certificate(g, s_total, pair);
                    }
                    SocOutcome::Indeterminate { cap } => {
                        indeterminate
                            .get_or_insert(format!("induced odd cycle cap {cap} exceeded"));
                    }
                }
            }
            _ => {
                let found = comp.iter().copied().find(|&v| {
                    let mut vm = vmask.clone();
                    vm[v] = false;
                    bipartite_check_masked(g, &vm, &emask).is_ok()
                });
                match found {
                    Some(v) => {
                        link_vertex.get_or_insert(v);
                    }
                    None => match soc_masked(g, &vmask, &emask, cap) {
                        SocOutcome::Violated(pair) => {
                            return negative_certificate(g, s_total, pair);
                        }
                        SocOutcome::Indeterminate { cap } => {
                            indeterminate
                                .get_or_insert(format!("induced odd cycle cap {cap} exceeded"));
                        }
                        SocOutcome::Holds => {
                            // s >= 2 with SOC forces a link vertex
                            unreachable!(
                                "component with {} non-bipartite blocks satisfies SOC \
                                 but has no link vertex",
                                non_bip.len()
                            );
                        }
                    },
                }
            }
        }
    }

    if let Some(reason) = indeterminate {
        return Certificate {
            verdict: Verdict::Indeterminate,
            non_bipartite_blocks: s_total,
            link_vertex: None,
            soc_block: None,
            witness: None,
            witness_binomial: None,
            indeterminate_reason: Some(reason),
        };
    }

    let verdict = match s_total {
        0 => Verdict::UnimodularBipartite,
        1 => Verdict::UnimodularSingleBlockSoc,
        _ => Verdict::UnimodularLinkVertex,
    };
    Certificate {
        verdict,
        non_bipartite_blocks: s_total,
        link_vertex: if verdict == Verdict::UnimodularLinkVertex {
            link_vertex
        } else {
            None
        },
        soc_block: if verdict == Verdict::UnimodularSingleBlockSoc {
            soc_block
        } else {
            None
        },
        witness: None,
        witness_binomial: None,
        indeterminate_reason: None,
    }
}

fn negative_certificate(g: &Graph, s_total: usize, pair: DisjointOddCycles) -> Certificate {
    let (path, binomial) = non_square_free_circuit_witness(g, &pair.first, &pair.second)
        .expect("witness cycles are disjoint and connected");
    Certificate {
        verdict: Verdict::NotUnimodular,
        non_bipartite_blocks: s_total,
        link_vertex: None,
        soc_block: None,
        witness: Some(NegativeWitness {
            cycle1: pair.first,
            cycle2: pair.second,
            path,
        }),
        witness_binomial: Some(binomial),
        indeterminate_reason: None,
    }
}

/// For two vertex-disjoint odd cycles in a connected graph: find a BFS
/// shortest connecting path `p` (smallest-index tie-breaking) and return it
/// with the binomial of the walk `(c1, p, c2, −p)`. The result is a circuit
/// with the path edges squared, hence never square-free.
pub fn non_square_free_circuit_witness(
    g: &Graph,
    c1: &CycleWitness,
    c2: &CycleWitness,
) -> Result<(Walk, Binomial), SocError> {
    let set1: Vec<usize> = c1.vertices().to_vec();
    let set2: Vec<usize> = c2.vertices().to_vec();
    if set1.iter().any(|v| set2.contains(v)) {
        return Err(SocError::CyclesNotDisjoint);
    }

    // multi-source BFS from the first cycle, levels processed in ascending
    // vertex order for deterministic paths
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut frontier: Vec<usize> = set1.clone();
    frontier.sort_unstable();
    for &v in &frontier {
        dist[v] = Some(0);
    }
    let mut hit: Option<usize> = None;
    'bfs: while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            let mut nbrs: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
            nbrs.sort_unstable();
            for w in nbrs {
                if dist[w].is_some() {
                    continue;
                }
                dist[w] = Some(dist[v].unwrap() + 1);
                parent[w] = Some(v);
                if set2.contains(&w) {
                    hit = Some(w);
                    break 'bfs;
                }
                next.push(w);
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    let Some(end) = hit else {
        return Err(SocError::NoConnectingPath);
    };

    let mut path_vertices = vec![end];
    let mut cur = end;
    while let Some(p) = parent[cur] {
        path_vertices.push(p);
        cur = p;
    }
    path_vertices.reverse(); // from cycle1 to cycle2
    let path = Walk::from_vertices(g, path_vertices.clone()).expect("BFS path is connected");

    let start1 = path_vertices[0];
    let start2 = *path_vertices.last().unwrap();
    let rot1 = rotate_cycle(c1, start1);
    let rot2 = rotate_cycle(c2, start2);

    let mut walk_vertices = rot1; // c1, closed at start1
    walk_vertices.extend(path_vertices.iter().skip(1)); // p
    walk_vertices.extend(rot2.iter().skip(1)); // c2, closed at start2
    walk_vertices.extend(path_vertices.iter().rev().skip(1)); // −p
    let walk = Walk::from_vertices(g, walk_vertices).expect("witness walk is consistent");
    let binomial = walk_binomial(&walk)
        .expect("c1 + p + c2 − p is closed and even")
        .sign_normalized();
    Ok((path, binomial))
}

/// Closed vertex sequence of the cycle, rotated to start and end at `anchor`.
fn rotate_cycle(c: &CycleWitness, anchor: usize) -> Vec<usize> {
    let verts = c.vertices();
    let k = verts.len();
    let pos = verts
        .iter()
        .position(|&v| v == anchor)
        .expect("anchor lies on the cycle");
    (0..=k).map(|i| verts[(pos + i) % k]).collect()
}
