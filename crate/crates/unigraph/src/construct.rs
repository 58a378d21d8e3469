//! Certified construction of unimodular graphs: flower bases, validated ear
//! additions, replayable scripts, and a seeded random generator.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::decompose::{bipartite_check, block_decomposition};
use crate::graph::Graph;
use crate::soc::is_link_vertex;

/// Label of the carpel vertex in every flower produced here.
pub const CARPEL_LABEL: &str = "v";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("a flower needs at least 2 petals, got {0}")]
    TooFewPetals(usize),
    #[error("petal length {0} is invalid: petals must be odd and at least 3")]
    BadPetalLength(usize),
    #[error("base cycle length {0} is invalid: must be even and at least 4")]
    BadBaseCycle(usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("vertex {0:?} is not a link vertex of the graph")]
    NotLinkVertex(String),
    #[error("ear ends {0:?} and {1:?} lie in different blocks")]
    EndsInDifferentBlocks(String, String),
    #[error("ear length must be at least 1")]
    ZeroLength,
    #[error("length-1 ear from {0:?} to itself would be a self-loop")]
    SelfLoop(String),
    #[error("length-1 ear duplicates the existing edge {0:?}-{1:?}")]
    ParallelEdge(String, String),
    #[error("case {case:?} requires {required} ear length, got {got}")]
    ParityViolation {
        case: EarCase,
        required: &'static str,
        got: usize,
    },
    #[error("no reference path between {0:?} and {1:?} fixes the ear parity")]
    NoReferencePath(String, String),
    #[error("bipartite-mode ear on a non-bipartite graph")]
    NotBipartite,
    #[error("ear {index} declared case {declared:?} but validates as {actual:?}")]
    CaseMismatch {
        index: usize,
        declared: EarCase,
        actual: EarCase,
    },
    #[error("ear {index} rejected: {source}")]
    EarRejected {
        index: usize,
        source: Box<ConstructError>,
    },
}

/// Which validation rule an ear falls under.
///
/// With a link vertex `v`: `Alpha` touches `v` (any length), `Beta` has both
/// ends at one vertex other than `v` (even length), `Gamma` joins two
/// distinct non-`v` vertices (same parity as a `v`-avoiding path).
/// `Bipartite` is the link-vertex-free rule: same parity as any existing
/// path between the ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EarCase {
    Alpha,
    Beta,
    Gamma,
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Base {
    /// Even chordless cycle of the given length, vertices `c1..ck`.
    EvenCycle(usize),
    /// Flower with the given odd petal lengths, carpel labeled
    /// [`CARPEL_LABEL`].
    Flower(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub v1: String,
    pub v2: String,
    pub length: usize,
    pub case: EarCase,
}

/// A replayable recipe: a base graph plus validated ears, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionScript {
    pub base: Base,
    pub ears: Vec<Ear>,
}

/// Cycles of the given odd lengths sharing exactly one vertex, the carpel.
/// Petal `i` (1-based) of length `L` contributes fresh vertices
/// `p<i>.1 .. p<i>.<L-1>`.
pub fn flower_graph(odd_lengths: &[usize]) -> Result<Graph, ConstructError> {
    if odd_lengths.len() < 2 {
        return Err(ConstructError::TooFewPetals(odd_lengths.len()));
    }
    let mut labels = vec![CARPEL_LABEL.to_string()];
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, &len) in odd_lengths.iter().enumerate() {
        if len < 3 || len % 2 == 0 {
            return Err(ConstructError::BadPetalLength(len));
        }
        let petal: Vec<String> = (1..len).map(|j| format!("p{}.{}", i + 1, j)).collect();
        edges.push((CARPEL_LABEL.to_string(), petal[0].clone()));
        for w in petal.windows(2) {
            edges.push((w[0].clone(), w[1].clone()));
        }
        edges.push((petal.last().unwrap().clone(), CARPEL_LABEL.to_string()));
        labels.extend(petal);
    }
    Ok(Graph::new(&labels, &edges).expect("flower labels are fresh by construction"))
}

/// Even chordless cycle `c1 - c2 - ... - ck - c1`.
pub fn even_cycle(length: usize) -> Result<Graph, ConstructError> {
    if length < 4 || length % 2 == 1 {
        return Err(ConstructError::BadBaseCycle(length));
    }
    let labels: Vec<String> = (1..=length).map(|i| format!("c{i}")).collect();
    let edges: Vec<(String, String)> = (0..length)
        .map(|i| (labels[i].clone(), labels[(i + 1) % length].clone()))
        .collect();
    Ok(Graph::new(&labels, &edges).unwrap())
}

/// Append a path of `length` new edges between `v1` and `v2` through fresh
/// internal vertices, after validating the parity rule that applies. The
/// rule is dispatched automatically: with `link_vertex` supplied, the ear
/// must keep every odd cycle through that vertex; without it, the graph must
/// be bipartite and stay bipartite. Returns the extended graph and the case
/// that was validated.
pub fn add_ear(
    g: &Graph,
    v1: &str,
    v2: &str,
    length: usize,
    link_vertex: Option<&str>,
) -> Result<(Graph, EarCase), ConstructError> {
    let a = g
        .vertex_index(v1)
        .ok_or_else(|| ConstructError::UnknownLabel(v1.to_string()))?;
    let b = g
        .vertex_index(v2)
        .ok_or_else(|| ConstructError::UnknownLabel(v2.to_string()))?;
    if length == 0 {
        return Err(ConstructError::ZeroLength);
    }
    if a == b && length < 3 {
        // a closed ear shorter than a triangle is a self-loop or a digon
        return Err(ConstructError::SelfLoop(v1.to_string()));
    }
    if length == 1 && g.edge_between(a, b).is_some() {
        return Err(ConstructError::ParallelEdge(v1.to_string(), v2.to_string()));
    }

    let case = match link_vertex {
        Some(lvl) => {
            let lv = g
                .vertex_index(lvl)
                .ok_or_else(|| ConstructError::UnknownLabel(lvl.to_string()))?;
            if !is_link_vertex(g, lv).unwrap() {
                return Err(ConstructError::NotLinkVertex(lvl.to_string()));
            }
            let dec = block_decomposition(g);
            let same_block = dec
                .blocks
                .iter()
                .any(|blk| blk.vertices.contains(&a) && blk.vertices.contains(&b));
            if !same_block {
                return Err(ConstructError::EndsInDifferentBlocks(
                    v1.to_string(),
                    v2.to_string(),
                ));
            }
            if a == lv || b == lv {
                EarCase::Alpha // any length
            } else if a == b {
                if length % 2 == 1 {
                    return Err(ConstructError::ParityViolation {
                        case: EarCase::Beta,
                        required: "even",
                        got: length,
                    });
                }
                EarCase::Beta
            } else {
                // parity of any path avoiding the link vertex; well defined
                // because the graph minus the link vertex is bipartite
                let parity = path_parity_avoiding(g, a, b, Some(lv))
                    .ok_or_else(|| {
                        ConstructError::NoReferencePath(v1.to_string(), v2.to_string())
                    })?;
                if length % 2 != parity {
                    return Err(ConstructError::ParityViolation {
                        case: EarCase::Gamma,
                        required: if parity == 0 { "even" } else { "odd" },
                        got: length,
                    });
                }
                EarCase::Gamma
            }
        }
        None => {
            let colors = bipartite_check(g).map_err(|_| ConstructError::NotBipartite)?;
            let (ca, cb) = match (colors[a], colors[b]) {
                (Some(x), Some(y)) => (x, y),
                _ => unreachable!("every vertex of a bipartite graph is colored"),
            };
            let parity = path_parity_avoiding(g, a, b, None)
                .ok_or_else(|| ConstructError::NoReferencePath(v1.to_string(), v2.to_string()))?;
            debug_assert_eq!(parity as u8, ca ^ cb);
            if length % 2 != parity {
                return Err(ConstructError::ParityViolation {
                    case: EarCase::Bipartite,
                    required: if parity == 0 { "even" } else { "odd" },
                    got: length,
                });
            }
            EarCase::Bipartite
        }
    };

    Ok((append_path(g, a, b, length), case))
}

/// Parity (0 = even, 1 = odd) of a shortest path from `a` to `b` avoiding
/// `forbidden`, or `None` when no such path exists.
fn path_parity_avoiding(g: &Graph, a: usize, b: usize, forbidden: Option<usize>) -> Option<usize> {
    if a == b {
        return Some(0);
    }
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[a] = 0;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if Some(w) == forbidden || dist[w] != usize::MAX {
                continue;
            }
            dist[w] = dist[v] + 1;
            if w == b {
                return Some(dist[w] % 2);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Extend the graph with a fresh path of `length` edges between existing
/// vertices `a` and `b`.
fn append_path(g: &Graph, a: usize, b: usize, length: usize) -> Graph {
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut edges: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|&[u, w]| (labels[u].clone(), labels[w].clone()))
        .collect();
    let mut fresh_id = 0usize;
    let mut prev = labels[a].clone();
    let last = labels[b].clone();
    for step in 0..length {
        let next = if step + 1 == length {
            last.clone()
        } else {
            let candidate = loop {
                let c = format!("x{fresh_id}");
                fresh_id += 1;
                if !labels.contains(&c) {
                    break c;
                }
            };
            labels.push(candidate.clone());
            candidate
        };
        edges.push((prev, next.clone()));
        prev = next;
    }
    Graph::new(&labels, &edges).expect("fresh internal vertices keep the graph simple")
}

/// Fold the script's ears over its base. With a flower base the carpel is
/// the link vertex for every ear; with an even-cycle base ears follow the
/// bipartite rule. The first invalid ear aborts with its index.
pub fn run_script(script: &ConstructionScript) -> Result<Graph, ConstructError> {
    let (mut g, link) = match &script.base {
        Base::EvenCycle(len) => (even_cycle(*len)?, None),
        Base::Flower(lengths) => (flower_graph(lengths)?, Some(CARPEL_LABEL)),
    };
    for (index, ear) in script.ears.iter().enumerate() {
        let (next, case) =
            add_ear(&g, &ear.v1, &ear.v2, ear.length, link).map_err(|e| {
                ConstructError::EarRejected {
                    index,
                    source: Box::new(e),
                }
            })?;
        if case != ear.case {
            return Err(ConstructError::CaseMismatch {
                index,
                declared: ear.case,
                actual: case,
            });
        }
        g = next;
    }
    Ok(g)
}

/// Knobs for [`random_unimodular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    /// Number of triangle petals in the flower base (ignored in bipartite
    /// mode).
    pub petals: usize,
    pub max_ears: usize,
    pub max_ear_length: usize,
    /// Start from an even cycle and keep the graph bipartite.
    pub bipartite_mode: bool,
}

impl Default for GeneratorParams {
    fn default() -> GeneratorParams {
        GeneratorParams {
            petals: 2,
            max_ears: 4,
            max_ear_length: 4,
            bipartite_mode: false,
        }
    }
}

/// Seeded generator of certified-unimodular graphs. Draws a base, then up
/// to `max_ears` random ears, validating each; invalid draws are retried up
/// to a fixed budget and then skipped. Returns the graph together with a
/// script that replays it exactly.
pub fn random_unimodular(seed: u64, params: &GeneratorParams) -> (Graph, ConstructionScript) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let petals = params.petals.max(2);
    let (base, link) = if params.bipartite_mode {
        let len = 4 + 2 * rng.gen_range(0..=2usize);
        (Base::EvenCycle(len), None)
    } else {
        (Base::Flower(vec![3; petals]), Some(CARPEL_LABEL))
    };
    let mut script = ConstructionScript {
        base,
        ears: Vec::new(),
    };
    let mut g = run_script(&script).expect("generated base is valid");

    let ear_count = if params.max_ears == 0 {
        0
    } else {
        rng.gen_range(0..=params.max_ears)
    };
    let max_len = params.max_ear_length.max(1);
    for _ in 0..ear_count {
        const RETRIES: usize = 40;
        for _ in 0..RETRIES {
            let v1 = g.label(rng.gen_range(0..g.vertex_count())).to_string();
            let v2 = g.label(rng.gen_range(0..g.vertex_count())).to_string();
            let length = rng.gen_range(1..=max_len);
            if let Ok((next, case)) = add_ear(&g, &v1, &v2, length, link) {
                script.ears.push(Ear {
                    v1,
                    v2,
                    length,
                    case,
                });
                g = next;
                break;
            }
        }
    }
    (g, script)
}
