//! Input and output formats: edge-list and JSON graph documents, the
//! certificate schema, and construction-script serialization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{Base, ConstructionScript, Ear, EarCase};
use crate::decompose::CycleWitness;
use crate::graph::{Graph, GraphError};
use crate::soc::{Certificate, Verdict};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("base kind {0:?} is not one of \"cycle\", \"flower\"")]
    BadBaseKind(String),
    #[error("cycle base takes exactly one length, got {0}")]
    BadCycleLengths(usize),
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// Parse a graph from either supported format, auto-detected: input whose
/// first non-whitespace byte is `{` is JSON, anything else is an edge list
/// of `u v` lines (whitespace-separated labels, `#` comments, blank lines
/// ignored; vertices appear in first-use order).
pub fn parse_graph(input: &str) -> Result<Graph, IoError> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        parse_edgelist(input)
    }
}

pub fn parse_edgelist(input: &str) -> Result<Graph, IoError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(IoError::Parse {
                line: i + 1,
                message: "expected two labels".to_string(),
            });
        }
        for t in &tokens {
            if !vertices.iter().any(|v| v == t) {
                vertices.push(t.to_string());
            }
        }
        edges.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Ok(Graph::new(&vertices, &edges)?)
}

pub fn parse_graph_json(input: &str) -> Result<Graph, IoError> {
    let doc: GraphDoc = serde_json::from_str(input)?;
    Ok(Graph::new(&doc.vertices, &doc.edges)?)
}

/// Serialize in the JSON graph schema; parses back to an identical graph
/// (label and edge order preserved).
pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        vertices: g.labels().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|&[u, v]| (g.label(u).to_string(), g.label(v).to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph document always serializes")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CertificateDoc {
    verdict: Verdict,
    s: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    link_vertex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    soc_block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_cycles: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_binomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    indeterminate_reason: Option<String>,
}

fn cycle_labels(g: &Graph, c: &CycleWitness) -> Vec<String> {
    c.vertices().iter().map(|&v| g.label(v).to_string()).collect()
}

/// Render a certificate as its JSON schema:
/// `{verdict, s, linkVertex?, socBlock?, witnessCycles?, witnessBinomial?,
/// indeterminateReason?}`.
pub fn certificate_to_json(g: &Graph, cert: &Certificate) -> String {
    let doc = CertificateDoc {
        verdict: cert.verdict,
        s: cert.non_bipartite_blocks,
        link_vertex: cert.link_vertex.map(|v| g.label(v).to_string()),
        soc_block: cert.soc_block,
        witness_cycles: cert
            .witness
            .as_ref()
            .map(|w| vec![cycle_labels(g, &w.cycle1), cycle_labels(g, &w.cycle2)]),
        witness_binomial: cert.witness_binomial.as_ref().map(|b| b.render()),
        indeterminate_reason: cert.indeterminate_reason.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("certificate always serializes")
}

#[derive(Serialize, Deserialize)]
struct ScriptDoc {
    base: BaseDoc,
    ears: Vec<EarDoc>,
}

#[derive(Serialize, Deserialize)]
struct BaseDoc {
    kind: String,
    lengths: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EarDoc {
    v1: String,
    v2: String,
    length: usize,
    case: EarCase,
}

/// Serialize a construction script as
/// `{base:{kind, lengths}, ears:[{v1,v2,length,case}]}` with kind `cycle`
/// or `flower` and case `alpha`/`beta`/`gamma`/`bipartite`.
pub fn script_to_json(script: &ConstructionScript) -> String {
    let base = match &script.base {
        Base::EvenCycle(len) => BaseDoc {
            kind: "cycle".to_string(),
            lengths: vec![*len],
        },
        Base::Flower(lengths) => BaseDoc {
            kind: "flower".to_string(),
            lengths: lengths.clone(),
        },
    };
    let doc = ScriptDoc {
        base,
        ears: script
            .ears
            .iter()
            .map(|e| EarDoc {
                v1: e.v1.clone(),
                v2: e.v2.clone(),
                length: e.length,
                case: e.case,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("script always serializes")
}

pub fn parse_script_json(input: &str) -> Result<ConstructionScript, IoError> {
    let doc: ScriptDoc = serde_json::from_str(input)?;
    let base = match doc.base.kind.as_str() {
        "cycle" => {
            if doc.base.lengths.len() != 1 {
                return Err(IoError::BadCycleLengths(doc.base.lengths.len()));
            }
            Base::EvenCycle(doc.base.lengths[0])
        }
        "flower" => Base::Flower(doc.base.lengths),
        other => return Err(IoError::BadBaseKind(other.to_string())),
    };
    Ok(ConstructionScript {
        base,
        ears: doc
            .ears
            .into_iter()
            .map(|e| Ear {
                v1: e.v1,
                v2: e.v2,
                length: e.length,
                case: e.case,
            })
            .collect(),
    })
}
