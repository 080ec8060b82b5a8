//! JSON graph files: vertices with genus marks, edges with exact
//! rational lengths written as "p/q".

use heightcalc_core::pmgraph::PolarizedMetrizedGraph;
use heightcalc_core::ratio::{format_rat, parse_rat};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Serialize, Deserialize)]
struct VertexRecord {
    id: String,
    q: u32,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeRecord {
    u: String,
    v: String,
    length: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("malformed graph file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed fraction {text:?} in edge {edge}: {reason}")]
    Fraction {
        edge: usize,
        text: String,
        reason: String,
    },
    #[error("duplicate vertex id {0:?}")]
    DuplicateId(String),
    #[error("edge {edge} references unknown vertex id {id:?}")]
    UnknownId { edge: usize, id: String },
    #[error("nonpositive length on edge {edge}")]
    NonpositiveLength { edge: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("negative canonical divisor at vertex {id:?} (valence {valence}, q {q})")]
    NegativeCanonicalDivisor { id: String, valence: usize, q: u32 },
}

/// A validated graph together with its vertex names, in file order.
pub struct NamedGraph {
    pub graph: PolarizedMetrizedGraph,
    pub names: Vec<String>,
}

pub fn parse_graph(text: &str) -> Result<NamedGraph, GraphFileError> {
    let record: GraphRecord = serde_json::from_str(text)?;
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut q = Vec::with_capacity(record.vertices.len());
    let mut names = Vec::with_capacity(record.vertices.len());
    for v in &record.vertices {
        if index.insert(v.id.as_str(), q.len()).is_some() {
            return Err(GraphFileError::DuplicateId(v.id.clone()));
        }
        q.push(v.q);
        names.push(v.id.clone());
    }
    let mut edges = Vec::with_capacity(record.edges.len());
    for (i, e) in record.edges.iter().enumerate() {
        let resolve = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| GraphFileError::UnknownId {
                    edge: i,
                    id: id.to_string(),
                })
        };
        let length = parse_rat(&e.length).map_err(|err| GraphFileError::Fraction {
            edge: i,
            text: e.length.clone(),
            reason: err.to_string(),
        })?;
        edges.push((resolve(&e.u)?, resolve(&e.v)?, length));
    }
    let graph = PolarizedMetrizedGraph::new(q, edges).map_err(|err| {
        use heightcalc_core::error::GraphError;
        match err {
            GraphError::Empty => GraphFileError::Empty,
            GraphError::NonpositiveLength { edge } => GraphFileError::NonpositiveLength { edge },
            GraphError::Disconnected => GraphFileError::Disconnected,
            // vertex indices come from the id table, so the remaining
            // constructor errors cannot occur here
            other => unreachable!("constructor rejected a resolved graph: {other:?}"),
        }
    })?;
    for (v, name) in names.iter().enumerate() {
        if graph.canonical_divisor(v) < 0 {
            return Err(GraphFileError::NegativeCanonicalDivisor {
                id: name.clone(),
                valence: graph.valence(v),
                q: graph.genus_mark(v),
            });
        }
    }
    Ok(NamedGraph { graph, names })
}

pub fn format_graph(named: &NamedGraph) -> String {
    let record = GraphRecord {
        vertices: named
            .names
            .iter()
            .enumerate()
            .map(|(v, id)| VertexRecord {
                id: id.clone(),
                q: named.graph.genus_mark(v),
            })
            .collect(),
        edges: named
            .graph
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: named.names[e.u].clone(),
                v: named.names[e.v].clone(),
                length: format_rat(&e.length),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&record).expect("graph records always serialize")
}
