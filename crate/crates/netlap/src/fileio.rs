//! Graph file parsing.
//!
//! A graph file is a TOML document with a `vertices` list and an `edges`
//! array of tables. Field order inside `edges` fixes the edge indices.
//! Unknown fields are rejected.
//!
//! ```toml
//! vertices = ["v1", "v2", "v3"]
//!
//! [[edges]]
//! id = "e1"
//! from = "v1"
//! to = "v2"
//! c = 1.0    # optional, default 1.0
//! mu = 1.0   # optional, default 1.0
//! ```

use crate::graph::{GraphError, MetricGraph, RawEdge, RawGraph};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// The TOML error message carries line/column information.
    #[error("parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    id: String,
    from: String,
    to: String,
    #[serde(default = "one")]
    c: f64,
    #[serde(default = "one")]
    mu: f64,
}

fn one() -> f64 {
    1.0
}

/// Parse a graph document without validating the graph itself.
pub fn parse_raw(text: &str) -> Result<RawGraph, FileError> {
    let file: GraphFile = toml::from_str(text)?;
    Ok(RawGraph {
        vertices: file.vertices,
        edges: file
            .edges
            .into_iter()
            .map(|e| RawEdge {
                id: e.id,
                from: e.from,
                to: e.to,
                c: e.c,
                mu: e.mu,
            })
            .collect(),
    })
}

/// Parse and validate a graph document.
pub fn parse_graph(text: &str) -> Result<MetricGraph, FileError> {
    Ok(MetricGraph::validate(&parse_raw(text)?)?)
}

/// Load and validate a graph file.
pub fn load_graph(path: &std::path::Path) -> Result<MetricGraph, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

/// Render a graph back to the document format (used by `selftest` fixtures).
pub fn graph_to_toml(g: &MetricGraph) -> String {
    let mut out = String::from("vertices = [");
    for (i, _) in (0..g.vertex_count()).enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format!("{:?}", g.vertex_id(i)));
    }
    out.push_str("]\n");
    for e in g.edges() {
        out.push_str(&format!(
            "\n[[edges]]\nid = {:?}\nfrom = {:?}\nto = {:?}\nc = {}\nmu = {}\n",
            e.id,
            g.vertex_id(e.tail),
            g.vertex_id(e.head),
            e.c,
            e.mu
        ));
    }
    out
}
