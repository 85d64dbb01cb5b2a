//! JSON file formats for graphs, colorings and layer embeddings.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use layercube_core::coloring::{ColoringError, EdgeColoring};
use layercube_core::cube::{CubeError, Vertex};
use layercube_core::embed::{EmbedError, LayerEmbedding};
use layercube_core::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error("embedding map key `{0}` is not a vertex id")]
    BadKey(String),
    #[error("embedding map has {found} entries, expected ids 0..{expected}")]
    MissingVertex { expected: usize, found: usize },
    #[error("coloring edge #{index} is {found:?}, graph edge is {expected:?}")]
    EdgeMismatch {
        index: usize,
        expected: [usize; 2],
        found: [usize; 2],
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// `{ "vertices": n, "labels": [...], "edges": [[u, v], ...] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            vertices: g.order(),
            labels: g.labels().map(<[String]>::to_vec),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let g = Graph::new(self.vertices, self.edges.iter().map(|&[u, v]| (u, v)))?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.clone())?,
            None => g,
        })
    }
}

/// `{ "edges": [[u, v], ...], "colors": [c, ...] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<u32>,
}

impl ColoringFile {
    pub fn new(g: &Graph, c: &EdgeColoring) -> Self {
        ColoringFile {
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            colors: c.as_slice().to_vec(),
        }
    }

    /// Reads the coloring against `g`; its edge list must match `g`'s.
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring, FormatError> {
        for (index, (&found, &(u, v))) in self.edges.iter().zip(g.edges()).enumerate() {
            let norm = [found[0].min(found[1]), found[0].max(found[1])];
            if norm != [u, v] {
                return Err(FormatError::EdgeMismatch {
                    index,
                    expected: [u, v],
                    found,
                });
            }
        }
        Ok(EdgeColoring::new(g, self.colors.clone())?)
    }

    /// The graph spanned by the listed edges.
    pub fn graph(&self) -> Result<Graph, FormatError> {
        let order = self
            .edges
            .iter()
            .flatten()
            .map(|&v| v + 1)
            .max()
            .unwrap_or(0);
        Ok(Graph::new(order, self.edges.iter().map(|&[u, v]| (u, v)))?)
    }
}

/// `{ "N": dim, "k": layer, "map": { "<vertex id>": "<binary string>" } }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingFile {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: u32,
    pub map: BTreeMap<String, String>,
}

impl EmbeddingFile {
    pub fn new(emb: &LayerEmbedding) -> Self {
        let map = emb
            .images()
            .iter()
            .enumerate()
            .map(|(i, v)| (i.to_string(), v.to_string()))
            .collect();
        EmbeddingFile {
            n: emb.dimension(),
            k: emb.layer(),
            map,
        }
    }

    pub fn to_embedding(&self) -> Result<LayerEmbedding, FormatError> {
        let mut images: Vec<Option<Vertex>> = vec![None; self.map.len()];
        for (key, word) in &self.map {
            let id: usize = key.parse().map_err(|_| FormatError::BadKey(key.clone()))?;
            let slot = images
                .get_mut(id)
                .ok_or_else(|| FormatError::BadKey(key.clone()))?;
            *slot = Some(Vertex::parse(word)?);
        }
        let found = images.iter().filter(|v| v.is_some()).count();
        let images =
            images
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or(FormatError::MissingVertex {
                    expected: self.map.len(),
                    found,
                })?;
        Ok(LayerEmbedding::new(self.n, self.k, images)?)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphFile>(text)?.to_graph()
}

fn read_text(path: &Path) -> Result<String, FormatError> {
    let io = |source| FormatError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

/// Loads a graph file; `-` reads standard input.
pub fn load_graph(path: &Path) -> Result<Graph, FormatError> {
    graph_from_json(&read_text(path)?)
}

pub fn save_graph(path: &Path, g: &Graph) -> Result<(), FormatError> {
    fs::write(path, graph_to_json(g) + "\n").map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
