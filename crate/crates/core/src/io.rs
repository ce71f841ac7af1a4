//! Input graph JSON: `{"n": .., "edges": [[u, v], ..], "rotation": [[edge ids], ..], "external_face": ..}`.

use crate::embedding::{planar_embedding, EmbeddingError, PlanarEmbedding};
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInput {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub external_face: Option<usize>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

impl GraphInput {
    pub fn from_graph(g: &Graph) -> Self {
        GraphInput {
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            rotation: None,
            external_face: None,
        }
    }

    pub fn with_embedding(g: &Graph, emb: &PlanarEmbedding) -> Self {
        let mut s = Self::from_graph(g);
        s.rotation = Some(emb.rotation.clone());
        s.external_face = Some(emb.external);
        s
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }

    /// Validated graph plus an embedding: the given rotation if present,
    /// otherwise one computed by the planarity test.
    pub fn load(&self) -> Result<(Graph, PlanarEmbedding), InputError> {
        let g = self.graph()?;
        let emb = match &self.rotation {
            Some(rot) => PlanarEmbedding::new(&g, rot.clone(), self.external_face.unwrap_or(0))?,
            None => planar_embedding(&g)?,
        };
        Ok((g, emb))
    }
}

pub fn parse_input(text: &str) -> Result<(Graph, PlanarEmbedding), InputError> {
    let input: GraphInput = serde_json::from_str(text)?;
    input.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_rotated_inputs() {
        let (g, emb) = parse_input(r#"{"n":3,"edges":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(emb.rotation.len(), 3);
        let text =
            r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]],"rotation":[[0,3],[0,1],[1,2],[2,3]],"external_face":1}"#;
        let (_, emb) = parse_input(text).unwrap();
        assert_eq!(emb.external, 1);
    }

    #[test]
    fn reports_bad_inputs() {
        assert!(matches!(parse_input(r#"{"n":2,"edges":[[0,1],[1,0]]}"#), Err(InputError::Graph(_))));
        assert!(matches!(parse_input("{"), Err(InputError::Json(_))));
    }
}
