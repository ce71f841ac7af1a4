//! Bend-minimum orthogonal drawings of planar graphs with maximum degree three.

#![allow(clippy::needless_range_loop)]

pub mod dp;
pub mod embedding;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod ortho;
pub mod realize;
pub mod rect;
pub mod spqr;

pub use embedding::{FaceSet, LeggedCycle, PlanarEmbedding};
pub use graph::{BlockCutTree, EdgeId, Graph, GraphError, VertexId, VertexKind};
pub use spqr::{NodeKind, SpqrTree};
