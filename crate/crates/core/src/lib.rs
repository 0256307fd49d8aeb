//! Vertex connectivity of locally maximal 1-plane graphs through short
//! constrained cycles in their radial planarisation.
//!
//! The pipeline is: parse an [`OnePlaneEmbedding`], add missing kite edges
//! with [`OnePlaneEmbedding::complete_kites`], build the
//! [`RadialPlanarisation`], and search it for the shortest cycle meeting the
//! separation constraints. [`oracle`] holds an independent max-flow answer.

pub mod cycles;
pub mod dot;
pub mod embedding;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod radial;
pub mod rotation;
pub mod search;

pub use embedding::{EmbeddingError, GraphFile, OnePlaneEmbedding, VertexKind};
pub use graph::SimpleGraph;
pub use radial::{build_radial, RadialError, RadialPlanarisation};
pub use rotation::{Dart, Edge, Faces, RotationSystem, Vertex};
pub use search::{vertex_connectivity, ConnectivityResult, Method, SearchError, SearchOptions};
