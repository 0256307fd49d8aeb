//! 1-plane embeddings stored as the rotation system of their planarisation.
//!
//! An [`OnePlaneEmbedding`] keeps the plane graph `G^×` in which every
//! crossing point has been replaced by a degree-4 dummy vertex, together with
//! the bookkeeping that maps each edge of the original graph `G` onto its one
//! or two segments in `G^×`.
//!
//! Internally original vertices occupy indices `0..original_count()` and the
//! dummy of crossing `i` is vertex `original_count() + i`. File ids are kept
//! as labels and only matter for I/O.

mod file;
mod kites;
mod mutate;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::rotation::{Dart, Edge, Faces, RotationSystem, Vertex};

pub use file::{CrossingRecord, EdgeRecord, GraphFile, OriginalRecord, VertexRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Original,
    Dummy,
    /// Only used by the radial planarisation.
    Face,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("malformed embedding file: {0}")]
    Json(String),
    #[error("dummy vertex {vertex} has degree {degree}, expected 4")]
    DummyDegree { vertex: u32, degree: usize },
    #[error("rotation at dummy vertex {vertex} does not alternate between its two crossing edges")]
    NonAlternating { vertex: u32 },
    #[error("original edge {edge} is crossed more than once")]
    DoubleCrossed { edge: u32 },
    #[error("rotation system does not describe a sphere (V - E + F != 2 on some component)")]
    NotSphere,
    #[error("inconsistent ids: {0}")]
    Dangling(String),
    #[error("self-loop at vertex {vertex}")]
    Loop { vertex: u32 },
    #[error("crossing at dummy vertex {vertex}: {reason}")]
    BadCrossing { vertex: u32, reason: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error(
        "embedding is not locally maximal: {missing} K4 edge(s) missing among crossing endpoints"
    )]
    NotLocallyMaximal { missing: usize },
}

/// How an original edge is drawn in the planarisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Direct(Edge),
    /// `near` is incident to the first endpoint, `far` to the second.
    Crossed { near: Edge, far: Edge, dummy: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginalEdge {
    pub label: u32,
    pub ends: [Vertex; 2],
    pub route: Route,
}

impl OriginalEdge {
    pub fn is_crossed(&self) -> bool {
        matches!(self.route, Route::Crossed { .. })
    }

    pub fn segments(&self) -> Vec<Edge> {
        match self.route {
            Route::Direct(e) => vec![e],
            Route::Crossed { near, far, .. } => vec![near, far],
        }
    }
}

/// A crossing between two original edges (indices into `originals()`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub dummy: Vertex,
    pub edges: [u32; 2],
}

/// Angle `⟨before, at, after⟩`: two consecutive darts around `at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Angle {
    pub before: Vertex,
    pub at: Vertex,
    pub after: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<Dart>,
    pub angles: Vec<Angle>,
}

/// A K4 edge required by a crossing but absent from the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MissingK4Edge {
    pub crossing: usize,
    pub pair: (Vertex, Vertex),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalMaximality {
    pub missing: Vec<MissingK4Edge>,
}

impl LocalMaximality {
    pub fn ok(&self) -> bool {
        self.missing.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePlaneEmbedding {
    map: RotationSystem,
    original_count: usize,
    vertex_labels: Vec<u32>,
    edge_labels: Vec<u32>,
    originals: Vec<OriginalEdge>,
    owner: Vec<u32>,
    crossings: Vec<Crossing>,
    graph: SimpleGraph,
}

impl OnePlaneEmbedding {
    /// Parses and validates an embedding file.
    pub fn from_file(file: &GraphFile) -> Result<Self, EmbeddingError> {
        file::parse(file)
    }

    pub fn from_json(text: &str) -> Result<Self, EmbeddingError> {
        Self::from_file(&GraphFile::from_json(text)?)
    }

    pub fn to_file(&self) -> GraphFile {
        file::write(self)
    }

    /// The planarisation `G^×`.
    pub fn map(&self) -> &RotationSystem {
        &self.map
    }

    /// The underlying simple graph `G` on the original vertices.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn original_count(&self) -> usize {
        self.original_count
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn kind(&self, v: Vertex) -> VertexKind {
        if v.index() < self.original_count {
            VertexKind::Original
        } else {
            VertexKind::Dummy
        }
    }

    pub fn is_original(&self, v: Vertex) -> bool {
        v.index() < self.original_count
    }

    pub fn vertex_label(&self, v: Vertex) -> u32 {
        self.vertex_labels[v.index()]
    }

    pub fn edge_label(&self, e: Edge) -> u32 {
        self.edge_labels[e.index()]
    }

    pub fn vertex_by_label(&self, label: u32) -> Option<Vertex> {
        self.vertex_labels
            .iter()
            .position(|&l| l == label)
            .map(|i| Vertex(i as u32))
    }

    /// Label lookup table, for callers translating many ids.
    pub fn label_index(&self) -> HashMap<u32, Vertex> {
        self.vertex_labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, Vertex(i as u32)))
            .collect()
    }

    pub fn originals(&self) -> &[OriginalEdge] {
        &self.originals
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Index of the original edge a planarisation edge belongs to.
    pub fn owner(&self, e: Edge) -> usize {
        self.owner[e.index()] as usize
    }

    /// For a dart at an original vertex, the other endpoint of its original edge.
    pub fn far_end(&self, d: Dart) -> Vertex {
        let o = &self.originals[self.owner(d.edge())];
        let v = self.map.origin(d);
        if o.ends[0] == v {
            o.ends[1]
        } else {
            o.ends[0]
        }
    }

    /// Crossing index of a dummy vertex.
    pub fn crossing_at(&self, v: Vertex) -> Option<usize> {
        v.index()
            .checked_sub(self.original_count)
            .filter(|&i| i < self.crossings.len())
    }

    /// The four endpoints `[u, v, w, x]` of a crossing `(u,v) × (w,x)`.
    pub fn crossing_endpoints(&self, i: usize) -> [Vertex; 4] {
        let [a, b] = self.crossings[i].edges;
        let ea = self.originals[a as usize].ends;
        let eb = self.originals[b as usize].ends;
        [ea[0], ea[1], eb[0], eb[1]]
    }

    /// Facial walks of `G^×` as dart permutation cycles.
    pub fn faces(&self) -> Faces {
        self.map.trace_faces()
    }

    /// Faces of `G^×` with their boundaries and angles.
    pub fn trace_faces(&self) -> Vec<Face> {
        self.faces()
            .circuits()
            .enumerate()
            .map(|(id, boundary)| {
                let boundary = boundary.to_vec();
                let angles = boundary.iter().map(|&d| self.corner_angle(d)).collect();
                Face { id, boundary, angles }
            })
            .collect()
    }

    /// Angle formed at the origin of `d` by its predecessor and `d`.
    pub fn corner_angle(&self, d: Dart) -> Angle {
        Angle {
            before: self.map.target(self.map.pred(d)),
            at: self.map.origin(d),
            after: self.map.target(d),
        }
    }

    /// One angle per consecutive dart pair in the rotation at `v`.
    pub fn angles_at(&self, v: Vertex) -> Result<Vec<Angle>, EmbeddingError> {
        if v.index() >= self.vertex_count() {
            return Err(EmbeddingError::UnknownVertex(v.0));
        }
        Ok(self
            .map
            .rotation(v)
            .iter()
            .map(|&d| self.corner_angle(d))
            .collect())
    }

    /// Checks that the endpoints of every crossing induce a K4 in `G`.
    pub fn is_locally_maximal(&self) -> LocalMaximality {
        let mut missing = Vec::new();
        for i in 0..self.crossings.len() {
            let [u, v, w, x] = self.crossing_endpoints(i);
            for (p, q) in [(u, x), (x, v), (v, w), (w, u)] {
                if !self.graph.has_edge(p.0, q.0) {
                    missing.push(MissingK4Edge {
                        crossing: i,
                        pair: (p, q),
                    });
                }
            }
        }
        LocalMaximality { missing }
    }

    /// Whether the underlying graph of the whole embedding is connected.
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Original vertex labels for a list of original vertices.
    pub fn labels_of(&self, vs: &[Vertex]) -> Vec<u32> {
        vs.iter().map(|&v| self.vertex_label(v)).collect()
    }
}

#[cfg(test)]
mod tests;
