//! Radial planarisation: `G^×` plus a face vertex in every face joined to
//! each corner of that face.
//!
//! Numbering, for a planarisation with `N` vertices, `E` edges and faces
//! `0..F` (in [`RotationSystem::trace_faces`] order):
//!
//! * vertices `0..N` are the vertices of `G^×`, face `i` is vertex `N + i`;
//! * edges `0..E` are the edges of `G^×` with unchanged ids;
//! * the radial edge for the corner of `G^×` dart `d` (the angle between
//!   `pred(d)` and `d` at the origin of `d`) is edge `E + d`, directed from
//!   the face vertex to the origin of `d`.
//!
//! Around a graph vertex every `G^×` dart is preceded by the radial dart of
//! its corner, so radial edges bisect angles and every face is a triangle.

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{Angle, OnePlaneEmbedding, Route, VertexKind};
use crate::rotation::{Dart, Edge, Faces, RotationSystem, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadialError {
    #[error("planarisation is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("vertex {vertex} is not an endpoint of original edge {edge}")]
    NotEndpoint { vertex: u32, edge: u32 },
    #[error("dart {dart} is not incident to vertex {vertex}")]
    NotIncident { vertex: u32, dart: u32 },
}

/// A radial edge and the corner it bisects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadialEdge {
    pub edge: Edge,
    pub face: usize,
    pub vertex: Vertex,
    /// The `G^×` dart whose corner this edge enters.
    pub corner: Dart,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialPlanarisation {
    base: OnePlaneEmbedding,
    faces: Faces,
    map: RotationSystem,
}

pub fn build_radial(emb: &OnePlaneEmbedding) -> Result<RadialPlanarisation, RadialError> {
    let gx = emb.map();
    let faces = gx.trace_faces();
    let components = gx.spherical_component_count(&faces);
    if components > 1 {
        return Err(RadialError::Disconnected(components));
    }
    let n = gx.vertex_count();
    let e = gx.edge_count() as u32;
    let mut ends = Vec::with_capacity(3 * e as usize);
    for i in 0..e {
        ends.push(gx.ends(Edge(i)));
    }
    for d in 0..2 * e {
        let d = Dart(d);
        ends.push([Vertex((n + faces.face_of(d)) as u32), gx.origin(d)]);
    }
    let radial = |d: Dart| Edge(e + d.0);
    let mut rotation = Vec::with_capacity(n + faces.len());
    for v in 0..n {
        let rot = gx.rotation(Vertex(v as u32));
        let mut out = Vec::with_capacity(2 * rot.len());
        for &d in rot {
            out.push(radial(d).head_dart());
            out.push(d);
        }
        rotation.push(out);
    }
    for walk in faces.circuits() {
        rotation.push(walk.iter().rev().map(|&d| radial(d).tail_dart()).collect());
    }
    Ok(RadialPlanarisation {
        base: emb.clone(),
        faces,
        map: RotationSystem::from_parts(ends, rotation),
    })
}

impl RadialPlanarisation {
    /// The embedding this was built from.
    pub fn base(&self) -> &OnePlaneEmbedding {
        &self.base
    }

    /// Faces of `G^×`.
    pub fn gx_faces(&self) -> &Faces {
        &self.faces
    }

    /// The combined rotation system of `Λ`.
    pub fn map(&self) -> &RotationSystem {
        &self.map
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn gx_vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn gx_edge_count(&self) -> usize {
        self.base.map().edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn kind(&self, v: Vertex) -> VertexKind {
        if v.index() >= self.gx_vertex_count() {
            VertexKind::Face
        } else {
            self.base.kind(v)
        }
    }

    #[inline]
    pub fn is_original(&self, v: Vertex) -> bool {
        v.index() < self.base.original_count()
    }

    #[inline]
    pub fn is_face(&self, v: Vertex) -> bool {
        v.index() >= self.gx_vertex_count()
    }

    pub fn face_vertex(&self, face: usize) -> Vertex {
        Vertex((self.gx_vertex_count() + face) as u32)
    }

    /// Face index of a face vertex.
    pub fn face_index(&self, v: Vertex) -> Option<usize> {
        v.index().checked_sub(self.gx_vertex_count())
    }

    #[inline]
    pub fn is_radial(&self, e: Edge) -> bool {
        e.index() >= self.gx_edge_count()
    }

    /// The radial edge bisecting the corner of `G^×` dart `d`.
    pub fn radial_edge(&self, corner: Dart) -> Edge {
        Edge((self.gx_edge_count() as u32) + corner.0)
    }

    /// Describes a radial edge; `None` for edges of `G^×`.
    pub fn radial(&self, e: Edge) -> Option<RadialEdge> {
        let corner = Dart(e.0.checked_sub(self.gx_edge_count() as u32)?);
        Some(RadialEdge {
            edge: e,
            face: self.faces.face_of(corner),
            vertex: self.base.map().origin(corner),
            corner,
        })
    }

    /// Every radial edge in id order.
    pub fn radial_edges(&self) -> impl Iterator<Item = RadialEdge> + '_ {
        (self.gx_edge_count()..self.edge_count()).map(|e| self.radial(Edge(e as u32)).unwrap())
    }

    /// The angle of `G^×` bisected by a radial edge.
    pub fn angle(&self, e: Edge) -> Option<Angle> {
        self.radial(e).map(|r| self.base.corner_angle(r.corner))
    }

    /// The `Λ` dart at `u` of the edge `(u, v̄)` for original edge
    /// `original`, where `v̄` is `v` if the edge is uncrossed and its dummy
    /// otherwise.
    pub fn segment_dart(&self, u: Vertex, original: usize) -> Result<Dart, RadialError> {
        let o = self.base.originals().get(original).ok_or(RadialError::NotEndpoint {
            vertex: u.0,
            edge: original as u32,
        })?;
        let seg = match (o.route, o.ends) {
            (Route::Direct(e), [a, b]) if a == u || b == u => e,
            (Route::Crossed { near, .. }, [a, _]) if a == u => near,
            (Route::Crossed { far, .. }, [_, b]) if b == u => far,
            _ => {
                return Err(RadialError::NotEndpoint {
                    vertex: u.0,
                    edge: original as u32,
                })
            }
        };
        Ok(if self.map.origin(seg.tail_dart()) == u {
            seg.tail_dart()
        } else {
            seg.head_dart()
        })
    }

    /// Darts strictly between `a` and `b` walking clockwise around `v`. If
    /// `a == b` this is every other dart at `v`.
    pub fn rotation_between(&self, v: Vertex, a: Dart, b: Dart) -> Result<Vec<Dart>, RadialError> {
        for d in [a, b] {
            if d.index() >= self.map.dart_count() || self.map.origin(d) != v {
                return Err(RadialError::NotIncident { vertex: v.0, dart: d.0 });
            }
        }
        let mut out = Vec::new();
        let mut d = self.map.succ(a);
        while d != b {
            out.push(d);
            d = self.map.succ(d);
        }
        if a == b {
            // The loop stops immediately only when `v` has degree one.
            out.retain(|&x| x != a);
        }
        Ok(out)
    }

    /// JSON description of `Λ` with file labels for graph vertices.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct V {
            id: u32,
            kind: VertexKind,
            #[serde(skip_serializing_if = "Option::is_none")]
            label: Option<u32>,
        }
        #[derive(Serialize)]
        struct E {
            id: u32,
            tail: u32,
            head: u32,
            radial: bool,
        }
        #[derive(Serialize)]
        struct Out {
            schema: u32,
            vertices: Vec<V>,
            edges: Vec<E>,
            rotation: Vec<Vec<u32>>,
        }
        let out = Out {
            schema: 1,
            vertices: (0..self.vertex_count() as u32)
                .map(|v| {
                    let kind = self.kind(Vertex(v));
                    V {
                        id: v,
                        kind,
                        label: (kind != VertexKind::Face).then(|| self.base.vertex_label(Vertex(v))),
                    }
                })
                .collect(),
            edges: (0..self.edge_count() as u32)
                .map(|e| {
                    let [t, h] = self.map.ends(Edge(e));
                    E {
                        id: e,
                        tail: t.0,
                        head: h.0,
                        radial: self.is_radial(Edge(e)),
                    }
                })
                .collect(),
            rotation: (0..self.vertex_count() as u32)
                .map(|v| self.map.rotation(Vertex(v)).iter().map(|d| d.0).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("radial json serializes")
    }
}
