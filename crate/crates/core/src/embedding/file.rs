//! JSON exchange format for embeddings.
//!
//! ```json
//! {"vertices":[{"id":1,"kind":"original"}, ...],
//!  "edges":[{"id":0,"tail":1,"head":5}, ...],
//!  "rotation":{"1":[0,6,13], ...},
//!  "original_edges":[{"id":0,"u":1,"v":3,"segments":[0,1]}, ...],
//!  "crossings":[{"dummy":5,"edge_a":0,"edge_b":1}]}
//! ```
//!
//! Dart `2·id` is the tail end of edge `id`, `2·id + 1` its head end.
//! Rotations list darts clockwise.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Crossing, EmbeddingError, OnePlaneEmbedding, OriginalEdge, Route, VertexKind};
use crate::graph::SimpleGraph;
use crate::rotation::{Dart, Edge, RotationSystem, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: u32,
    pub kind: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: u32,
    pub tail: u32,
    pub head: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OriginalRecord {
    pub id: u32,
    pub u: u32,
    pub v: u32,
    pub segments: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub dummy: u32,
    pub edge_a: u32,
    pub edge_b: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub rotation: BTreeMap<u32, Vec<u64>>,
    pub original_edges: Vec<OriginalRecord>,
    pub crossings: Vec<CrossingRecord>,
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<Self, EmbeddingError> {
        serde_json::from_str(text).map_err(|e| EmbeddingError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph file serializes")
    }
}

/// Label to dense index. Compact label ranges use an array.
struct LabelMap {
    dense: Vec<u32>,
    sparse: HashMap<u32, u32>,
}

impl LabelMap {
    fn for_labels(labels: impl Iterator<Item = u32> + Clone) -> Self {
        let (count, max) = labels.fold((0usize, 0u32), |(c, m), l| (c + 1, m.max(l)));
        let dense_len = if (max as usize) < 4 * count + 64 { max as usize + 1 } else { 0 };
        LabelMap { dense: vec![u32::MAX; dense_len], sparse: HashMap::new() }
    }

    /// Returns false if the label was already present.
    fn insert(&mut self, label: u32, value: u32) -> bool {
        match self.dense.get_mut(label as usize) {
            Some(slot) => std::mem::replace(slot, value) == u32::MAX,
            None => self.sparse.insert(label, value).is_none(),
        }
    }

    fn get(&self, label: u32) -> Option<u32> {
        match self.dense.get(label as usize) {
            Some(&v) => (v != u32::MAX).then_some(v),
            None => self.sparse.get(&label).copied(),
        }
    }
}

fn dangling(msg: impl Into<String>) -> EmbeddingError {
    EmbeddingError::Dangling(msg.into())
}

pub(super) fn parse(file: &GraphFile) -> Result<OnePlaneEmbedding, EmbeddingError> {
    // Vertex order: originals in file order, then dummies in crossing order.
    let mut file_kind = LabelMap::for_labels(file.vertices.iter().map(|r| r.id));
    for (i, rec) in file.vertices.iter().enumerate() {
        if rec.kind == VertexKind::Face {
            return Err(dangling(format!("vertex {} has kind face", rec.id)));
        }
        if !file_kind.insert(rec.id, i as u32) {
            return Err(dangling(format!("duplicate vertex id {}", rec.id)));
        }
    }
    let mut vertex_labels: Vec<u32> = file
        .vertices
        .iter()
        .filter(|r| r.kind == VertexKind::Original)
        .map(|r| r.id)
        .collect();
    let original_count = vertex_labels.len();
    for c in &file.crossings {
        match file_kind.get(c.dummy).map(|i| file.vertices[i as usize].kind) {
            Some(VertexKind::Dummy) => vertex_labels.push(c.dummy),
            Some(_) => return Err(dangling(format!("crossing vertex {} is not a dummy", c.dummy))),
            None => return Err(dangling(format!("crossing refers to unknown vertex {}", c.dummy))),
        }
    }
    let dummy_total = file.vertices.len() - original_count;
    let mut index = LabelMap::for_labels(vertex_labels.iter().copied());
    for (i, &l) in vertex_labels.iter().enumerate() {
        if !index.insert(l, i as u32) {
            return Err(dangling(format!("dummy vertex {l} listed in two crossings")));
        }
    }
    if vertex_labels.len() != file.vertices.len() {
        let listed = vertex_labels.len() - original_count;
        return Err(dangling(format!(
            "{} dummy vertices but {listed} crossings",
            dummy_total
        )));
    }
    let lookup = |label: u32| {
        index
            .get(label)
            .map(Vertex)
            .ok_or_else(|| dangling(format!("unknown vertex {label}")))
    };

    // Edges of G^×.
    let mut edge_index = LabelMap::for_labels(file.edges.iter().map(|r| r.id));
    let mut ends = Vec::with_capacity(file.edges.len());
    let mut edge_labels = Vec::with_capacity(file.edges.len());
    for rec in &file.edges {
        let t = lookup(rec.tail)?;
        let h = lookup(rec.head)?;
        if t == h {
            return Err(EmbeddingError::Loop { vertex: rec.tail });
        }
        if !edge_index.insert(rec.id, ends.len() as u32) {
            return Err(dangling(format!("duplicate edge id {}", rec.id)));
        }
        ends.push([t, h]);
        edge_labels.push(rec.id);
    }
    let mut degree = vec![0usize; vertex_labels.len()];
    for e in &ends {
        degree[e[0].index()] += 1;
        degree[e[1].index()] += 1;
    }

    // Rotations.
    let mut rotation = vec![Vec::new(); vertex_labels.len()];
    let mut seen = vec![false; ends.len() * 2];
    for (&label, darts) in &file.rotation {
        let v = lookup(label)?;
        let mut list = Vec::with_capacity(darts.len());
        for &raw in darts {
            let edge_label = u32::try_from(raw / 2)
                .map_err(|_| dangling(format!("dart id {raw} out of range")))?;
            let e = edge_index
                .get(edge_label)
                .map(Edge)
                .ok_or_else(|| dangling(format!("dart {raw} refers to unknown edge {edge_label}")))?;
            let d = Dart(e.0 * 2 + (raw & 1) as u32);
            if ends[e.index()][(raw & 1) as usize] != v {
                return Err(dangling(format!("dart {raw} listed at vertex {label} is not incident to it")));
            }
            if std::mem::replace(&mut seen[d.index()], true) {
                return Err(dangling(format!("dart {raw} appears twice in the rotation")));
            }
            list.push(d);
        }
        rotation[v.index()] = list;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        let e = missing / 2;
        return Err(dangling(format!(
            "dart {} of edge {} missing from the rotation",
            edge_labels[e] as u64 * 2 + (missing & 1) as u64,
            edge_labels[e]
        )));
    }

    for v in original_count..vertex_labels.len() {
        if degree[v] != 4 {
            return Err(EmbeddingError::DummyDegree {
                vertex: vertex_labels[v],
                degree: degree[v],
            });
        }
    }

    // Original edges and their routes.
    let mut owner = vec![u32::MAX; ends.len()];
    let mut originals: Vec<OriginalEdge> = Vec::with_capacity(file.original_edges.len());
    let mut original_index = LabelMap::for_labels(file.original_edges.iter().map(|r| r.id));
    for rec in &file.original_edges {
        let u = lookup(rec.u)?;
        let v = lookup(rec.v)?;
        if u.index() >= original_count || v.index() >= original_count {
            return Err(dangling(format!("original edge {} has a dummy endpoint", rec.id)));
        }
        if u == v {
            return Err(EmbeddingError::Loop { vertex: rec.u });
        }
        let idx = originals.len() as u32;
        if !original_index.insert(rec.id, idx) {
            return Err(dangling(format!("duplicate original edge id {}", rec.id)));
        }
        let mut segs = Vec::with_capacity(rec.segments.len());
        for s in &rec.segments {
            let e = edge_index
                .get(*s)
                .map(Edge)
                .ok_or_else(|| dangling(format!("original edge {} uses unknown segment {s}", rec.id)))?;
            if owner[e.index()] != u32::MAX {
                return Err(dangling(format!("segment {s} belongs to two original edges")));
            }
            owner[e.index()] = idx;
            segs.push(e);
        }
        let touches = |e: Edge, x: Vertex| ends[e.index()].contains(&x);
        let other = |e: Edge, x: Vertex| {
            let [a, b] = ends[e.index()];
            if a == x {
                b
            } else {
                a
            }
        };
        let route = match segs.as_slice() {
            [] => return Err(dangling(format!("original edge {} has no segments", rec.id))),
            &[e] => {
                if !(touches(e, u) && touches(e, v)) {
                    return Err(dangling(format!(
                        "segment of original edge {} does not join its endpoints",
                        rec.id
                    )));
                }
                Route::Direct(e)
            }
            &[s0, s1] => {
                let (near, far) = if touches(s0, u) { (s0, s1) } else { (s1, s0) };
                let c = other(near, u);
                if !touches(near, u)
                    || !touches(far, v)
                    || other(far, v) != c
                    || c.index() < original_count
                {
                    return Err(dangling(format!(
                        "segments of original edge {} do not form a path through one dummy",
                        rec.id
                    )));
                }
                Route::Crossed { near, far, dummy: c }
            }
            _ => return Err(EmbeddingError::DoubleCrossed { edge: rec.id }),
        };
        originals.push(OriginalEdge {
            label: rec.id,
            ends: [u, v],
            route,
        });
    }
    if let Some(e) = owner.iter().position(|&o| o == u32::MAX) {
        return Err(dangling(format!("edge {} belongs to no original edge", edge_labels[e])));
    }

    // Crossings.
    let mut crossings = Vec::with_capacity(file.crossings.len());
    let mut crossed_by = vec![false; originals.len()];
    for (i, rec) in file.crossings.iter().enumerate() {
        let c = Vertex((original_count + i) as u32);
        let mut pair = [0u32; 2];
        for (slot, label) in [rec.edge_a, rec.edge_b].into_iter().enumerate() {
            let o = original_index
                .get(label)
                .ok_or_else(|| dangling(format!("crossing refers to unknown original edge {label}")))?;
            if std::mem::replace(&mut crossed_by[o as usize], true) {
                return Err(EmbeddingError::DoubleCrossed { edge: label });
            }
            match originals[o as usize].route {
                Route::Crossed { dummy, .. } if dummy == c => {}
                _ => {
                    return Err(dangling(format!(
                        "original edge {label} is not routed through dummy {}",
                        rec.dummy
                    )))
                }
            }
            pair[slot] = o;
        }
        let mut endpoints: Vec<Vertex> = pair
            .iter()
            .flat_map(|&o| originals[o as usize].ends)
            .collect();
        endpoints.sort();
        endpoints.dedup();
        if endpoints.len() != 4 {
            return Err(EmbeddingError::BadCrossing {
                vertex: rec.dummy,
                reason: "crossing edges must have four distinct endpoints".into(),
            });
        }
        crossings.push(Crossing { dummy: c, edges: pair });
    }
    for (o, orig) in originals.iter().enumerate() {
        if let Route::Crossed { .. } = orig.route {
            if !crossed_by[o] {
                return Err(dangling(format!(
                    "original edge {} is routed through a dummy but listed in no crossing",
                    orig.label
                )));
            }
        }
    }

    let map = RotationSystem::from_parts(ends, rotation);
    for (i, cr) in crossings.iter().enumerate() {
        let rot = map.rotation(cr.dummy);
        let owners: Vec<u32> = rot.iter().map(|d| owner[d.edge().index()]).collect();
        let alternates = owners[0] == owners[2]
            && owners[1] == owners[3]
            && owners[0] != owners[1]
            && cr.edges.contains(&owners[0])
            && cr.edges.contains(&owners[1]);
        if !alternates {
            return Err(EmbeddingError::NonAlternating {
                vertex: file.crossings[i].dummy,
            });
        }
    }
    let faces = map.trace_faces();
    if !map.is_spherical(&faces) {
        return Err(EmbeddingError::NotSphere);
    }

    let graph = SimpleGraph::from_edges(
        original_count,
        originals.iter().map(|o| (o.ends[0].0, o.ends[1].0)),
    );
    Ok(OnePlaneEmbedding {
        map,
        original_count,
        vertex_labels,
        edge_labels,
        originals,
        owner,
        crossings,
        graph,
    })
}

pub(super) fn write(emb: &OnePlaneEmbedding) -> GraphFile {
    let map = &emb.map;
    let vlabel = |v: Vertex| emb.vertex_labels[v.index()];
    let elabel = |e: Edge| emb.edge_labels[e.index()];
    let vertices = (0..map.vertex_count())
        .map(|i| {
            let v = Vertex(i as u32);
            VertexRecord {
                id: vlabel(v),
                kind: emb.kind(v),
            }
        })
        .collect();
    let edges = (0..map.edge_count())
        .map(|i| {
            let e = Edge(i as u32);
            let [t, h] = map.ends(e);
            EdgeRecord {
                id: elabel(e),
                tail: vlabel(t),
                head: vlabel(h),
            }
        })
        .collect();
    let rotation = (0..map.vertex_count())
        .map(|i| {
            let v = Vertex(i as u32);
            let darts = map
                .rotation(v)
                .iter()
                .map(|d| elabel(d.edge()) as u64 * 2 + (d.0 & 1) as u64)
                .collect();
            (vlabel(v), darts)
        })
        .collect();
    let original_edges = emb
        .originals
        .iter()
        .map(|o| OriginalRecord {
            id: o.label,
            u: vlabel(o.ends[0]),
            v: vlabel(o.ends[1]),
            segments: o.segments().into_iter().map(elabel).collect(),
        })
        .collect();
    let crossings = emb
        .crossings
        .iter()
        .map(|c| CrossingRecord {
            dummy: vlabel(c.dummy),
            edge_a: emb.originals[c.edges[0] as usize].label,
            edge_b: emb.originals[c.edges[1] as usize].label,
        })
        .collect();
    GraphFile {
        vertices,
        edges,
        rotation,
        original_edges,
        crossings,
    }
}
