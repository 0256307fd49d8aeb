//! Graphviz output.
//!
//! Node names: `v<label>` for original vertices (`shape=circle`),
//! `c<label>` for dummy vertices (`shape=point`), `f<index>` for face
//! vertices (`shape=square`). Radial edges are `style=dashed`; an overlaid
//! cycle is drawn `color=red penwidth=2`. Nodes and edges appear in id order.

use std::fmt::Write;

use crate::cycles::ConstrainedCycle;
use crate::embedding::{OnePlaneEmbedding, VertexKind};
use crate::radial::RadialPlanarisation;
use crate::rotation::{Edge, Vertex};

fn node(emb: &OnePlaneEmbedding, v: Vertex) -> String {
    match emb.kind(v) {
        VertexKind::Dummy => format!("c{}", emb.vertex_label(v)),
        _ => format!("v{}", emb.vertex_label(v)),
    }
}

fn lambda_node(rp: &RadialPlanarisation, v: Vertex) -> String {
    match rp.face_index(v) {
        Some(f) => format!("f{f}"),
        None => node(rp.base(), v),
    }
}

fn header(out: &mut String, name: &str) {
    writeln!(out, "graph {name} {{").unwrap();
}

fn vertices(out: &mut String, emb: &OnePlaneEmbedding, dummies: bool) {
    let count = if dummies { emb.vertex_count() } else { emb.original_count() };
    for v in (0..count as u32).map(Vertex) {
        let shape = if emb.is_original(v) { "circle" } else { "point" };
        writeln!(out, "  {} [shape={shape}];", node(emb, v)).unwrap();
    }
}

/// The original graph; crossed edges are drawn as one line.
pub fn graph_dot(emb: &OnePlaneEmbedding) -> String {
    let mut out = String::new();
    header(&mut out, "G");
    vertices(&mut out, emb, false);
    for o in emb.originals() {
        writeln!(out, "  {} -- {};", node(emb, o.ends[0]), node(emb, o.ends[1])).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The planarisation `G^×`.
pub fn planarisation_dot(emb: &OnePlaneEmbedding) -> String {
    let mut out = String::new();
    header(&mut out, "Gx");
    vertices(&mut out, emb, true);
    let m = emb.map();
    for e in (0..m.edge_count() as u32).map(Edge) {
        let [a, b] = m.ends(e);
        writeln!(out, "  {} -- {};", node(emb, a), node(emb, b)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The radial planarisation, optionally highlighting a cycle.
pub fn radial_dot(rp: &RadialPlanarisation, overlay: Option<&ConstrainedCycle>) -> String {
    let mut out = String::new();
    header(&mut out, "Lambda");
    let m = rp.map();
    let mut on_cycle_v = vec![false; m.vertex_count()];
    let mut on_cycle_e = vec![false; m.edge_count()];
    if let Some(x) = overlay {
        for &d in x.darts() {
            on_cycle_v[m.origin(d).index()] = true;
            on_cycle_e[d.edge().index()] = true;
        }
    }
    for v in (0..m.vertex_count() as u32).map(Vertex) {
        let shape = match rp.kind(v) {
            VertexKind::Original => "circle",
            VertexKind::Dummy => "point",
            VertexKind::Face => "square",
        };
        let extra = if on_cycle_v[v.index()] { " color=red penwidth=2" } else { "" };
        writeln!(out, "  {} [shape={shape}{extra}];", lambda_node(rp, v)).unwrap();
    }
    for e in (0..m.edge_count() as u32).map(Edge) {
        let [a, b] = m.ends(e);
        let mut attrs = Vec::new();
        if rp.is_radial(e) {
            attrs.push("style=dashed");
        }
        if on_cycle_e[e.index()] {
            attrs.push("color=red penwidth=2");
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(" ")) };
        writeln!(out, "  {} -- {}{attrs};", lambda_node(rp, a), lambda_node(rp, b)).unwrap();
    }
    out.push_str("}\n");
    out
}
