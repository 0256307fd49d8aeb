//! In-crate construction helpers used by the generators.

use super::{Crossing, OnePlaneEmbedding, OriginalEdge, Route};
use crate::graph::SimpleGraph;
use crate::rotation::{Edge, RotationSystem, Vertex};

impl OnePlaneEmbedding {
    /// Wraps a plane rotation system with no crossings. Labels equal indices.
    pub(crate) fn from_plane_map(map: RotationSystem) -> Self {
        let n = map.vertex_count();
        let m = map.edge_count();
        let originals: Vec<OriginalEdge> = (0..m)
            .map(|i| {
                let e = Edge(i as u32);
                OriginalEdge {
                    label: i as u32,
                    ends: map.ends(e),
                    route: Route::Direct(e),
                }
            })
            .collect();
        let graph = SimpleGraph::from_edges(n, originals.iter().map(|o| (o.ends[0].0, o.ends[1].0)));
        OnePlaneEmbedding {
            map,
            original_count: n,
            vertex_labels: (0..n as u32).collect(),
            edge_labels: (0..m as u32).collect(),
            originals,
            owner: (0..m as u32).collect(),
            crossings: Vec::new(),
            graph,
        }
    }

    /// Builds an embedding from a planarisation whose dummy vertices are
    /// `original_count..`, pairing the segments at each dummy into original
    /// edges. Dummies must have degree 4 with four distinct original
    /// neighbours. Labels equal indices.
    pub(crate) fn from_planarisation(map: RotationSystem, original_count: usize) -> Self {
        let n = map.vertex_count();
        let m = map.edge_count();
        let mut owner = vec![u32::MAX; m];
        let mut originals = Vec::new();
        for i in 0..m {
            let e = Edge(i as u32);
            let [a, b] = map.ends(e);
            if a.index() < original_count && b.index() < original_count {
                owner[i] = originals.len() as u32;
                originals.push(OriginalEdge {
                    label: 0,
                    ends: [a, b],
                    route: Route::Direct(e),
                });
            }
        }
        let mut crossings = Vec::new();
        for c in original_count..n {
            let c = Vertex(c as u32);
            let rot = map.rotation(c).to_vec();
            assert_eq!(rot.len(), 4, "dummy {c} must have degree 4");
            let mut pair = [0u32; 2];
            for k in 0..2 {
                let (near, far) = (rot[k].edge(), rot[k + 2].edge());
                let idx = originals.len() as u32;
                owner[near.index()] = idx;
                owner[far.index()] = idx;
                originals.push(OriginalEdge {
                    label: 0,
                    ends: [map.target(rot[k]), map.target(rot[k + 2])],
                    route: Route::Crossed { near, far, dummy: c },
                });
                pair[k] = idx;
            }
            crossings.push(Crossing { dummy: c, edges: pair });
        }
        for (i, o) in originals.iter_mut().enumerate() {
            o.label = i as u32;
        }
        let graph = SimpleGraph::from_edges(
            original_count,
            originals.iter().map(|o| (o.ends[0].0, o.ends[1].0)),
        );
        OnePlaneEmbedding {
            map,
            original_count,
            vertex_labels: (0..n as u32).collect(),
            edge_labels: (0..m as u32).collect(),
            originals,
            owner,
            crossings,
            graph,
        }
    }

    /// The third vertex of the triangular face left of the dart `d`, if that
    /// face is a triangle.
    pub(crate) fn triangle_apex(&self, d: crate::rotation::Dart) -> Option<Vertex> {
        let m = &self.map;
        let d1 = m.face_next(d);
        let d2 = m.face_next(d1);
        (m.face_next(d2) == d).then(|| m.target(d1))
    }

    /// Adds an edge `(c, d)` crossing the uncrossed original edge `e = (a, b)`,
    /// where `a → b → c` and `b → a → d` bound triangular faces.
    ///
    /// The four triangles become the four kite faces of the new crossing.
    pub(crate) fn cross_edge(&mut self, e: Edge) {
        let o = self.owner(e);
        debug_assert!(!self.originals[o].is_crossed());
        let [a, b] = self.map.ends(e);
        let ab = e.tail_dart();
        let ba = e.head_dart();
        let c = self.triangle_apex(ab).expect("triangle left of a→b");
        let d = self.triangle_apex(ba).expect("triangle left of b→a");
        // Darts at c and d leaving towards a and b.
        let ca = self.map.face_next(self.map.face_next(ab));
        let db = self.map.face_next(self.map.face_next(ba));
        debug_assert_eq!(self.map.origin(ca), c);
        debug_assert_eq!(self.map.origin(db), d);

        let x = self.map.add_vertex();
        // e becomes (a, x); a fresh edge takes over e's end at b.
        let xb = self.map.push_edge(x, b);
        self.map.replace_dart(ba, xb.head_dart());
        self.map.retarget_head(e, x);
        let cx = self.map.push_edge(c, x);
        let xd = self.map.push_edge(x, d);
        // Around x clockwise: a, c, b, d.
        self.map.push_dart(e.head_dart());
        self.map.push_dart(cx.head_dart());
        self.map.push_dart(xb.tail_dart());
        self.map.push_dart(xd.tail_dart());
        // c: between (c,b) and (c,a); d: between (d,a) and (d,b).
        self.map.insert_before(ca, cx.tail_dart());
        self.map.insert_before(db, xd.head_dart());

        let new_orig = self.originals.len() as u32;
        self.owner.push(o as u32); // xb
        self.owner.push(new_orig); // cx
        self.owner.push(new_orig); // xd
        let next_edge = self.edge_labels.len() as u32;
        self.edge_labels.extend([next_edge, next_edge + 1, next_edge + 2]);
        self.vertex_labels.push(x.0);
        self.originals[o].ends = [a, b];
        self.originals[o].route = Route::Crossed {
            near: e,
            far: xb,
            dummy: x,
        };
        self.originals.push(OriginalEdge {
            label: new_orig,
            ends: [c, d],
            route: Route::Crossed {
                near: cx,
                far: xd,
                dummy: x,
            },
        });
        self.crossings.push(Crossing {
            dummy: x,
            edges: [o as u32, new_orig],
        });
        self.graph.add_edge(c.0, d.0);
    }

    /// Replaces every label by the item's index.
    pub(crate) fn relabel_dense(&mut self) {
        self.vertex_labels = (0..self.map.vertex_count() as u32).collect();
        self.edge_labels = (0..self.map.edge_count() as u32).collect();
        for (i, o) in self.originals.iter_mut().enumerate() {
            o.label = i as u32;
        }
    }

    /// Removes uncrossed original edges; labels are reassigned to indices.
    pub(crate) fn remove_direct_edges(&mut self, dead_originals: &[bool]) {
        let mut dead = vec![false; self.map.edge_count()];
        for (o, orig) in self.originals.iter().enumerate() {
            if dead_originals[o] {
                match orig.route {
                    Route::Direct(e) => dead[e.index()] = true,
                    Route::Crossed { .. } => panic!("cannot remove a crossed edge"),
                }
            }
        }
        let map = self.map.remove_edges(&dead);
        let mut omap = vec![u32::MAX; self.originals.len()];
        let mut originals = Vec::new();
        for (o, orig) in self.originals.iter().enumerate() {
            if dead_originals[o] {
                continue;
            }
            omap[o] = originals.len() as u32;
            let fix = |e: Edge| map[e.index()].expect("surviving segment");
            let route = match orig.route {
                Route::Direct(e) => Route::Direct(fix(e)),
                Route::Crossed { near, far, dummy } => Route::Crossed {
                    near: fix(near),
                    far: fix(far),
                    dummy,
                },
            };
            originals.push(OriginalEdge {
                label: originals.len() as u32,
                ends: orig.ends,
                route,
            });
        }
        let mut owner = vec![0u32; self.map.edge_count()];
        for (o, orig) in originals.iter().enumerate() {
            for s in orig.segments() {
                owner[s.index()] = o as u32;
            }
        }
        for c in &mut self.crossings {
            c.edges = [omap[c.edges[0] as usize], omap[c.edges[1] as usize]];
        }
        self.originals = originals;
        self.owner = owner;
        self.edge_labels = (0..self.map.edge_count() as u32).collect();
        self.graph = SimpleGraph::from_edges(
            self.original_count,
            self.originals.iter().map(|o| (o.ends[0].0, o.ends[1].0)),
        );
    }
}
