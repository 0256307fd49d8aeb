//! Darts, rotation systems and facial walks.
//!
//! A [`RotationSystem`] stores, for every vertex, the clockwise cyclic order
//! of the darts (edge ends) incident to it. Edge `e` owns darts `2e` (its
//! tail end) and `2e + 1` (its head end); reversing a dart flips the low bit.
//! A dart is said to *originate* at the vertex it is attached to and to
//! *target* the vertex at the other end of its edge.
//!
//! Faces are traced with `next(d) = succ(reverse(d))`, which keeps every face
//! to the left of its directed boundary walk.

use std::fmt;

/// Index of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

/// Index of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub u32);

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub u32);

impl Vertex {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Edge {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn tail_dart(self) -> Dart {
        Dart(self.0 * 2)
    }

    #[inline]
    pub fn head_dart(self) -> Dart {
        Dart(self.0 * 2 + 1)
    }
}

impl Dart {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn edge(self) -> Edge {
        Edge(self.0 >> 1)
    }

    /// The other end of the same edge.
    #[inline]
    pub fn reversed(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    #[inline]
    pub fn is_tail(self) -> bool {
        self.0 & 1 == 0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Facial walks of a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    /// Face index of every dart.
    pub face_of: Vec<u32>,
    /// Boundary walks back to back; face `f` is `walks[start[f]..start[f + 1]]`.
    walks: Vec<Dart>,
    start: Vec<u32>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.start.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Boundary walk of face `f`, starting at its lowest dart.
    pub fn circuit(&self, f: usize) -> &[Dart] {
        &self.walks[self.start[f] as usize..self.start[f + 1] as usize]
    }

    pub fn circuits(&self) -> impl ExactSizeIterator<Item = &[Dart]> + '_ {
        (0..self.len()).map(|f| self.circuit(f))
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()] as usize
    }
}

const UNPLACED: Dart = Dart(u32::MAX);

/// Combinatorial map of an embedded multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    ends: Vec<[Vertex; 2]>,
    rotation: Vec<Vec<Dart>>,
    slot: Vec<u32>,
    next: Vec<Dart>,
}

impl RotationSystem {
    pub fn new(vertex_count: usize) -> Self {
        RotationSystem {
            ends: Vec::new(),
            rotation: vec![Vec::new(); vertex_count],
            slot: Vec::new(),
            next: Vec::new(),
        }
    }

    /// Builds a map from edge endpoints and per-vertex clockwise dart lists.
    ///
    /// The caller guarantees that every dart appears exactly once, at the
    /// vertex it belongs to.
    pub(crate) fn from_parts(ends: Vec<[Vertex; 2]>, rotation: Vec<Vec<Dart>>) -> Self {
        let mut slot = vec![u32::MAX; ends.len() * 2];
        let mut next = vec![UNPLACED; ends.len() * 2];
        for darts in &rotation {
            for (i, d) in darts.iter().enumerate() {
                slot[d.index()] = i as u32;
                next[d.index()] = darts[(i + 1) % darts.len()];
            }
        }
        debug_assert!(slot.iter().all(|&s| s != u32::MAX));
        RotationSystem { ends, rotation, slot, next }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn dart_count(&self) -> usize {
        self.ends.len() * 2
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.rotation.push(Vec::new());
        Vertex(self.rotation.len() as u32 - 1)
    }

    /// Appends an edge without placing its darts in any rotation.
    pub(crate) fn push_edge(&mut self, tail: Vertex, head: Vertex) -> Edge {
        self.ends.push([tail, head]);
        self.slot.push(u32::MAX);
        self.slot.push(u32::MAX);
        self.next.push(UNPLACED);
        self.next.push(UNPLACED);
        Edge(self.ends.len() as u32 - 1)
    }

    pub fn ends(&self, e: Edge) -> [Vertex; 2] {
        self.ends[e.index()]
    }

    /// Vertex the dart is attached to.
    #[inline]
    pub fn origin(&self, d: Dart) -> Vertex {
        self.ends[d.edge().index()][(d.0 & 1) as usize]
    }

    /// Vertex at the far end of the dart's edge.
    #[inline]
    pub fn target(&self, d: Dart) -> Vertex {
        self.ends[d.edge().index()][((d.0 & 1) ^ 1) as usize]
    }

    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotation[v.index()]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v.index()].len()
    }

    /// Position of the dart inside the rotation of its origin.
    #[inline]
    pub fn slot(&self, d: Dart) -> usize {
        self.slot[d.index()] as usize
    }

    /// Clockwise successor of `d` around its origin.
    #[inline]
    pub fn succ(&self, d: Dart) -> Dart {
        self.next[d.index()]
    }

    /// Clockwise predecessor of `d` around its origin.
    #[inline]
    pub fn pred(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.origin(d).index()];
        let s = self.slot(d);
        rot[if s == 0 { rot.len() - 1 } else { s - 1 }]
    }

    /// Next dart along the facial walk that contains `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.succ(d.reversed())
    }

    /// Places `new` immediately after `anchor` in the rotation of their common origin.
    pub(crate) fn insert_after(&mut self, anchor: Dart, new: Dart) {
        let v = self.origin(anchor);
        debug_assert_eq!(self.origin(new), v);
        let at = self.slot(anchor) + 1;
        self.insert_at(v, at, new);
    }

    /// Places `new` immediately before `anchor` in the rotation of their common origin.
    pub(crate) fn insert_before(&mut self, anchor: Dart, new: Dart) {
        let v = self.origin(anchor);
        debug_assert_eq!(self.origin(new), v);
        let at = self.slot(anchor);
        self.insert_at(v, at, new);
    }

    /// Appends `new` to the rotation of its origin.
    pub(crate) fn push_dart(&mut self, new: Dart) {
        let v = self.origin(new);
        let at = self.rotation[v.index()].len();
        self.insert_at(v, at, new);
    }

    fn insert_at(&mut self, v: Vertex, at: usize, new: Dart) {
        let rot = &mut self.rotation[v.index()];
        rot.insert(at, new);
        for (i, d) in rot.iter().enumerate().skip(at) {
            self.slot[d.index()] = i as u32;
        }
        let len = rot.len();
        let before = rot[(at + len - 1) % len];
        self.next[new.index()] = rot[(at + 1) % len];
        self.next[before.index()] = new;
    }

    /// Points the head end of `e` at `head` without touching any rotation.
    pub(crate) fn retarget_head(&mut self, e: Edge, head: Vertex) {
        self.ends[e.index()][1] = head;
    }

    /// Replaces `old` by `new` at the same rotation slot. Both must share an origin.
    pub(crate) fn replace_dart(&mut self, old: Dart, new: Dart) {
        let v = self.origin(new);
        let at = self.slot[old.index()] as usize;
        let before = self.pred(old);
        self.rotation[v.index()][at] = new;
        self.slot[new.index()] = at as u32;
        self.slot[old.index()] = u32::MAX;
        let after = std::mem::replace(&mut self.next[old.index()], UNPLACED);
        if before == old {
            self.next[new.index()] = new;
        } else {
            self.next[new.index()] = after;
            self.next[before.index()] = new;
        }
    }

    /// Drops every edge flagged in `dead` and renumbers the survivors densely,
    /// preserving their relative order. Returns the old-to-new edge map.
    pub(crate) fn remove_edges(&mut self, dead: &[bool]) -> Vec<Option<Edge>> {
        let mut map = vec![None; self.ends.len()];
        let mut ends = Vec::with_capacity(self.ends.len());
        for (i, e) in self.ends.iter().enumerate() {
            if !dead[i] {
                map[i] = Some(Edge(ends.len() as u32));
                ends.push(*e);
            }
        }
        let rotation = self
            .rotation
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter_map(|d| map[d.edge().index()].map(|e| Dart(e.0 * 2 + (d.0 & 1))))
                    .collect()
            })
            .collect();
        *self = RotationSystem::from_parts(ends, rotation);
        map
    }

    /// Traces every facial walk.
    pub fn trace_faces(&self) -> Faces {
        let n = self.dart_count();
        let mut face_of = vec![u32::MAX; n];
        let mut walks = Vec::with_capacity(n);
        let mut starts = vec![0];
        for start in 0..n as u32 {
            if face_of[start as usize] != u32::MAX {
                continue;
            }
            let id = starts.len() as u32 - 1;
            let mut d = Dart(start);
            loop {
                face_of[d.index()] = id;
                walks.push(d);
                d = self.face_next(d);
                if d.0 == start {
                    break;
                }
            }
            starts.push(walks.len() as u32);
        }
        Faces { face_of, walks, start: starts }
    }

    /// Connected component label of every vertex, numbered by smallest member.
    pub fn components(&self) -> (Vec<u32>, usize) {
        let n = self.vertex_count();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn root(parent: &mut [u32], mut v: u32) -> u32 {
            while parent[v as usize] != v {
                let up = parent[parent[v as usize] as usize];
                parent[v as usize] = up;
                v = up;
            }
            v
        }
        for &[a, b] in &self.ends {
            let (ra, rb) = (root(&mut parent, a.0), root(&mut parent, b.0));
            if ra != rb {
                parent[ra.max(rb) as usize] = ra.min(rb);
            }
        }
        let mut comp = vec![u32::MAX; n];
        let mut count = 0;
        for v in 0..n {
            let r = root(&mut parent, v as u32) as usize;
            if comp[r] == u32::MAX {
                comp[r] = count;
                count += 1;
            }
            comp[v] = comp[r];
        }
        (comp, count as usize)
    }

    /// Number of connected components of a map whose components are all
    /// spherical, read off Euler's formula.
    pub fn spherical_component_count(&self, faces: &Faces) -> usize {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        (self.vertex_count() + faces.len() + isolated - self.edge_count()) / 2
    }

    /// Whether every connected component is embedded on a sphere.
    ///
    /// Checks `V - E + F = 2` per component, counting one face for an
    /// isolated vertex.
    pub fn is_spherical(&self, faces: &Faces) -> bool {
        let (comp, count) = self.components();
        let mut chi = vec![0i64; count];
        for (v, &c) in comp.iter().enumerate() {
            chi[c as usize] += 1;
            if self.rotation[v].is_empty() {
                chi[c as usize] += 1;
            }
        }
        for e in &self.ends {
            chi[comp[e[0].index()] as usize] -= 1;
        }
        for walk in faces.circuits() {
            chi[comp[self.origin(walk[0]).index()] as usize] += 1;
        }
        chi.iter().all(|&x| x == 2)
    }

    /// Whether `b` is met strictly before `c` when walking clockwise from `a`
    /// around their common origin. All three darts must be distinct.
    pub fn in_cyclic_order(&self, a: Dart, b: Dart, c: Dart) -> bool {
        let len = self.degree(self.origin(a));
        let pa = self.slot(a);
        let off = |d: Dart| (self.slot(d) + len - pa) % len;
        let (ob, oc) = (off(b), off(c));
        ob != 0 && oc != 0 && ob != oc && ob < oc
    }
}
