//! Constrained cycles in the radial planarisation and their relation to
//! separating sets.
//!
//! A cycle `X` of `Λ` is *constrained* when
//!
//! * Ψ1: deleting its vertices leaves at least two components that contain
//!   original vertices,
//! * Ψ2: all its edges are radial,
//! * Ψ3: it visits no dummy vertex.
//!
//! The original vertices of such a cycle separate `G`; conversely every
//! minimal separating set `S` of a kite-complete locally maximal graph
//! yields a constrained cycle through vertices of `S` and faces only
//! ([`construct_cycle_from_set`]).

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{OnePlaneEmbedding, VertexKind};
use crate::radial::RadialPlanarisation;
use crate::rotation::{Dart, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("not a cycle of the radial planarisation: {0}")]
    NotACycle(String),
    #[error("cycle violates its constraints: {0:?}")]
    ConstraintViolated(Constraints),
    #[error("vertex set does not separate the graph")]
    NotSeparating,
    #[error("vertex set is not a minimal separating set: {0}")]
    NotMinimal(String),
    #[error("marked face {face} has {edges} radial edge(s) to the set, expected at least 2")]
    MarkedFaceDegree { face: usize, edges: usize },
    #[error("no marked face found between the edges to {t1} and {t2} at vertex {vertex}")]
    WitnessNotFound { vertex: u32, t1: u32, t2: u32 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("cycle construction failed: {0}")]
    ConstructionFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Constraints {
    pub psi1: bool,
    pub psi2: bool,
    pub psi3: bool,
}

impl Constraints {
    pub fn all(&self) -> bool {
        self.psi1 && self.psi2 && self.psi3
    }
}

/// A closed walk of radial darts that is a simple cycle (or a pair of
/// parallel edges), visits no dummy, and is stored in canonical rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstrainedCycle {
    vertices: Vec<Vertex>,
    darts: Vec<Dart>,
}

#[derive(Serialize)]
struct CycleJson {
    darts: Vec<u32>,
    vertices: Vec<u32>,
}

impl ConstrainedCycle {
    /// Validates `darts` as a Ψ2/Ψ3 cycle and brings it into canonical form:
    /// starting at a face vertex, in the direction and rotation giving the
    /// lexicographically smallest vertex sequence (ties broken by darts).
    pub fn new(rp: &RadialPlanarisation, darts: &[Dart]) -> Result<Self, CycleError> {
        validate_cycle(rp, darts)?;
        let c = shape(rp, darts);
        if !c.psi2 || !c.psi3 {
            return Err(CycleError::ConstraintViolated(Constraints { psi1: false, ..c }));
        }
        Ok(Self::canonical(rp, darts))
    }

    fn canonical(rp: &RadialPlanarisation, darts: &[Dart]) -> Self {
        let m = rp.map();
        let rev: Vec<Dart> = darts.iter().rev().map(|d| d.reversed()).collect();
        let mut best: Option<ConstrainedCycle> = None;
        for seq in [darts, &rev[..]] {
            for start in 0..seq.len() {
                if !rp.is_face(m.origin(seq[start])) {
                    continue;
                }
                let rotated: Vec<Dart> = seq[start..].iter().chain(&seq[..start]).copied().collect();
                let cand = ConstrainedCycle {
                    vertices: rotated.iter().map(|&d| m.origin(d)).collect(),
                    darts: rotated,
                };
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.expect("cycle has a face vertex")
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Alternating face / original vertices, starting with a face vertex.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// `V_G(X)`: the original vertices on the cycle, sorted.
    pub fn originals(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.vertices.iter().skip(1).step_by(2).copied().collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CycleJson {
            darts: self.darts.iter().map(|d| d.0).collect(),
            vertices: self.vertices.iter().map(|v| v.0).collect(),
        })
        .expect("cycle serializes")
    }
}

/// A set of original vertices, sorted by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeparatingSet {
    vertices: Vec<Vertex>,
}

impl SeparatingSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort();
        vertices.dedup();
        SeparatingSet { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn ids(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.0).collect()
    }
}

/// Components of `G − S`, numbered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlapPartition {
    flap: Vec<Option<u32>>,
    count: usize,
}

impl FlapPartition {
    /// Flap of an original vertex, `None` for members of `S`.
    pub fn flap_of(&self, v: Vertex) -> Option<u32> {
        self.flap[v.index()]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn separates(&self) -> bool {
        self.count >= 2
    }
}

pub fn flaps(emb: &OnePlaneEmbedding, s: &[Vertex]) -> FlapPartition {
    let mut removed = vec![false; emb.original_count()];
    for v in s {
        removed[v.index()] = true;
    }
    let (flap, count) = emb.graph().components_without(&removed);
    FlapPartition { flap, count }
}

/// Whether `s` separates and every member has a neighbour in every flap,
/// which holds exactly for inclusion-minimal separating sets.
pub fn is_minimal_separator(emb: &OnePlaneEmbedding, s: &[Vertex]) -> bool {
    minimality_defect(emb, s).is_none()
}

fn minimality_defect(emb: &OnePlaneEmbedding, s: &[Vertex]) -> Option<String> {
    let p = flaps(emb, s);
    if !p.separates() {
        return Some("set does not separate".into());
    }
    let mut seen = vec![false; p.count];
    for &v in s {
        seen.iter_mut().for_each(|x| *x = false);
        for &w in emb.graph().neighbors(v.0) {
            if let Some(f) = p.flap_of(Vertex(w)) {
                seen[f as usize] = true;
            }
        }
        if let Some(f) = seen.iter().position(|&x| !x) {
            return Some(format!("vertex {v} has no neighbour in flap {f}"));
        }
    }
    None
}

/// Checks a closed walk of `Λ` darts for Ψ1, Ψ2 and Ψ3.
///
/// Ψ1 is evaluated literally: the cycle's vertices are deleted from `Λ` and
/// the remaining components holding original vertices are counted.
pub fn check_constraints(rp: &RadialPlanarisation, darts: &[Dart]) -> Result<Constraints, CycleError> {
    validate_cycle(rp, darts)?;
    let mut c = shape(rp, darts);
    c.psi1 = psi1_by_deletion(rp, darts);
    Ok(c)
}

fn shape(rp: &RadialPlanarisation, darts: &[Dart]) -> Constraints {
    let m = rp.map();
    Constraints {
        psi1: false,
        psi2: darts.iter().all(|d| rp.is_radial(d.edge())),
        psi3: darts.iter().all(|&d| rp.kind(m.origin(d)) != VertexKind::Dummy),
    }
}

fn validate_cycle(rp: &RadialPlanarisation, darts: &[Dart]) -> Result<(), CycleError> {
    let m = rp.map();
    if darts.len() < 2 {
        return Err(CycleError::NotACycle(format!("length {}", darts.len())));
    }
    if let Some(d) = darts.iter().find(|d| d.index() >= m.dart_count()) {
        return Err(CycleError::NotACycle(format!("unknown dart {d}")));
    }
    for (i, &d) in darts.iter().enumerate() {
        let next = darts[(i + 1) % darts.len()];
        if m.target(d) != m.origin(next) {
            return Err(CycleError::NotACycle(format!("dart {d} does not lead to dart {next}")));
        }
    }
    let mut vs: Vec<Vertex> = darts.iter().map(|&d| m.origin(d)).collect();
    vs.sort();
    vs.dedup();
    if vs.len() != darts.len() && !(darts.len() == 2 && vs.len() == 2) {
        return Err(CycleError::NotACycle("repeated vertex".into()));
    }
    if darts.len() == 2 && darts[0].edge() == darts[1].edge() {
        return Err(CycleError::NotACycle("walks an edge back and forth".into()));
    }
    Ok(())
}

fn psi1_by_deletion(rp: &RadialPlanarisation, darts: &[Dart]) -> bool {
    let m = rp.map();
    let n = m.vertex_count();
    let mut seen = vec![false; n];
    for &d in darts {
        seen[m.origin(d).index()] = true;
    }
    let mut with_original = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(Vertex(s as u32));
        let mut has_original = false;
        while let Some(v) = stack.pop() {
            has_original |= rp.is_original(v);
            for &d in m.rotation(v) {
                let w = m.target(d);
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        if has_original {
            with_original += 1;
        }
    }
    with_original >= 2
}

/// `V_G(X)` of a cycle satisfying all three constraints.
pub fn extract_separating_set(
    rp: &RadialPlanarisation,
    x: &ConstrainedCycle,
) -> Result<SeparatingSet, CycleError> {
    let c = check_constraints(rp, x.darts())?;
    if !c.all() {
        return Err(CycleError::ConstraintViolated(c));
    }
    Ok(SeparatingSet::new(x.originals()))
}

/// Drops members of a separating set, lowest index first, while the rest
/// still separates. The result is inclusion-minimal.
pub fn minimalize(emb: &OnePlaneEmbedding, s: &SeparatingSet) -> Result<SeparatingSet, CycleError> {
    if !flaps(emb, s.vertices()).separates() {
        return Err(CycleError::NotSeparating);
    }
    let mut cur = s.vertices().to_vec();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            let mut without = cur.clone();
            without.remove(i);
            if flaps(emb, &without).separates() {
                cur = without;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(is_minimal_separator(emb, &cur));
    Ok(SeparatingSet::new(cur))
}

/// Face vertices marked for a minimal separating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedFaces {
    marked: Vec<bool>,
}

impl MarkedFaces {
    pub fn contains(&self, face: usize) -> bool {
        self.marked[face]
    }

    /// Marked face indices in increasing order.
    pub fn faces(&self) -> Vec<usize> {
        (0..self.marked.len()).filter(|&f| self.marked[f]).collect()
    }
}

/// Per-set data shared by marking, witness search and cycle construction.
struct SetContext<'a> {
    rp: &'a RadialPlanarisation,
    in_s: Vec<bool>,
    flaps: FlapPartition,
    marked: MarkedFaces,
}

impl<'a> SetContext<'a> {
    fn new(rp: &'a RadialPlanarisation, s: &SeparatingSet) -> Result<Self, CycleError> {
        let emb = rp.base();
        if let Some(v) = s.vertices().iter().find(|v| !emb.is_original(**v)) {
            return Err(CycleError::NotMinimal(format!("{v} is not an original vertex")));
        }
        if let Some(why) = minimality_defect(emb, s.vertices()) {
            return Err(CycleError::NotMinimal(why));
        }
        let mut in_s = vec![false; emb.original_count()];
        for v in s.vertices() {
            in_s[v.index()] = true;
        }
        let flaps = flaps(emb, s.vertices());
        let mut ctx = SetContext {
            rp,
            in_s,
            flaps,
            marked: MarkedFaces { marked: vec![false; rp.face_count()] },
        };
        ctx.mark(s)?;
        Ok(ctx)
    }

    fn in_s(&self, v: Vertex) -> bool {
        self.rp.is_original(v) && self.in_s[v.index()]
    }

    fn flap(&self, v: Vertex) -> Option<u32> {
        if self.rp.is_original(v) {
            self.flaps.flap_of(v)
        } else {
            None
        }
    }

    fn mark(&mut self, s: &SeparatingSet) -> Result<(), CycleError> {
        let gx = self.rp.base().map();
        for &v in s.vertices() {
            for &d in gx.rotation(v) {
                let u = gx.target(gx.pred(d));
                let w = gx.target(d);
                let transition = matches!((self.flap(u), self.flap(w)), (Some(a), Some(b)) if a != b);
                if transition || self.in_s(u) || self.in_s(w) {
                    self.marked.marked[self.rp.gx_faces().face_of(d)] = true;
                }
            }
        }
        // Every marked face reaches the set at least twice.
        for f in self.marked.faces() {
            let fv = self.rp.face_vertex(f);
            let m = self.rp.map();
            let edges = m.rotation(fv).iter().filter(|&&d| self.in_s(m.target(d))).count();
            if edges < 2 {
                return Err(CycleError::MarkedFaceDegree { face: f, edges });
            }
        }
        Ok(())
    }

    /// First `G^×` dart at `v` (in rotation order) on an original edge to `t`.
    fn dart_towards(&self, v: Vertex, t: Vertex) -> Option<Dart> {
        let emb = self.rp.base();
        emb.map().rotation(v).iter().copied().find(|&d| emb.far_end(d) == t)
    }

    /// The radial dart at `v` into a marked face lying strictly between the
    /// edges towards `t1` and `t2`, clockwise from `t1`.
    fn witness(&self, v: Vertex, t1: Vertex, t2: Vertex) -> Result<Dart, CycleError> {
        let emb = self.rp.base();
        let gx = emb.map();
        let not_found = || CycleError::WitnessNotFound { vertex: v.0, t1: t1.0, t2: t2.0 };
        let (phi1, phi2) = match (self.flap(t1), self.flap(t2)) {
            (Some(a), Some(b)) if a != b && self.in_s(v) => (a, b),
            _ => {
                return Err(CycleError::PreconditionFailed(format!(
                    "{t1} and {t2} must lie in different flaps next to set vertex {v}"
                )))
            }
        };
        let (Some(d1), Some(d2)) = (self.dart_towards(v, t1), self.dart_towards(v, t2)) else {
            return Err(CycleError::PreconditionFailed(format!(
                "{t1} and {t2} must both be adjacent to {v}"
            )));
        };
        // Closest pair w1 ∈ φ1, w2 ∈ φ2 on the clockwise arc from d1 to d2.
        let mut w1 = d1;
        let mut d = gx.succ(d1);
        let w2 = loop {
            let far = self.flap(emb.far_end(d));
            if far == Some(phi2) {
                break d;
            }
            if far == Some(phi1) {
                w1 = d;
            }
            if d == d2 {
                return Err(not_found());
            }
            d = gx.succ(d);
        };
        let next = gx.succ(w1);
        let corner = if next == w2 || emb.is_original(gx.target(next)) {
            next
        } else {
            gx.succ(next)
        };
        if !self.marked.contains(self.rp.gx_faces().face_of(corner)) {
            return Err(not_found());
        }
        let r = self.rp.radial_edge(corner).head_dart();
        let m = self.rp.map();
        if !m.in_cyclic_order(d1, r, d2) {
            return Err(not_found());
        }
        Ok(r)
    }

    /// Two neighbours of `v` in distinct flaps: the smallest neighbour of
    /// each of the two lowest-numbered flaps adjacent to `v`.
    fn flap_neighbours(&self, v: Vertex) -> Result<(Vertex, Vertex), CycleError> {
        let mut best: Vec<(u32, Vertex)> = Vec::new();
        for &w in self.rp.base().graph().neighbors(v.0) {
            if let Some(f) = self.flaps.flap_of(Vertex(w)) {
                if !best.iter().any(|&(g, _)| g == f) {
                    best.push((f, Vertex(w)));
                }
            }
        }
        best.sort();
        match best[..] {
            [(_, a), (_, b), ..] => Ok((a, b)),
            _ => Err(CycleError::NotMinimal(format!("{v} sees fewer than two flaps"))),
        }
    }
}

/// Marks face vertices for a minimal separating set: the face at an angle
/// `⟨u, v, w⟩` with `v ∈ S` is marked if `u` and `w` are original and in
/// different flaps, or if one of them is an original vertex of `S`.
pub fn mark_face_vertices(rp: &RadialPlanarisation, s: &SeparatingSet) -> Result<MarkedFaces, CycleError> {
    Ok(SetContext::new(rp, s)?.marked)
}

/// A marked face vertex reached from `v` by a radial edge lying strictly
/// between the edges to `t1` and `t2`, clockwise from `t1`. Returns the
/// radial dart at `v`.
pub fn witness_face(
    rp: &RadialPlanarisation,
    s: &SeparatingSet,
    v: Vertex,
    t1: Vertex,
    t2: Vertex,
) -> Result<Dart, CycleError> {
    SetContext::new(rp, s)?.witness(v, t1, t2)
}

/// Builds a constrained cycle through faces and vertices of a minimal
/// separating set `S`, with `V_G(X) ⊆ S` and `|X| ≤ 2|S|`.
pub fn construct_cycle_from_set(
    rp: &RadialPlanarisation,
    s: &SeparatingSet,
) -> Result<ConstrainedCycle, CycleError> {
    let emb = rp.base();
    if !emb.is_locally_maximal().ok() {
        return Err(CycleError::PreconditionFailed("embedding is not locally maximal".into()));
    }
    if !emb.missing_kites().is_empty() {
        return Err(CycleError::PreconditionFailed("kite faces are missing".into()));
    }
    let ctx = SetContext::new(rp, s).map_err(|e| match e {
        CycleError::NotMinimal(why) => CycleError::PreconditionFailed(why),
        other => other,
    })?;
    let m = rp.map();

    // Maximal alternating path from the smallest vertex of S.
    let mut on_path = vec![false; m.vertex_count()];
    let mut path = vec![s.vertices()[0]];
    let mut steps: Vec<Dart> = Vec::new();
    on_path[path[0].index()] = true;
    loop {
        let vk = *path.last().unwrap();
        let mut best: Option<(usize, Vertex, Dart, Dart)> = None;
        for &r in m.rotation(vk) {
            let f = m.target(r);
            let Some(fi) = rp.face_index(f) else { continue };
            if !ctx.marked.contains(fi) || on_path[f.index()] {
                continue;
            }
            for &r2 in m.rotation(f) {
                let w = m.target(r2);
                if ctx.in_s(w) && !on_path[w.index()] {
                    let cand = (fi, w, r, r2);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
        let Some((_, w, r, r2)) = best else { break };
        let f = m.target(r);
        on_path[f.index()] = true;
        on_path[w.index()] = true;
        path.extend([f, w]);
        steps.extend([r, r2]);
    }

    let vk = *path.last().unwrap();
    let (mut t1, mut t2) = ctx.flap_neighbours(vk)?;
    if let Some(&last) = steps.last() {
        let p = last.reversed();
        let d1 = ctx.dart_towards(vk, t1).unwrap();
        let d2 = ctx.dart_towards(vk, t2).unwrap();
        if !m.in_cyclic_order(d2, p, d1) {
            std::mem::swap(&mut t1, &mut t2);
        }
    }
    let w = ctx.witness(vk, t1, t2)?;
    let f = m.target(w);
    let k = path.len() - 1;

    let darts: Vec<Dart> = if let Some(i) = path.iter().position(|&x| x == f) {
        // The witness face is already on the path.
        steps[i..].iter().copied().chain([w]).collect()
    } else {
        let mut back: Option<(usize, Dart)> = None;
        for &e in m.rotation(f) {
            if e.edge() == w.edge() || !ctx.in_s(m.target(e)) {
                continue;
            }
            let Some(i) = path.iter().position(|&x| x == m.target(e)) else {
                return Err(CycleError::ConstructionFailed(format!(
                    "path is not maximal: face {f} reaches set vertex {} off the path",
                    m.target(e)
                )));
            };
            let better = match back {
                None => true,
                Some((j, _)) => i < k && (j == k || i > j),
            };
            if better {
                back = Some((i, e));
            }
        }
        let Some((i, e)) = back else {
            return Err(CycleError::MarkedFaceDegree { face: rp.face_index(f).unwrap(), edges: 1 });
        };
        steps[i..].iter().copied().chain([w, e]).collect()
    };
    let x = ConstrainedCycle::new(rp, &darts)?;
    if !psi1_by_deletion(rp, x.darts()) {
        return Err(CycleError::ConstructionFailed("closing cycle does not separate".into()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::fixture;
    use crate::radial::build_radial;

    fn path3() -> OnePlaneEmbedding {
        OnePlaneEmbedding::from_json(
            r#"{"vertices":[{"id":0,"kind":"original"},{"id":1,"kind":"original"},{"id":2,"kind":"original"}],
                "edges":[{"id":0,"tail":0,"head":1},{"id":1,"tail":1,"head":2}],
                "rotation":{"0":[0],"1":[1,2],"2":[3]},
                "original_edges":[{"id":0,"u":0,"v":1,"segments":[0]},{"id":1,"u":1,"v":2,"segments":[1]}],
                "crossings":[]}"#,
        )
        .unwrap()
    }

    #[test]
    fn path_flaps() {
        let e = path3();
        let p = flaps(&e, &[Vertex(1)]);
        assert_eq!(p.count(), 2);
        assert_ne!(p.flap_of(Vertex(0)), p.flap_of(Vertex(2)));
        assert_eq!(flaps(&e, &[]).count(), 1);
    }

    #[test]
    fn path_cycle_through_middle() {
        let e = path3();
        let rp = build_radial(&e).unwrap();
        let s = SeparatingSet::new(vec![Vertex(1)]);
        let marked = mark_face_vertices(&rp, &s).unwrap();
        assert_eq!(marked.faces(), vec![0]);
        let x = construct_cycle_from_set(&rp, &s).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.originals(), vec![Vertex(1)]);
        assert_eq!(extract_separating_set(&rp, &x).unwrap(), s);
    }

    #[test]
    fn k4_cross_flaps() {
        let e = fixture("k4-cross").unwrap();
        assert_eq!(flaps(&e, &[Vertex(0), Vertex(1), Vertex(2)]).count(), 1);
        assert_eq!(flaps(&e, &[Vertex(0), Vertex(2)]).count(), 1);
    }

    #[test]
    fn cut_vertex_gives_two_cycle() {
        let e = fixture("two-k4-shared-vertex").unwrap();
        let rp = build_radial(&e).unwrap();
        let s = SeparatingSet::new(vec![Vertex(0)]);
        let x = construct_cycle_from_set(&rp, &s).unwrap();
        assert_eq!(x.len(), 2);
        assert!(check_constraints(&rp, x.darts()).unwrap().all());
    }

    #[test]
    fn constraint_checks_reject_bad_walks() {
        let e = fixture("k4-cross").unwrap();
        let rp = build_radial(&e).unwrap();
        let m = rp.map();
        // A face triangle of Λ uses one G^× edge.
        let d = Dart(0);
        let tri = [d, m.face_next(d), m.face_next(m.face_next(d))];
        let c = check_constraints(&rp, &tri).unwrap();
        assert!(!c.psi2);
        assert!(!c.psi1);
        // Around the dummy: radial darts face → dummy → face → ...
        let x = e.crossings()[0].dummy;
        let r = m.rotation(x)[0];
        let back = m.rotation(m.target(r)).iter().copied().find(|&q| q.edge() != r.edge() && m.target(q) == x);
        if let Some(q) = back {
            assert!(!check_constraints(&rp, &[r, q]).unwrap().psi3);
        }
        assert!(matches!(check_constraints(&rp, &[d]), Err(CycleError::NotACycle(_))));
        assert!(matches!(
            check_constraints(&rp, &[d, d.reversed()]),
            Err(CycleError::NotACycle(_))
        ));
    }

    #[test]
    fn minimalize_drops_redundant_members() {
        let e = fixture("two-k4-shared-vertex").unwrap();
        let s = SeparatingSet::new(vec![Vertex(0), Vertex(1)]);
        assert_eq!(minimalize(&e, &s).unwrap().vertices(), &[Vertex(0)]);
        let already = SeparatingSet::new(vec![Vertex(0)]);
        assert_eq!(minimalize(&e, &already).unwrap(), already);
        assert_eq!(
            minimalize(&e, &SeparatingSet::new(vec![Vertex(1)])).unwrap_err(),
            CycleError::NotSeparating
        );
    }

    #[test]
    fn non_minimal_set_rejected_by_marking() {
        let e = fixture("two-k4-shared-vertex").unwrap();
        let rp = build_radial(&e).unwrap();
        let s = SeparatingSet::new(vec![Vertex(0), Vertex(1)]);
        assert!(matches!(mark_face_vertices(&rp, &s), Err(CycleError::NotMinimal(_))));
        assert!(matches!(
            construct_cycle_from_set(&rp, &s),
            Err(CycleError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn witness_requires_distinct_flaps() {
        let e = fixture("two-k4-shared-vertex").unwrap();
        let rp = build_radial(&e).unwrap();
        let s = SeparatingSet::new(vec![Vertex(0)]);
        assert!(matches!(
            witness_face(&rp, &s, Vertex(0), Vertex(1), Vertex(2)),
            Err(CycleError::PreconditionFailed(_))
        ));
        let r = witness_face(&rp, &s, Vertex(0), Vertex(1), Vertex(4)).unwrap();
        assert_eq!(rp.map().origin(r), Vertex(0));
        let f = rp.face_index(rp.map().target(r)).unwrap();
        assert!(mark_face_vertices(&rp, &s).unwrap().contains(f));
    }
}
