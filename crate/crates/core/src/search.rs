//! Shortest constrained cycle search and vertex connectivity.
//!
//! Candidates are cycles of the bipartite incidence graph `H` between faces
//! of `G^×` and original vertices (the radial graph without dummies). For
//! each half-length `k = 1..=7`, `k = 1` tries every pair of parallel radial
//! edges and `k ≥ 2` enumerates simple cycles in canonical form: starting at
//! their smallest face `f0`, all other faces larger than `f0`, and the first
//! original vertex smaller than the last. Parallel radial edges only occur at
//! cut vertices, so for `k ≥ 2` each face/vertex pair is represented by its
//! lowest radial edge. Candidates are produced in lexicographic order and the
//! first one passing Ψ1 is returned.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::cycles::{extract_separating_set, ConstrainedCycle, CycleError, SeparatingSet};
use crate::embedding::{EmbeddingError, OnePlaneEmbedding};
use crate::oracle::connectivity_flow;
use crate::radial::{build_radial, RadialError, RadialPlanarisation};
use crate::rotation::{Dart, Vertex};

/// Upper bound on the connectivity of a simple 1-planar graph.
pub const MAX_KAPPA: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(
        "embedding is not locally maximal ({missing} K4 edge(s) missing among crossing endpoints); \
         without kite edges a minimum separating set need not correspond to a short \
         constrained cycle, so the cycle method does not apply"
    )]
    NotLocallyMaximal { missing: usize },
    #[error("cycle search gave kappa {cycle} but the flow oracle gave {oracle}")]
    InternalMismatch { cycle: usize, oracle: usize },
    #[error("no constrained cycle of length <= {} found in a non-complete graph", 2 * MAX_KAPPA)]
    NoCycle,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Radial(#[from] RadialError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Add missing kite edges before building `Λ`.
    pub complete_kites: bool,
    /// Compare the cycle answer against the flow oracle.
    pub oracle_check: bool,
    /// Skip the cycle method and answer with the flow oracle.
    pub force_oracle: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { complete_kites: true, oracle_check: false, force_oracle: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    CycleSearch,
    /// No constrained cycle exists; the graph is complete and `κ = n − 1`.
    OracleFallback,
    Disconnected,
    /// Forced flow oracle, local maximality not required.
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::CycleSearch => "cycle-search",
            Method::OracleFallback => "oracle-fallback",
            Method::Disconnected => "disconnected",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    pub separating_set: Option<SeparatingSet>,
    /// Cycle in `Λ` of the kite-completed embedding.
    pub cycle: Option<ConstrainedCycle>,
    pub method: Method,
    pub kites_added: usize,
}

/// `H`: faces and original vertices, one representative radial dart per
/// incident pair.
struct Incidence {
    /// Per face: `(vertex, dart face→vertex, multiplicity)` sorted by vertex.
    face_adj: Vec<Vec<(u32, Dart, u32)>>,
    /// Per original vertex: `(face, dart vertex→face)` sorted by face.
    vert_adj: Vec<Vec<(u32, Dart)>>,
}

impl Incidence {
    fn new(rp: &RadialPlanarisation) -> Self {
        let n = rp.base().original_count();
        let mut face_adj: Vec<Vec<(u32, Dart, u32)>> = vec![Vec::new(); rp.face_count()];
        for r in rp.radial_edges() {
            if rp.is_original(r.vertex) {
                face_adj[r.face].push((r.vertex.0, r.edge.tail_dart(), 1));
            }
        }
        let mut vert_adj: Vec<Vec<(u32, Dart)>> = vec![Vec::new(); n];
        for (f, list) in face_adj.iter_mut().enumerate() {
            list.sort();
            list.dedup_by(|b, a| {
                if a.0 == b.0 {
                    a.2 += 1;
                    true
                } else {
                    false
                }
            });
            for &(v, d, _) in list.iter() {
                vert_adj[v as usize].push((f as u32, d.reversed()));
            }
        }
        Incidence { face_adj, vert_adj }
    }
}

/// Ψ1 for simple cycles of `Λ`, exploring both sides of the cycle in
/// lockstep so that the usual small side decides quickly.
///
/// Every face of `Λ` is a triangle, so a side without chords (edges between
/// cycle vertices running through that side) is connected after deleting
/// the cycle.
struct Psi1 {
    mark: Vec<u32>,
    epoch: u32,
    seeds: [Vec<Vertex>; 2],
    stacks: [Vec<Vertex>; 2],
}

#[derive(Default)]
struct Side {
    next_seed: usize,
    with_original: usize,
    found_here: bool,
    done: bool,
    chord: bool,
}

impl Psi1 {
    fn new(vertices: usize) -> Self {
        Psi1 { mark: vec![0; vertices], epoch: 0, seeds: Default::default(), stacks: Default::default() }
    }

    fn separates(&mut self, rp: &RadialPlanarisation, darts: &[Dart]) -> bool {
        let m = rp.map();
        if self.epoch == u32::MAX {
            self.mark.iter_mut().for_each(|x| *x = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
        let ep = self.epoch;
        for &d in darts {
            self.mark[m.origin(d).index()] = ep;
        }
        let mut sides = [Side::default(), Side::default()];
        for s in &mut self.seeds {
            s.clear();
        }
        for s in &mut self.stacks {
            s.clear();
        }
        let len = darts.len();
        for i in 0..len {
            let out = darts[i];
            let inc = darts[(i + len - 1) % len].reversed();
            for (side, from, to) in [(0, inc, out), (1, out, inc)] {
                let mut d = m.succ(from);
                while d != to {
                    let t = m.target(d);
                    if self.mark[t.index()] == ep {
                        sides[side].chord = true;
                    } else {
                        self.seeds[side].push(t);
                    }
                    d = m.succ(d);
                }
            }
        }
        loop {
            if sides[0].with_original + sides[1].with_original >= 2 {
                return true;
            }
            if sides[0].done && sides[1].done {
                return false;
            }
            for s in 0..2 {
                if sides[s].done && sides[s].with_original == 0 && !sides[1 - s].chord {
                    return false;
                }
            }
            for s in 0..2 {
                if !sides[s].done {
                    self.step(rp, s, &mut sides[s]);
                }
            }
        }
    }

    fn step(&mut self, rp: &RadialPlanarisation, s: usize, side: &mut Side) {
        let m = rp.map();
        let ep = self.epoch;
        if self.stacks[s].is_empty() {
            side.found_here = false;
            let seeds = &self.seeds[s];
            while side.next_seed < seeds.len() && self.mark[seeds[side.next_seed].index()] == ep {
                side.next_seed += 1;
            }
            let Some(&start) = seeds.get(side.next_seed) else {
                side.done = true;
                return;
            };
            self.mark[start.index()] = ep;
            self.stacks[s].push(start);
        }
        let v = self.stacks[s].pop().unwrap();
        if !side.found_here && rp.is_original(v) {
            side.found_here = true;
            side.with_original += 1;
        }
        for &d in m.rotation(v) {
            let w = m.target(d);
            if self.mark[w.index()] != ep {
                self.mark[w.index()] = ep;
                self.stacks[s].push(w);
            }
        }
    }
}

struct Searcher<'a> {
    rp: &'a RadialPlanarisation,
    h: Incidence,
    psi: Psi1,
    /// Distance to `f0` in `H` over originals `0..n` and faces `n + f`.
    dist: Vec<u32>,
    used: Vec<bool>,
    path: Vec<Dart>,
}

impl<'a> Searcher<'a> {
    fn new(rp: &'a RadialPlanarisation) -> Self {
        let n = rp.base().original_count();
        let nodes = n + rp.face_count();
        Searcher {
            rp,
            h: Incidence::new(rp),
            psi: Psi1::new(rp.vertex_count()),
            dist: vec![u32::MAX; nodes],
            used: vec![false; nodes],
            path: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.h.vert_adj.len()
    }

    /// Visits every separating canonical cycle with `2k` edges in order.
    fn each_cycle<F>(&mut self, k: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(ConstrainedCycle) -> ControlFlow<()>,
    {
        if k == 1 {
            return self.two_cycles(visit);
        }
        for f0 in 0..self.h.face_adj.len() {
            self.distances(f0, k as u32);
            let n = self.n();
            self.used[n + f0] = true;
            let r = self.grow_face(f0, f0, 2 * k, visit);
            self.used[n + f0] = false;
            r?;
        }
        ControlFlow::Continue(())
    }

    fn two_cycles<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(ConstrainedCycle) -> ControlFlow<()>,
    {
        let rp = self.rp;
        let m = rp.map();
        for f in 0..self.h.face_adj.len() {
            for i in 0..self.h.face_adj[f].len() {
                let (v, _, mult) = self.h.face_adj[f][i];
                if mult < 2 {
                    continue;
                }
                let fv = rp.face_vertex(f);
                let mut edges: Vec<Dart> = m
                    .rotation(fv)
                    .iter()
                    .copied()
                    .filter(|&d| m.target(d) == Vertex(v))
                    .collect();
                edges.sort();
                for a in 0..edges.len() {
                    for b in a + 1..edges.len() {
                        let darts = [edges[a], edges[b].reversed()];
                        if self.psi.separates(rp, &darts) {
                            visit(ConstrainedCycle::new(rp, &darts).expect("parallel radial pair"))?;
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn distances(&mut self, f0: usize, k: u32) {
        let n = self.n();
        self.dist.iter_mut().for_each(|d| *d = u32::MAX);
        self.dist[n + f0] = 0;
        let mut frontier = vec![n + f0];
        let mut depth = 0;
        while !frontier.is_empty() && depth < 2 * k {
            depth += 1;
            let mut next = Vec::new();
            for x in frontier {
                if x >= n {
                    for &(v, _, _) in &self.h.face_adj[x - n] {
                        if self.dist[v as usize] == u32::MAX {
                            self.dist[v as usize] = depth;
                            next.push(v as usize);
                        }
                    }
                } else {
                    for &(f, _) in &self.h.vert_adj[x] {
                        let y = n + f as usize;
                        if f as usize > f0 && self.dist[y] == u32::MAX {
                            self.dist[y] = depth;
                            next.push(y);
                        }
                    }
                }
            }
            frontier = next;
        }
    }

    /// At face `f` with `left` darts still to place.
    fn grow_face<F>(&mut self, f0: usize, f: usize, left: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(ConstrainedCycle) -> ControlFlow<()>,
    {
        for i in 0..self.h.face_adj[f].len() {
            let (v, d, _) = self.h.face_adj[f][i];
            let v = v as usize;
            if self.used[v] || self.dist[v] as usize > left - 1 {
                continue;
            }
            self.used[v] = true;
            self.path.push(d);
            let r = self.grow_vertex(f0, v, left - 1, visit);
            self.path.pop();
            self.used[v] = false;
            r?;
        }
        ControlFlow::Continue(())
    }

    fn grow_vertex<F>(&mut self, f0: usize, v: usize, left: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(ConstrainedCycle) -> ControlFlow<()>,
    {
        let n = self.n();
        if left == 1 {
            // Close back to f0, keeping the direction with the smaller first vertex.
            let first = self.rp.map().target(self.path[0]).index();
            if first >= v {
                return ControlFlow::Continue(());
            }
            let Ok(at) = self.h.vert_adj[v].binary_search_by_key(&(f0 as u32), |&(f, _)| f) else {
                return ControlFlow::Continue(());
            };
            let back = self.h.vert_adj[v][at].1;
            self.path.push(back);
            let hit = self.psi.separates(self.rp, &self.path);
            let r = if hit {
                visit(ConstrainedCycle::new(self.rp, &self.path).expect("enumerated cycle is valid"))
            } else {
                ControlFlow::Continue(())
            };
            self.path.pop();
            return r;
        }
        for i in 0..self.h.vert_adj[v].len() {
            let (g, d) = self.h.vert_adj[v][i];
            let g = g as usize;
            if g <= f0 || self.used[n + g] || self.dist[n + g] as usize > left - 1 {
                continue;
            }
            self.used[n + g] = true;
            self.path.push(d);
            let r = self.grow_face(f0, g, left - 1, visit);
            self.path.pop();
            self.used[n + g] = false;
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// Shortest cycle of `Λ` satisfying Ψ1, Ψ2 and Ψ3 with at most
/// `2 · MAX_KAPPA` edges; ties go to the lexicographically smallest
/// canonical cycle.
pub fn shortest_constrained_cycle(rp: &RadialPlanarisation) -> Option<ConstrainedCycle> {
    all_shortest_cycles(rp, 1).into_iter().next()
}

/// Up to `limit` canonical constrained cycles of the minimum length, in
/// lexicographic order.
pub fn all_shortest_cycles(rp: &RadialPlanarisation, limit: usize) -> Vec<ConstrainedCycle> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut searcher = Searcher::new(rp);
    for k in 1..=MAX_KAPPA {
        let _ = searcher.each_cycle(k, &mut |x| {
            out.push(x);
            if out.len() >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if !out.is_empty() {
            break;
        }
    }
    out
}

/// Vertex connectivity of a 1-plane graph through its shortest constrained
/// cycle, with the flow oracle as fallback for complete graphs.
pub fn vertex_connectivity(
    emb: &OnePlaneEmbedding,
    opts: SearchOptions,
) -> Result<ConnectivityResult, SearchError> {
    let g = emb.graph();
    if emb.original_count() >= 2 && !g.is_connected() {
        return Ok(ConnectivityResult {
            kappa: 0,
            separating_set: Some(SeparatingSet::new(Vec::new())),
            cycle: None,
            method: Method::Disconnected,
            kites_added: 0,
        });
    }
    if opts.force_oracle {
        let flow = connectivity_flow(g);
        return Ok(ConnectivityResult {
            kappa: flow.kappa,
            separating_set: flow.set.map(|s| SeparatingSet::new(s.into_iter().map(Vertex).collect())),
            cycle: None,
            method: Method::Oracle,
            kites_added: 0,
        });
    }
    let report = emb.is_locally_maximal();
    if !report.ok() {
        return Err(SearchError::NotLocallyMaximal { missing: report.missing.len() });
    }
    let work = if opts.complete_kites { emb.complete_kites()? } else { emb.clone() };
    let kites_added = work.originals().len() - emb.originals().len();
    let rp = build_radial(&work)?;
    let result = match shortest_constrained_cycle(&rp) {
        Some(x) => {
            let set = extract_separating_set(&rp, &x)?;
            debug_assert_eq!(set.len() * 2, x.len());
            ConnectivityResult {
                kappa: x.len() / 2,
                separating_set: Some(set),
                cycle: Some(x),
                method: Method::CycleSearch,
                kites_added,
            }
        }
        None if g.is_complete() => ConnectivityResult {
            kappa: emb.original_count().saturating_sub(1),
            separating_set: None,
            cycle: None,
            method: Method::OracleFallback,
            kites_added,
        },
        None => return Err(SearchError::NoCycle),
    };
    if opts.oracle_check {
        let oracle = connectivity_flow(g).kappa;
        if oracle != result.kappa {
            return Err(SearchError::InternalMismatch { cycle: result.kappa, oracle });
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::check_constraints;
    use crate::generator::{fixture, GenConfig, Variant};

    #[test]
    fn cut_vertex_found_at_length_two() {
        let e = fixture("two-k4-shared-vertex").unwrap();
        let rp = build_radial(&e).unwrap();
        let x = shortest_constrained_cycle(&rp).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.originals(), vec![Vertex(0)]);
        let all = all_shortest_cycles(&rp, 10);
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.len() == 2 && c.originals() == vec![Vertex(0)]));
        assert!(all_shortest_cycles(&rp, 0).is_empty());
    }

    #[test]
    fn complete_fixtures_fall_back() {
        for (name, kappa) in [("k4-cross", 3), ("k6-oneplanar", 5)] {
            let e = fixture(name).unwrap();
            let rp = build_radial(&e).unwrap();
            assert!(shortest_constrained_cycle(&rp).is_none(), "{name}");
            let r = vertex_connectivity(&e, SearchOptions { oracle_check: true, ..Default::default() }).unwrap();
            assert_eq!(r.kappa, kappa);
            assert_eq!(r.method, Method::OracleFallback);
            assert!(r.separating_set.is_none());
        }
    }

    #[test]
    fn negative_fixtures_rejected() {
        for name in ["grid-no-kites", "arrow-two-kites"] {
            let e = fixture(name).unwrap();
            assert!(matches!(
                vertex_connectivity(&e, SearchOptions::default()),
                Err(SearchError::NotLocallyMaximal { .. })
            ));
            let forced = vertex_connectivity(&e, SearchOptions { force_oracle: true, ..Default::default() }).unwrap();
            assert_eq!(forced.method, Method::Oracle);
        }
    }

    #[test]
    fn generated_graphs_match_flow() {
        for seed in 0..30 {
            let variant = if seed % 2 == 0 { Variant::Triangulation } else { Variant::Sparse };
            let e = GenConfig { n: 8 + seed as usize, crossing_fraction: 0.3, seed, variant }
                .generate()
                .unwrap();
            let r = vertex_connectivity(&e, SearchOptions { oracle_check: true, ..Default::default() })
                .unwrap_or_else(|err| panic!("seed {seed}: {err}"));
            assert_eq!(r.method, Method::CycleSearch);
        }
    }

    #[test]
    fn fast_psi1_agrees_with_deletion() {
        for seed in 0..6 {
            let e = GenConfig { n: 12, crossing_fraction: 0.5, seed, variant: Variant::Sparse }
                .generate()
                .unwrap();
            let rp = build_radial(&e).unwrap();
            let mut s = Searcher::new(&rp);
            // Enumerate every canonical cycle up to length 8 and compare.
            for k in 2..=4usize {
                for f0 in 0..s.h.face_adj.len() {
                    let mut cycles = Vec::new();
                    collect_all(&mut s, f0, k, &mut cycles);
                    for darts in cycles {
                        let slow = check_constraints(&rp, &darts).unwrap().psi1;
                        assert_eq!(s.psi.separates(&rp, &darts), slow);
                    }
                }
            }
        }
    }

    /// Every canonical simple cycle of length `2k` from `f0`, ignoring Ψ1.
    fn collect_all(s: &mut Searcher, f0: usize, k: usize, out: &mut Vec<Vec<Dart>>) {
        fn go(s: &Searcher, f0: usize, path: &mut Vec<Dart>, used: &mut Vec<bool>, out: &mut Vec<Vec<Dart>>, k: usize) {
            let m = s.rp.map();
            let n = s.n();
            let at = m.target(*path.last().unwrap());
            if path.len() % 2 == 1 {
                let v = at.index();
                for &(g, d) in &s.h.vert_adj[v] {
                    let g = g as usize;
                    if path.len() == 2 * k - 1 {
                        if g == f0 && m.target(path[0]).index() < v {
                            let mut c = path.clone();
                            c.push(d);
                            out.push(c);
                        }
                    } else if g > f0 && !used[n + g] {
                        used[n + g] = true;
                        path.push(d);
                        go(s, f0, path, used, out, k);
                        path.pop();
                        used[n + g] = false;
                    }
                }
            } else {
                let f = s.rp.face_index(at).unwrap();
                for &(v, d, _) in &s.h.face_adj[f] {
                    if !used[v as usize] {
                        used[v as usize] = true;
                        path.push(d);
                        go(s, f0, path, used, out, k);
                        path.pop();
                        used[v as usize] = false;
                    }
                }
            }
        }
        let mut used = vec![false; s.used.len()];
        for &(v, d, _) in &s.h.face_adj[f0].clone() {
            used[v as usize] = true;
            let mut path = vec![d];
            go(s, f0, &mut path, &mut used, out, k);
            used[v as usize] = false;
        }
    }

    #[test]
    fn found_cycles_pass_all_constraints() {
        let e = GenConfig { n: 20, crossing_fraction: 0.2, seed: 3, variant: Variant::Triangulation }
            .generate()
            .unwrap();
        let rp = build_radial(&e).unwrap();
        for x in all_shortest_cycles(&rp, 20) {
            assert!(check_constraints(&rp, x.darts()).unwrap().all());
        }
    }
}
