//! Deterministic random locally maximal 1-plane graphs and hand-made fixtures.
//!
//! All randomness comes from a [`ChaCha8Rng`] seeded with
//! `seed_from_u64(seed)` and is consumed in this order:
//!
//! 1. triangulation: one `gen_range(0..faces)` per inserted vertex;
//! 2. sparse variant only: a shuffle of the edge list (spanning tree by
//!    Kruskal over the shuffled order), then one `gen_bool(SPARSE_DROP)` per
//!    non-tree edge in edge order;
//! 3. crossings: one shuffle of the candidate edge list.
//!
//! Generated embeddings carry labels equal to their internal indices.

mod fixtures;
mod sketch;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embedding::{
    EdgeRecord, EmbeddingError, GraphFile, OnePlaneEmbedding, OriginalRecord, Route, VertexKind,
    VertexRecord,
};
use crate::rotation::{Dart, Edge, RotationSystem, Vertex};

pub use fixtures::{fixture, FIXTURE_NAMES};
pub use sketch::Sketch;

/// Probability that the sparse variant drops a non-tree edge.
pub const SPARSE_DROP: f64 = 0.4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("sketch is not a valid drawing: {0}")]
    Geometry(String),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Plane triangulation plus kite crossings.
    Triangulation,
    /// Triangulation thinned to a random connected spanning subgraph before
    /// crossings are added.
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub crossing_fraction: f64,
    pub seed: u64,
    pub variant: Variant,
}

impl GenConfig {
    pub fn generate(&self) -> Result<OnePlaneEmbedding, GeneratorError> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut emb = triangulation_with(self.n, &mut rng)?;
        if self.variant == Variant::Sparse {
            sparsify_with(&mut emb, &mut rng);
        }
        inject_with(&mut emb, self.crossing_fraction, &mut rng);
        Ok(emb)
    }
}

/// Connected simple plane triangulation built by inserting each new vertex
/// into a uniformly chosen face. Has exactly `3n - 6` edges.
pub fn random_plane_triangulation(n: usize, seed: u64) -> Result<OnePlaneEmbedding, GeneratorError> {
    triangulation_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Adds kite crossings to a plane embedding; see [`inject_with`] for the rule.
pub fn inject_kite_crossings(emb: &OnePlaneEmbedding, fraction: f64, seed: u64) -> OnePlaneEmbedding {
    let mut out = emb.clone();
    inject_with(&mut out, fraction, &mut ChaCha8Rng::seed_from_u64(seed));
    out
}

fn triangulation_with(n: usize, rng: &mut impl Rng) -> Result<OnePlaneEmbedding, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::TooSmall(n));
    }
    let mut map = RotationSystem::new(3);
    for (t, h) in [(0, 1), (1, 2), (2, 0)] {
        map.push_edge(Vertex(t), Vertex(h));
    }
    for d in [0, 5, 2, 1, 4, 3] {
        map.push_dart(Dart(d));
    }
    // Each face as its three boundary darts, face on the left.
    let mut faces: Vec<[Dart; 3]> = vec![
        [Dart(0), Dart(2), Dart(4)],
        [Dart(5), Dart(3), Dart(1)],
    ];
    for _ in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [ab, bc, ca] = faces[f];
        let (a, b, c) = (map.origin(ab), map.origin(bc), map.origin(ca));
        let x = map.add_vertex();
        let ax = map.push_edge(a, x);
        let bx = map.push_edge(b, x);
        let cx = map.push_edge(c, x);
        map.insert_before(ab, ax.tail_dart());
        map.insert_before(bc, bx.tail_dart());
        map.insert_before(ca, cx.tail_dart());
        map.push_dart(ax.head_dart());
        map.push_dart(cx.head_dart());
        map.push_dart(bx.head_dart());
        faces[f] = [ab, bx.tail_dart(), ax.head_dart()];
        faces.push([bc, cx.tail_dart(), bx.head_dart()]);
        faces.push([ca, ax.tail_dart(), cx.head_dart()]);
    }
    Ok(OnePlaneEmbedding::from_plane_map(map))
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Drops non-tree edges of a random spanning tree with probability
/// [`SPARSE_DROP`]. Expects a crossing-free embedding.
fn sparsify_with(emb: &mut OnePlaneEmbedding, rng: &mut impl Rng) {
    let m = emb.originals().len();
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut parent: Vec<u32> = (0..emb.original_count() as u32).collect();
    let mut tree = vec![false; m];
    for &o in &order {
        let [u, v] = emb.originals()[o].ends;
        let (ru, rv) = (find(&mut parent, u.0), find(&mut parent, v.0));
        if ru != rv {
            parent[ru as usize] = rv;
            tree[o] = true;
        }
    }
    let dead: Vec<bool> = (0..m).map(|o| !tree[o] && rng.gen_bool(SPARSE_DROP)).collect();
    emb.remove_direct_edges(&dead);
}

/// Whether uncrossed edge `e = (a, b)` can receive a kite crossing: both
/// sides are triangles with distinct original apexes `c`, `d` and `(c, d)`
/// is not yet an edge.
fn crossable(emb: &OnePlaneEmbedding, e: Edge) -> bool {
    if emb.originals()[emb.owner(e)].is_crossed() {
        return false;
    }
    let (Some(c), Some(d)) = (emb.triangle_apex(e.tail_dart()), emb.triangle_apex(e.head_dart())) else {
        return false;
    };
    emb.is_original(c) && emb.is_original(d) && c != d && !emb.graph().has_edge(c.0, d.0)
}

/// Repeatedly picks an uncrossed edge `(a, b)` between triangles `a b c` and
/// `b a d` and adds `(c, d)` crossing it. The four K4 edges already exist, so
/// the result stays locally maximal with all four kite faces present.
/// Stops after `floor(fraction · candidates)` crossings, where `candidates`
/// counts the eligible edges at the start.
fn inject_with(emb: &mut OnePlaneEmbedding, fraction: f64, rng: &mut impl Rng) {
    emb.relabel_dense();
    let mut candidates: Vec<Edge> = emb
        .originals()
        .iter()
        .filter_map(|o| match o.route {
            Route::Direct(e) => Some(e),
            Route::Crossed { .. } => None,
        })
        .filter(|&e| crossable(emb, e))
        .collect();
    let target = (fraction.clamp(0.0, 1.0) * candidates.len() as f64).floor() as usize;
    candidates.shuffle(rng);
    let mut done = 0;
    for e in candidates {
        if done == target {
            break;
        }
        if crossable(emb, e) {
            emb.cross_edge(e);
            done += 1;
        }
    }
}

/// Breaks kite faces while keeping the embedding locally maximal: inside a
/// chosen kite face `{p, q, c}` a new degree-2 vertex adjacent to `p` and
/// `q` is added. Each kite face is picked with probability `fraction`.
pub fn displace_kites(emb: &OnePlaneEmbedding, fraction: f64, seed: u64) -> Result<OnePlaneEmbedding, GeneratorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let map = emb.map();
    let mut file: GraphFile = emb.to_file();
    let mut next_vertex = file.vertices.iter().map(|v| v.id).max().map_or(0, |x| x + 1);
    let mut next_edge = file.edges.iter().map(|e| e.id).max().map_or(0, |x| x + 1);
    let mut next_orig = file.original_edges.iter().map(|o| o.id).max().map_or(0, |x| x + 1);
    let dart_id = |d: Dart| emb.edge_label(d.edge()) as u64 * 2 + (d.0 & 1) as u64;
    let mut chosen = Vec::new();
    for cr in emb.crossings() {
        for &to_q in map.rotation(cr.dummy) {
            let to_p = map.pred(to_q);
            let at_p = to_p.reversed();
            let at_q = to_q.reversed();
            let closing = map.succ(at_q);
            let is_kite = map.target(closing) == map.origin(at_p)
                && emb.is_original(map.origin(closing))
                && map.succ(closing.reversed()) == at_p;
            if is_kite && rng.gen_bool(fraction.clamp(0.0, 1.0)) {
                // Insert after the dart towards q at p, and after the segment at q.
                chosen.push((closing.reversed(), at_q));
            }
        }
    }
    for (after_at_p, after_at_q) in chosen {
        let p = emb.vertex_label(map.origin(after_at_p));
        let q = emb.vertex_label(map.origin(after_at_q));
        let z = next_vertex;
        next_vertex += 1;
        file.vertices.push(VertexRecord { id: z, kind: VertexKind::Original });
        let (pz, qz) = (next_edge, next_edge + 1);
        next_edge += 2;
        file.edges.push(EdgeRecord { id: pz, tail: p, head: z });
        file.edges.push(EdgeRecord { id: qz, tail: q, head: z });
        for (id, u) in [(pz, p), (qz, q)] {
            file.original_edges.push(OriginalRecord { id: next_orig, u, v: z, segments: vec![id] });
            next_orig += 1;
        }
        let insert_after = |rot: &mut Vec<u64>, anchor: u64, new: u64| {
            let at = rot.iter().position(|&x| x == anchor).expect("anchor dart present");
            rot.insert(at + 1, new);
        };
        insert_after(file.rotation.get_mut(&p).unwrap(), dart_id(after_at_p), pz as u64 * 2);
        insert_after(file.rotation.get_mut(&q).unwrap(), dart_id(after_at_q), qz as u64 * 2);
        file.rotation.insert(z, vec![pz as u64 * 2 + 1, qz as u64 * 2 + 1]);
    }
    Ok(OnePlaneEmbedding::from_file(&file)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_for_three_vertices() {
        let t = random_plane_triangulation(3, 1).unwrap();
        assert_eq!(t.original_count(), 3);
        assert_eq!(t.originals().len(), 3);
        assert_eq!(t.faces().len(), 2);
    }

    #[test]
    fn ten_vertex_triangulation_counts() {
        let t = random_plane_triangulation(10, 42).unwrap();
        assert_eq!(t.originals().len(), 24);
        let faces = t.faces();
        assert_eq!(faces.len(), 16);
        assert!(faces.circuits().all(|c| c.len() == 3));
        // Full validation through the file format.
        OnePlaneEmbedding::from_file(&t.to_file()).unwrap();
    }

    #[test]
    fn too_small_rejected() {
        assert_eq!(random_plane_triangulation(2, 0).unwrap_err(), GeneratorError::TooSmall(2));
    }

    #[test]
    fn same_seed_same_output() {
        let a = random_plane_triangulation(30, 9).unwrap().to_file().to_json();
        let b = random_plane_triangulation(30, 9).unwrap().to_file().to_json();
        assert_eq!(a, b);
        let cfg = GenConfig { n: 25, crossing_fraction: 0.5, seed: 3, variant: Variant::Sparse };
        assert_eq!(cfg.generate().unwrap(), cfg.generate().unwrap());
    }

    #[test]
    fn zero_fraction_adds_no_crossings() {
        let t = random_plane_triangulation(20, 5).unwrap();
        let out = inject_kite_crossings(&t, 0.0, 1);
        assert_eq!(out, t);
    }

    #[test]
    fn crossings_keep_counting_identities() {
        for seed in 0..10 {
            let t = random_plane_triangulation(30, seed).unwrap();
            let m = t.originals().len();
            let out = inject_kite_crossings(&t, 0.5, seed);
            let c = out.crossing_count();
            assert!(c > 0);
            assert_eq!(out.vertex_count(), 30 + c);
            assert_eq!(out.originals().len(), m + c);
            assert_eq!(out.map().edge_count(), m + 3 * c);
            assert!(out.is_locally_maximal().ok());
            assert!(out.missing_kites().is_empty());
            let reparsed = OnePlaneEmbedding::from_file(&out.to_file()).unwrap();
            assert_eq!(reparsed, out);
        }
    }

    #[test]
    fn sparse_variant_is_connected_and_valid() {
        for seed in 0..10 {
            let cfg = GenConfig { n: 40, crossing_fraction: 0.2, seed, variant: Variant::Sparse };
            let g = cfg.generate().unwrap();
            assert!(g.is_connected());
            assert!(g.originals().len() < 3 * 40 - 6 + g.crossing_count());
            OnePlaneEmbedding::from_file(&g.to_file()).unwrap();
        }
    }

    #[test]
    fn displaced_kites_are_missing_but_locally_maximal() {
        let g = GenConfig { n: 20, crossing_fraction: 0.5, seed: 11, variant: Variant::Triangulation }
            .generate()
            .unwrap();
        let d = displace_kites(&g, 0.5, 2).unwrap();
        let displaced = d.original_count() - g.original_count();
        assert!(displaced > 0);
        assert!(d.is_locally_maximal().ok());
        assert_eq!(d.missing_kites().len(), displaced);
    }
}
