//! Kite faces and kite completion.

use super::{EmbeddingError, OnePlaneEmbedding, OriginalEdge, Route};
use crate::rotation::{Dart, Vertex};

/// A corner of a dummy vertex whose kite face is absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MissingKite {
    pub crossing: usize,
    /// Endpoint whose segment precedes the corner in the dummy's rotation.
    pub first: Vertex,
    /// Endpoint whose segment follows it.
    pub second: Vertex,
}

impl OnePlaneEmbedding {
    /// Whether the corner of dummy dart `to_second` (between its predecessor
    /// and itself) lies in a triangular kite face.
    fn kite_at(&self, to_second: Dart) -> bool {
        let m = &self.map;
        let to_first = m.pred(to_second);
        let first = m.target(to_first);
        let at_first = to_first.reversed();
        let at_second = to_second.reversed();
        let closing = m.succ(at_second);
        m.target(closing) == first
            && self.is_original(m.origin(closing))
            && m.succ(closing.reversed()) == at_first
    }

    /// Corners of crossings that are not bounded by a kite face.
    pub fn missing_kites(&self) -> Vec<MissingKite> {
        let mut out = Vec::new();
        for (i, cr) in self.crossings.iter().enumerate() {
            for &d in self.map.rotation(cr.dummy) {
                if !self.kite_at(d) {
                    out.push(MissingKite {
                        crossing: i,
                        first: self.map.target(self.map.pred(d)),
                        second: self.map.target(d),
                    });
                }
            }
        }
        out
    }

    /// Adds an uncrossed parallel edge for every absent kite face.
    ///
    /// The new edge `(p, q)` is inserted next to the segments `(p, c)` and
    /// `(q, c)`, so `{p, q, c}` bounds a face immediately. Running it twice
    /// adds nothing the second time.
    pub fn complete_kites(&self) -> Result<OnePlaneEmbedding, EmbeddingError> {
        let report = self.is_locally_maximal();
        if !report.ok() {
            return Err(EmbeddingError::NotLocallyMaximal {
                missing: report.missing.len(),
            });
        }
        let mut out = self.clone();
        let mut next_label = out.originals.iter().map(|o| o.label).max().map_or(0, |l| l + 1);
        let mut next_edge_label = out.edge_labels.iter().copied().max().map_or(0, |l| l + 1);
        for i in 0..out.crossings.len() {
            let c = out.crossings[i].dummy;
            let darts: Vec<Dart> = out.map.rotation(c).to_vec();
            for to_second in darts {
                if out.kite_at(to_second) {
                    continue;
                }
                let to_first = out.map.pred(to_second);
                let at_first = to_first.reversed();
                let at_second = to_second.reversed();
                let p = out.map.origin(at_first);
                let q = out.map.origin(at_second);
                let e = out.map.push_edge(p, q);
                out.map.insert_before(at_first, e.tail_dart());
                out.map.insert_after(at_second, e.head_dart());
                out.owner.push(out.originals.len() as u32);
                out.edge_labels.push(next_edge_label);
                out.originals.push(OriginalEdge {
                    label: next_label,
                    ends: [p, q],
                    route: Route::Direct(e),
                });
                next_label += 1;
                next_edge_label += 1;
                debug_assert!(out.kite_at(to_second));
            }
        }
        Ok(out)
    }
}
