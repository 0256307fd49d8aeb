//! Straight-line drawings turned into embeddings.

use std::collections::HashMap;

use super::GeneratorError;
use crate::embedding::OnePlaneEmbedding;
use crate::rotation::{Dart, RotationSystem, Vertex};

/// A drawing with straight edges. Each vertex's rotation is read off the
/// drawing: neighbours sorted clockwise by the direction of the edge leaving
/// it. Declared crossings become dummy vertices at the intersection point.
///
/// A direction override replaces the geometric direction of one edge end,
/// which lets one vertex sit "at infinity" (e.g. the outer hub of a
/// wheel-like drawing). Overridden edges are skipped by the intersection
/// check.
#[derive(Clone, Debug, Default)]
pub struct Sketch {
    points: Vec<(f64, f64)>,
    edges: Vec<(u32, u32)>,
    crossings: Vec<[(u32, u32); 2]>,
    directions: HashMap<(u32, u32), f64>,
}

fn key(u: u32, v: u32) -> (u32, u32) {
    (u.min(v), u.max(v))
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Intersection point of segments `p1 p2` and `q1 q2` if they cross at an
/// interior point of both.
fn proper_intersection(
    p1: (f64, f64),
    p2: (f64, f64),
    q1: (f64, f64),
    q2: (f64, f64),
) -> Option<(f64, f64)> {
    const EPS: f64 = 1e-9;
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if d1 * d2 < -EPS && d3 * d4 < -EPS {
        let t = d1 / (d1 - d2);
        Some((p1.0 + t * (p2.0 - p1.0), p1.1 + t * (p2.1 - p1.1)))
    } else {
        None
    }
}

impl Sketch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, x: f64, y: f64) -> u32 {
        self.points.push((x, y));
        self.points.len() as u32 - 1
    }

    pub fn add_edge(&mut self, u: u32, v: u32) {
        self.edges.push((u, v));
    }

    /// Declares that edge `(a, b)` crosses edge `(c, d)`. Both must have
    /// been added.
    pub fn add_crossing(&mut self, a: u32, b: u32, c: u32, d: u32) {
        self.crossings.push([(a, b), (c, d)]);
    }

    /// Direction (radians, counter-clockwise from the x axis) in which the
    /// edge to `toward` leaves `at`.
    pub fn set_direction(&mut self, at: u32, toward: u32, angle: f64) {
        self.directions.insert((at, toward), angle);
    }

    fn overridden(&self, u: u32, v: u32) -> bool {
        self.directions.contains_key(&(u, v)) || self.directions.contains_key(&(v, u))
    }

    fn point(&self, v: u32) -> (f64, f64) {
        self.points[v as usize]
    }

    pub fn build(&self) -> Result<OnePlaneEmbedding, GeneratorError> {
        let n = self.points.len() as u32;
        let geo = |msg: String| GeneratorError::Geometry(msg);
        let mut edge_set: HashMap<(u32, u32), usize> = HashMap::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= n || v >= n || u == v {
                return Err(geo(format!("bad edge ({u}, {v})")));
            }
            if edge_set.insert(key(u, v), i).is_some() {
                return Err(geo(format!("duplicate edge ({u}, {v})")));
            }
        }

        let mut points = self.points.clone();
        let mut crossed: HashMap<(u32, u32), u32> = HashMap::new();
        for (i, pair) in self.crossings.iter().enumerate() {
            let x = n + i as u32;
            for &(a, b) in pair {
                if !edge_set.contains_key(&key(a, b)) {
                    return Err(geo(format!("crossing uses unknown edge ({a}, {b})")));
                }
                if crossed.insert(key(a, b), x).is_some() {
                    return Err(geo(format!("edge ({a}, {b}) crossed twice")));
                }
            }
            let [(a, b), (c, d)] = *pair;
            let at = proper_intersection(self.point(a), self.point(b), self.point(c), self.point(d))
                .ok_or_else(|| geo(format!("({a}, {b}) and ({c}, {d}) do not intersect")))?;
            points.push(at);
        }

        let straight: Vec<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !self.overridden(u, v))
            .collect();
        for (i, &(a, b)) in straight.iter().enumerate() {
            for &(c, d) in &straight[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let hit = proper_intersection(self.point(a), self.point(b), self.point(c), self.point(d));
                if hit.is_some() {
                    let declared = crossed.get(&key(a, b)).is_some_and(|x| crossed.get(&key(c, d)) == Some(x));
                    if !declared {
                        return Err(geo(format!("undeclared crossing ({a}, {b}) x ({c}, {d})")));
                    }
                }
            }
        }

        // Segments of the planarisation, with directions at both ends.
        let total = points.len();
        let mut map = RotationSystem::new(total);
        let mut darts: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); total];
        let mut segment = |map: &mut RotationSystem, u: u32, v: u32, du: f64, dv: f64| {
            let e = map.push_edge(Vertex(u), Vertex(v));
            darts[u as usize].push((du, e.tail_dart()));
            darts[v as usize].push((dv, e.head_dart()));
        };
        let angle = |from: (f64, f64), to: (f64, f64)| (to.1 - from.1).atan2(to.0 - from.0);
        for &(u, v) in &self.edges {
            let pu = points[u as usize];
            let pv = points[v as usize];
            match crossed.get(&key(u, v)) {
                None => {
                    let du = self.directions.get(&(u, v)).copied().unwrap_or_else(|| angle(pu, pv));
                    let dv = self.directions.get(&(v, u)).copied().unwrap_or_else(|| angle(pv, pu));
                    segment(&mut map, u, v, du, dv);
                }
                Some(&x) => {
                    let px = points[x as usize];
                    segment(&mut map, u, x, angle(pu, px), angle(px, pu));
                    segment(&mut map, x, v, angle(px, pv), angle(pv, px));
                }
            }
        }
        for (v, mut list) in darts.into_iter().enumerate() {
            list.sort_by(|a, b| b.0.total_cmp(&a.0));
            for w in list.windows(2) {
                if (w[0].0 - w[1].0).abs() < 1e-12 {
                    return Err(geo(format!("overlapping edges at vertex {v}")));
                }
            }
            for (_, d) in list {
                map.push_dart(d);
            }
        }

        let emb = OnePlaneEmbedding::from_planarisation(map, n as usize);
        // Full validation, including the sphere check.
        OnePlaneEmbedding::from_file(&emb.to_file())?;
        Ok(emb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_with_crossing() {
        let mut s = Sketch::new();
        for (x, y) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
            s.add_vertex(x, y);
        }
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)] {
            s.add_edge(u, v);
        }
        s.add_crossing(0, 2, 1, 3);
        let e = s.build().unwrap();
        assert_eq!(e.crossing_count(), 1);
        assert_eq!(e.vertex_count(), 5);
        assert_eq!(e.faces().len(), 5);
    }

    #[test]
    fn undeclared_crossing_rejected() {
        let mut s = Sketch::new();
        for (x, y) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
            s.add_vertex(x, y);
        }
        s.add_edge(0, 2);
        s.add_edge(1, 3);
        assert!(matches!(s.build(), Err(GeneratorError::Geometry(_))));
    }
}
