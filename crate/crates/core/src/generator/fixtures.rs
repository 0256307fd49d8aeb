//! Small named embeddings used in tests and by the `gen --fixture` command.

use std::f64::consts::TAU;

use super::{GeneratorError, Sketch};
use crate::embedding::OnePlaneEmbedding;

pub const FIXTURE_NAMES: &[&str] = &[
    "k4-cross",
    "k6-oneplanar",
    "two-k4-shared-vertex",
    "grid-no-kites",
    "arrow-two-kites",
];

pub fn fixture(name: &str) -> Result<OnePlaneEmbedding, GeneratorError> {
    let sketch = match name {
        "k4-cross" => k4_cross(),
        "k6-oneplanar" => k6(),
        "two-k4-shared-vertex" => two_k4(),
        "grid-no-kites" => grid(),
        "arrow-two-kites" => arrow(),
        _ => return Err(GeneratorError::UnknownFixture(name.to_string())),
    };
    sketch.build()
}

fn with_points(points: &[(f64, f64)], edges: &[(u32, u32)]) -> Sketch {
    let mut s = Sketch::new();
    for &(x, y) in points {
        s.add_vertex(x, y);
    }
    for &(u, v) in edges {
        s.add_edge(u, v);
    }
    s
}

/// A square with both diagonals crossing.
fn k4_cross() -> Sketch {
    let mut s = with_points(
        &[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)],
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
    );
    s.add_crossing(0, 2, 1, 3);
    s
}

/// Nested triangles `a b c` and `d e f` with three spokes and three crossing
/// pairs; the underlying graph is K6.
fn k6() -> Sketch {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    let mut s = with_points(
        &[(0.0, 10.0), (-10.0, -8.0), (10.0, -8.0), (0.0, 4.0), (-4.0, -3.0), (4.0, -3.0)],
        &[
            (a, b), (b, c), (c, a),
            (d, e), (e, f), (f, d),
            (a, d), (b, e), (c, f),
            (a, e), (b, d), (b, f), (c, e), (c, d), (a, f),
        ],
    );
    s.add_crossing(a, e, b, d);
    s.add_crossing(b, f, c, e);
    s.add_crossing(c, d, a, f);
    s
}

/// Two crossed K4s glued at vertex 0, which is a cut vertex.
fn two_k4() -> Sketch {
    let mut s = with_points(
        &[(0.0, 0.0), (-1.0, 1.0), (-2.0, 0.0), (-1.0, -1.0), (1.0, 1.0), (2.0, 0.0), (1.0, -1.0)],
        &[
            (0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3),
            (0, 4), (4, 5), (5, 6), (6, 0), (0, 5), (4, 6),
        ],
    );
    s.add_crossing(0, 2, 1, 3);
    s.add_crossing(0, 5, 4, 6);
    s
}

/// Three rings of six vertices joined only by crossing X-cells, with an
/// inner hub on the first ring and an outer hub on the last. No crossing has
/// any of its four kite edges.
fn grid() -> Sketch {
    const W: u32 = 6;
    let mut s = Sketch::new();
    let top = s.add_vertex(0.0, 0.0);
    let at = |i: u32, r: u32| 1 + (r - 1) * W + i % W;
    for r in 1..=3 {
        for i in 0..W {
            let t = TAU * i as f64 / W as f64;
            s.add_vertex(r as f64 * t.cos(), r as f64 * t.sin());
        }
    }
    let bottom = s.add_vertex(100.0, 100.0);
    for i in 0..W {
        s.add_edge(top, at(i, 1));
        for r in 1..3 {
            s.add_edge(at(i, r), at(i + 1, r + 1));
            s.add_edge(at(i + 1, r), at(i, r + 1));
            s.add_crossing(at(i, r), at(i + 1, r + 1), at(i + 1, r), at(i, r + 1));
        }
        let t = TAU * i as f64 / W as f64;
        s.add_edge(at(i, 3), bottom);
        s.set_direction(at(i, 3), bottom, t);
        s.set_direction(bottom, at(i, 3), -t);
    }
    s
}

/// A hub whose spokes cross a ring of chords; the hub is adjacent to no ring
/// vertex, so each crossing lacks two kite edges.
fn arrow() -> Sketch {
    const W: u32 = 6;
    let alpha = TAU / W as f64;
    let mut s = Sketch::new();
    let hub = s.add_vertex(0.0, 0.0);
    let mid = |j: u32| 1 + j % W;
    let tip = |i: u32| 1 + W + i % W;
    for j in 0..W {
        let t = alpha * j as f64;
        s.add_vertex(2.0 * t.cos(), 2.0 * t.sin());
    }
    for i in 0..W {
        let t = alpha * (i as f64 + 0.5);
        s.add_vertex(3.0 * t.cos(), 3.0 * t.sin());
    }
    for i in 0..W {
        s.add_edge(hub, tip(i));
        s.add_edge(mid(i), mid(i + 1));
        s.add_crossing(hub, tip(i), mid(i), mid(i + 1));
        s.add_edge(tip(i), mid(i));
        s.add_edge(tip(i), mid(i + 1));
        s.add_edge(tip(i), tip(i + 1));
    }
    s
}
