//! Independent vertex connectivity: unit-capacity max flow on the
//! vertex-split digraph, and brute-force separator enumeration for small
//! graphs.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::SimpleGraph;

/// Largest graph [`enumerate_separators`] accepts.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive enumeration needs n <= {ENUMERATION_LIMIT}, got {0}")]
    TooLarge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowConnectivity {
    pub kappa: usize,
    /// A minimum separating set, or `None` when the graph is complete.
    pub set: Option<Vec<u32>>,
}

/// Residual network of the vertex-split digraph: node `2v` is `v_in`,
/// `2v + 1` is `v_out`.
struct FlowNetwork {
    head: Vec<u32>,
    cap: Vec<u32>,
    first: Vec<u32>,
    next: Vec<u32>,
}

const INF: u32 = u32::MAX / 2;

impl FlowNetwork {
    fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            first: vec![u32::MAX; 2 * n],
            next: Vec::new(),
        };
        for v in 0..n as u32 {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, INF);
            net.arc(2 * v + 1, 2 * u, INF);
        }
        net
    }

    fn arc(&mut self, from: u32, to: u32, cap: u32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.head.push(b);
            self.cap.push(c);
            self.next.push(self.first[a as usize]);
            self.first[a as usize] = self.head.len() as u32 - 1;
        }
    }

    fn arcs(&self, x: u32) -> impl Iterator<Item = usize> + '_ {
        let mut a = self.first[x as usize];
        std::iter::from_fn(move || {
            (a != u32::MAX).then(|| {
                let cur = a as usize;
                a = self.next[cur];
                cur
            })
        })
    }

    /// Augments from `s_out` to `t_in` until the flow reaches `limit` or no
    /// path remains. Returns the flow value; `cap` holds the residual.
    fn max_flow(&mut self, s: u32, t: u32, limit: usize) -> usize {
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut parent = vec![u32::MAX; self.first.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = u32::MAX);
            parent[source as usize] = u32::MAX - 1;
            queue.clear();
            queue.push_back(source);
            'bfs: while let Some(x) = queue.pop_front() {
                for a in self.arcs(x) {
                    let y = self.head[a];
                    if self.cap[a] > 0 && parent[y as usize] == u32::MAX {
                        parent[y as usize] = a as u32;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink as usize] == u32::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let a = parent[y as usize] as usize;
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Vertices whose split arc crosses the residual cut reachable from `s_out`.
    fn min_cut(&self, s: u32) -> Vec<u32> {
        let mut seen = vec![false; self.first.len()];
        let mut stack = vec![2 * s + 1];
        seen[(2 * s + 1) as usize] = true;
        while let Some(x) = stack.pop() {
            for a in self.arcs(x) {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.first.len() as u32 / 2)
            .filter(|&v| seen[2 * v as usize] && !seen[2 * v as usize + 1])
            .collect()
    }
}

/// Vertex connectivity by Menger's theorem. Sources are taken in order of
/// increasing degree (ties by id) until more than the current best have been
/// tried; each is paired with every non-adjacent vertex.
///
/// A complete graph has `κ = n − 1` and no separating set; a disconnected
/// graph has `κ = 0` and the empty set.
pub fn connectivity_flow(g: &SimpleGraph) -> FlowConnectivity {
    let n = g.vertex_count();
    if g.is_complete() {
        return FlowConnectivity { kappa: n.saturating_sub(1), set: None };
    }
    if !g.is_connected() {
        return FlowConnectivity { kappa: 0, set: Some(Vec::new()) };
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut best = n - 1;
    let mut set = None;
    let mut net = FlowNetwork::new(g);
    let fresh = net.cap.clone();
    let mut i = 0;
    while i <= best && i < n {
        let s = order[i];
        for t in 0..n as u32 {
            if t == s || g.has_edge(s, t) {
                continue;
            }
            net.cap.copy_from_slice(&fresh);
            let f = net.max_flow(s, t, best);
            if f < best {
                best = f;
                set = Some(net.min_cut(s));
            }
        }
        i += 1;
    }
    FlowConnectivity { kappa: best, set }
}

/// Every inclusion-minimal separating set with at most `kmax` vertices, in
/// order of size and then lexicographically.
///
/// Each result is checked to give every member a neighbour in every flap.
pub fn enumerate_separators(g: &SimpleGraph, kmax: usize) -> Result<Vec<Vec<u32>>, OracleError> {
    let n = g.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(OracleError::TooLarge(n));
    }
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut masks: Vec<u32> = Vec::new();
    for k in 0..=kmax.min(n) {
        let mut pick: Vec<u32> = (0..k as u32).collect();
        loop {
            let mask = pick.iter().fold(0u32, |m, &v| m | 1 << v);
            if !masks.iter().any(|&f| f & mask == f) && g.separates(&pick) {
                assert!(
                    members_see_every_flap(g, &pick),
                    "minimal separator {pick:?} has a member missing a flap"
                );
                masks.push(mask);
                found.push(pick.clone());
            }
            if !next_combination(&mut pick, n as u32) {
                break;
            }
        }
    }
    Ok(found)
}

fn next_combination(pick: &mut [u32], n: u32) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - (k - i) as u32 {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn members_see_every_flap(g: &SimpleGraph, s: &[u32]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &v in s {
        removed[v as usize] = true;
    }
    let (label, count) = g.components_without(&removed);
    s.iter().all(|&v| {
        let mut seen = vec![false; count];
        for &w in g.neighbors(v) {
            if let Some(c) = label[w as usize] {
                seen[c as usize] = true;
            }
        }
        seen.iter().all(|&x| x)
    })
}
