//! Plain undirected simple graphs.

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
///
/// Parallel edges and loops passed to the constructor are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
    edges: usize,
}

impl SimpleGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut edges = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edges += list.len();
        }
        SimpleGraph { adj, edges: edges / 2 }
    }

    /// Inserts `(u, v)` unless it is a loop or already present.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        if u == v {
            return;
        }
        if let Err(at) = self.adj[u as usize].binary_search(&v) {
            self.adj[u as usize].insert(at, v);
            let at = self.adj[v as usize].binary_search(&u).unwrap_err();
            self.adj[v as usize].insert(at, u);
            self.edges += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Component label (numbered by smallest member) of every vertex not in
    /// `removed`, and the number of components.
    pub fn components_without(&self, removed: &[bool]) -> (Vec<Option<u32>>, usize) {
        let n = self.vertex_count();
        let mut label = vec![None; n];
        let mut count = 0u32;
        let mut stack = Vec::new();
        for s in 0..n {
            if removed[s] || label[s].is_some() {
                continue;
            }
            label[s] = Some(count);
            stack.push(s as u32);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v as usize] {
                    if !removed[w as usize] && label[w as usize].is_none() {
                        label[w as usize] = Some(count);
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count as usize)
    }

    pub fn is_connected(&self) -> bool {
        let removed = vec![false; self.vertex_count()];
        self.components_without(&removed).1 <= 1
    }

    /// Whether deleting `set` leaves at least two components.
    pub fn separates(&self, set: &[u32]) -> bool {
        let mut removed = vec![false; self.vertex_count()];
        for &v in set {
            removed[v as usize] = true;
        }
        self.components_without(&removed).1 >= 2
    }
}
