//! Simple undirected graphs and the product constructions built on them.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, edges are stored
//! normalized (`u < v`) and sorted, and adjacency lists are sorted as well so
//! that every derived structure is deterministic.

mod product;

pub use product::{
    cartesian_product, corona, direct_product, disjoint_union, lexicographic_product,
    restrict_to_layer, rooted_product, strong_product, CoronaVertexMap, Factor,
    ProductVertexMap, RootedVertexMap,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple finite undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Wire format: `{"n": <int>, "edges": [[u, v], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph and rejects isolated vertices, the standing assumption
    /// for weak IASI graphs. Use [`Graph::with_isolated`] to lift that check.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = Self::with_isolated(n, edges)?;
        if let Some(v) = (0..g.n).find(|&v| g.adj[v].is_empty()) {
            return Err(Error::invalid(format!(
                "vertex {v} is isolated (pass allow-isolated to accept it)"
            )));
        }
        Ok(g)
    }

    /// Builds a graph, allowing isolated vertices.
    pub fn with_isolated(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_normalized(n, normalized))
    }

    /// `edges` must already be normalized, sorted, loop-free and duplicate-free.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Normalizes, sorts and dedups an edge list produced by a trusted constructor.
    pub(crate) fn from_raw_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_normalized(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// The path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The cycle on `n >= 3` vertices in index order.
    ///
    /// # Panics
    ///
    /// Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices, got {n}");
        Self::from_raw_edges(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_normalized(n, edges)
    }

    /// The star with center `0` and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Self {
        Self::from_normalized(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// True for the empty graph and for every graph with a single component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True when no two vertices of `set` are adjacent. Out-of-range ids are
    /// ignored by adjacency, so callers validate ranges separately.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Subgraph induced on `vertices`; local vertex `k` is `vertices[k]`.
    /// Isolated vertices are allowed in the result.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::invalid(format!("vertex {v} outside 0..{}", self.n)));
            }
            if local[v] != usize::MAX {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
            local[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Ok(Self::from_raw_edges(vertices.len(), edges))
    }

    /// Two-coloring by BFS, or an odd cycle when none exists.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartiteness::Bipartite {
            coloring: color.into_iter().map(|c| c.unwrap()).collect(),
        }
    }

    /// The bipartition `(color 0, color 1)` when the graph is bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        match self.bipartiteness() {
            Bipartiteness::Bipartite { coloring } => {
                let (left, right): (Vec<usize>, Vec<usize>) =
                    (0..self.n).partition(|&v| coloring[v] == 0);
                Some((left, right))
            }
            Bipartiteness::OddCycle(_) => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite { .. })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        })
        .expect("graph serialization cannot fail")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })
    }

    /// Parses the graph JSON format. Structural problems (bad endpoints,
    /// loops, duplicates, isolated vertices when not allowed) are reported
    /// as parse errors.
    pub fn from_json(text: &str, allow_isolated: bool) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text)?;
        let edges = raw.edges.into_iter().map(|[u, v]| (u, v));
        let built = if allow_isolated {
            Graph::with_isolated(raw.n, edges)
        } else {
            Graph::new(raw.n, edges)
        };
        built.map_err(|e| match e {
            Error::InvalidInput(msg) => Error::Parse(msg),
            other => other,
        })
    }
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` is 0 or 1 and every edge joins different colors.
    Bipartite { coloring: Vec<u8> },
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

// `u` and `w` are adjacent and at the same BFS parity; walking both up the
// BFS tree to their common ancestor closes an odd cycle.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
