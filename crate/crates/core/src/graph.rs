//! Immutable simple undirected graphs over dense vertex indices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph. Vertex `i`'s neighbourhood is `adj[i]`; `labels[i]`
/// keeps the external name the vertex had in its source file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`. Self-loops and repeated
    /// edges are dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_labels((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Ok(Graph { adj, labels })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("indices in range")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("indices in range")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, edges).expect("indices in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Looks up a vertex by its external label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// `|E| / C(n, 2)`, or 0 for graphs with fewer than two vertices.
    pub fn density(&self) -> f64 {
        let n = self.n();
        if n < 2 {
            return 0.0;
        }
        self.edge_count() as f64 / (n * (n - 1) / 2) as f64
    }

    /// `N(A) = ⋃_{v ∈ A} N(v)`.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Neighbourhoods as bitmasks, for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    /// The subgraph induced by `keep`, with vertices renumbered in ascending
    /// order. Returns the subgraph and the map from new to old indices.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let m = old.len();
        let adj = old
            .iter()
            .map(|&v| VertexSet::from_iter(m, self.adj[v].iter().filter(|&u| keep.contains(u)).map(|u| new_index[u])))
            .collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        (Graph { adj, labels }, old)
    }

    /// Breadth-first levels from `origin`, within its component.
    pub fn bfs_levels(&self, origin: usize) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::singleton(self.n(), origin);
        let mut levels = vec![vec![origin]];
        loop {
            let mut next = VertexSet::new(self.n());
            for &v in levels.last().unwrap() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            if next.is_empty() {
                return levels;
            }
            seen.union_with(&next);
            levels.push(next.iter().collect());
        }
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut unseen = VertexSet::full(n);
        let mut components = Vec::new();
        while let Some(root) = unseen.first() {
            let mut comp = VertexSet::singleton(n, root);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in &self.adj[v] {
                    if comp.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            unseen.difference_with(&comp);
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Checks symmetry, absence of self-loops and capacity of every neighbourhood.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        self.labels.len() == n
            && self.adj.iter().enumerate().all(|(v, nv)| {
                nv.capacity() == n && !nv.contains(v) && nv.iter().all(|u| self.adj[u].contains(v))
            })
    }
}

/// Start-vertex selection by breadth-first search: the smallest-index vertex of
/// the last BFS level from `origin`. With `double`, the search is repeated once
/// from that vertex.
pub fn bfs_start_vertex(g: &Graph, origin: usize, double: bool) -> usize {
    let last_level_min = |from: usize| -> usize {
        *g.bfs_levels(from)
            .last()
            .and_then(|level| level.iter().min())
            .expect("BFS always has a level")
    };
    let first = last_level_min(origin);
    if double {
        last_level_min(first)
    } else {
        first
    }
}
