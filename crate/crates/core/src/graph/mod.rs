//! Simple undirected graphs on dense labels `0..n`.

mod edgelist;

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};

use crate::error::{input, Error, Result};
use serde::Serialize;

/// Immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Neighbour lists are
/// sorted, which makes `has_edge` a binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from endpoint pairs. Duplicate pairs (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(input(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must be sorted, deduplicated, with `u < v < n`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
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

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

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

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for &(u, v) in &self.edges {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// The subgraph induced on `set`, relabelled `0..|set|` in the sorted
    /// order of the members. The returned map sends new labels to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.host_n() != self.n {
            return Err(input(format!(
                "vertex set is over {} vertices but the graph has {}",
                set.host_n(),
                self.n
            )));
        }
        let members = set.members();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in members.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &u) in members.iter().enumerate() {
            for &v in &self.adj[u] {
                let new_v = relabel[v];
                if new_v != usize::MAX && new_u < new_v {
                    edges.push((new_u, new_v));
                }
            }
        }
        edges.sort_unstable();
        Ok((
            Graph::from_sorted_edges(members.len(), edges),
            members.to_vec(),
        ))
    }

    /// `E(self) \ E(sub)` on the same vertex set. Fails if `sub` is not a
    /// subgraph of `self`.
    pub fn complement_within(&self, sub: &Graph) -> Result<Graph> {
        self.check_contains(sub)?;
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !sub.has_edge(u, v))
            .collect();
        Ok(Graph::from_sorted_edges(self.n, edges))
    }

    /// Checks `sub` has the same vertex count and `E(sub) ⊆ E(self)`.
    pub fn check_contains(&self, sub: &Graph) -> Result<()> {
        if sub.n != self.n {
            return Err(input(format!(
                "subgraph has {} vertices but the host has {}",
                sub.n, self.n
            )));
        }
        match sub.edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            Some(&(u, v)) => Err(Error::Containment(u, v)),
            None => Ok(()),
        }
    }

    /// Keeps the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep(u, v))
            .collect();
        Graph::from_sorted_edges(self.n, edges)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        DegreeProfile {
            min,
            max,
            regular: (min == max).then_some(min),
        }
    }

    /// The regular degree, or [`Error::NotRegular`].
    pub fn regular_degree(&self) -> Result<usize> {
        let profile = self.degree_profile();
        profile.regular.ok_or(Error::NotRegular {
            min: profile.min,
            max: profile.max,
        })
    }

    /// Number of edges from `v` into `set` (a membership mask over all vertices).
    pub fn degree_into(&self, v: usize, mask: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&w| mask[w]).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    /// Present iff `min == max`.
    pub regular: Option<usize>,
}

/// Sorted, duplicate-free subset of `0..host_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexSet {
    host_n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(host_n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(&bad) = members.iter().find(|&&v| v >= host_n) {
            return Err(input(format!("vertex {bad} outside 0..{host_n}")));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(input("vertex set has duplicate members"));
        }
        Ok(VertexSet { host_n, members })
    }

    pub fn full(host_n: usize) -> Self {
        VertexSet {
            host_n,
            members: (0..host_n).collect(),
        }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet {
            host_n: mask.len(),
            members: (0..mask.len()).filter(|&v| mask[v]).collect(),
        }
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.host_n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }
}
