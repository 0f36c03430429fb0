//! Immutable simple undirected graphs over dense vertex identifiers
//! `0..n-1`, with adjacency stored as bitsets.

use crate::{Error, Result};
use std::collections::VecDeque;

const WORD: usize = 64;

/// Simple undirected graph. Adjacency rows are bitsets over `0..n-1`.
///
/// Invariants (enforced by every constructor): adjacency is symmetric,
/// there are no self-loops, and edges have set semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Old-to-new identifier map produced by vertex deletion and induced
/// subgraphs, so traces stay interpretable after relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Inverse lookup: the old identifier mapped to `new`.
    pub fn old_of(&self, new: usize) -> Option<usize> {
        self.old_to_new
            .iter()
            .position(|slot| *slot == Some(new))
    }

    pub fn len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_to_new.is_empty()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Build from an edge list; duplicate edges collapse, self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[cfg(test)]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v, self.n))
        }
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Iterate over the neighbors of `v` in increasing order. Panics on an
    /// out-of-range vertex; use [`Graph::neighbors`] for the checked form.
    pub fn neighbors_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.neighbors_iter(v).collect())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.row(v).iter().map(|w| w.count_ones() as usize).sum())
    }

    pub fn max_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::GraphTooSmall(1));
        }
        Ok((0..self.n).map(|v| self.degree(v).unwrap()).max().unwrap())
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `root`; `None` marks unreachable vertices.
    pub(crate) fn bfs_distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors_iter(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        Ok(self.bfs_distances(u)[v])
    }

    /// Vertices at distance exactly 2 from `v`.
    pub fn second_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        Ok((0..self.n).filter(|&u| dist[u] == Some(2)).collect())
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// Per-root BFS: for every non-tree edge (u, w) fully inside one BFS,
    /// the closed walk root..u-w..root contains a cycle of length at most
    /// dist(u) + dist(w) + 1, and for a root lying on a shortest cycle the
    /// bound is attained.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors_iter(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            for (u, w) in self.edges() {
                if dist[u] == usize::MAX || dist[w] == usize::MAX {
                    continue;
                }
                if parent[u] == w || parent[w] == u {
                    continue;
                }
                let cycle = dist[u] + dist[w] + 1;
                if best.is_none_or(|b| cycle < b) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// Delete `x`; vertices above `x` shift down by one. Returns the new
    /// graph together with the old-to-new identifier map.
    pub fn delete_vertex(&self, x: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(x)?;
        if self.n < 2 {
            return Err(Error::GraphTooSmall(2));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != x).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `a`, relabeled order-preservingly onto `0..|a|`.
    pub fn induced_subgraph(&self, a: &[usize]) -> Result<(Graph, VertexMap)> {
        let mut members: Vec<usize> = a.to_vec();
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            self.check_vertex(v)?;
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in members.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::empty(members.len());
        for (new_u, &old_u) in members.iter().enumerate() {
            for old_v in self.neighbors_iter(old_u) {
                if let Some(new_v) = old_to_new[old_v] {
                    if new_u < new_v {
                        g.add_edge(new_u, new_v);
                    }
                }
            }
        }
        Ok((g, VertexMap { old_to_new }))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD + bit)
    }
}
