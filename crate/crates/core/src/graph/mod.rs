//! Simple undirected graphs stored as symmetric bit rows, vertex subsets,
//! and the certified combinatorial primitives built on top of them.

mod bitset;
pub mod cover;
pub mod forest;
pub mod graph6;
pub mod iso;
pub mod matching;
mod structures;

pub use bitset::VertexSet;
pub use structures::{Cut, LinearForest, Matching, VertexCover};

use crate::error::{precondition, Result};

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(m: usize) -> usize {
    m.div_ceil(WORD).max(1)
}

/// A simple undirected graph on vertices `0..m`.
///
/// Row `v` holds the neighbourhood of `v` as a bitmask; rows are always
/// symmetric and the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `m` vertices.
    pub fn new(m: usize) -> Self {
        let words = words_for(m);
        Graph {
            m,
            words,
            rows: vec![0; m * words],
        }
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(m);
        for &(u, v) in edges {
            if u >= m || v >= m {
                return precondition(format!("edge ({u},{v}) out of range for {m} vertices"));
            }
            if u == v {
                return precondition(format!("loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Graph::new(m);
        for u in 0..m {
            for v in u + 1..m {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(m: usize) -> Self {
        let mut g = Graph::new(m);
        if m >= 3 {
            for v in 0..m {
                g.add_edge(v, (v + 1) % m);
            }
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Adds `uv`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `d(v, set)`: neighbours of `v` inside `set`.
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.row(v)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::iter_bits(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.m, self.row(v).to_vec())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.m).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.m).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.m).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.m).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.m).all(|v| self.degree(v) == d)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    /// `e(G[set])`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).sum::<usize>() / 2
    }

    /// `e(A, B)`: ordered pairs `(a, b)` with `a ∈ A`, `b ∈ B`, `ab ∈ E`.
    /// Edges inside `A ∩ B` are counted twice.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.degree_in(v, b)).sum()
    }

    /// Minimum degree of `G[set]` (0 for the empty set).
    pub fn min_degree_in(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).min().unwrap_or(0)
    }

    pub fn max_degree_in(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).max().unwrap_or(0)
    }

    /// Induced subgraph on `set`, relabelled to `0..|set|` in increasing
    /// order. The returned vector maps new labels back to old ones.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut h = Graph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        (h, map)
    }

    /// Subgraph with the same vertex set keeping only edges between `left`
    /// and `right`.
    pub fn bipartite_restriction(&self, left: &VertexSet, right: &VertexSet) -> Graph {
        let mut h = Graph::new(self.m);
        for u in left.iter() {
            for v in self.neighbors(u) {
                if right.contains(v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.m);
        for u in 0..self.m {
            for v in u + 1..self.m {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::new(self.m);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.m;
        let mut h = Graph::new(self.m + other.m);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.add_edge(u + off, v + off);
        }
        h
    }

    pub fn is_connected(&self) -> bool {
        if self.m == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.m);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == self.m
    }

    /// Neighbourhood bitmask of `v` restricted to a scope of at most 64
    /// vertices, in the scope's local numbering.
    pub(crate) fn local_rows(&self, map: &[usize]) -> Vec<u64> {
        debug_assert!(map.len() <= 64);
        map.iter()
            .map(|&u| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect()
    }
}
