//! Immutable simple undirected graphs over vertices `0..n` with bitmask
//! adjacency rows, plus the neighbourhood and counting kernel everything
//! else builds on.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Range, Sub};

use thiserror::Error;

use crate::graph6::{self, Graph6Error};

/// Largest supported vertex count. One `u64` per adjacency row makes
/// common-neighbour counting a single AND plus a popcount.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    NotDistinct(usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("relabeling is not a permutation of 0..{order}")]
    InvalidPermutation { order: usize },
}

/// A set of vertices of a graph on at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet { bits: 1 << v }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.bits & (1 << v) != 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet {
            bits: self.bits | (1 << v),
        }
    }

    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet {
            bits: self.bits & !(1 << v),
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet {
            bits: self.bits & rhs.bits,
        }
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet {
            bits: self.bits | rhs.bits,
        }
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet {
            bits: self.bits ^ rhs.bits,
        }
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet {
            bits: self.bits & !rhs.bits,
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < MAX_ORDER);
            bits |= 1 << v;
        }
        VertexSet { bits }
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone)]
pub struct VertexIter {
    bits: u64,
}

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An immutable simple undirected graph. Adjacency is symmetric with a zero
/// diagonal; both invariants are established at construction time and never
/// change afterwards, so values are safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    fn check_order(n: usize) -> Result<(), GraphError> {
        if n == 0 || n > MAX_ORDER {
            Err(GraphError::OrderOutOfRange(n))
        } else {
            Ok(())
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Self::check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Self::check_order(n)?;
        let full = Self::mask(n);
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Self::check_order(n)?;
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Self::check_order(n)?;
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Trusted constructor for rows produced by builders and the search
    /// kernel. Invariants are checked in debug builds only.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!((1..=MAX_ORDER).contains(&n));
        debug_assert!(adj.iter().all(|&row| row & !Self::mask(n) == 0));
        #[cfg(debug_assertions)]
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0, "self-loop at {u}");
            for v in 0..n {
                debug_assert_eq!(adj[u] >> v & 1, adj[v] >> u & 1, "asymmetry at ({u},{v})");
            }
        }
        Graph { n, adj }
    }

    fn mask(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1 << n) - 1
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        Self::mask(self.n)
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Whether `u` and `v` are adjacent. Panics on an out-of-range vertex.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    /// Degree of `v`. Panics on an out-of-range vertex.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !Self::mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Number of common neighbours of two distinct vertices: one AND plus a
    /// popcount on the adjacency rows.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::NotDistinct(u));
        }
        Ok((self.adj[u] & self.adj[v]).count_ones() as usize)
    }

    /// The open neighbourhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.adj[v]))
    }

    /// The closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.adj[v] | 1 << v))
    }

    /// Vertices at distance exactly 2 from `v`.
    pub fn second_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let closed = self.adj[v] | 1 << v;
        let mut reach = 0u64;
        for u in VertexSet::from_bits(self.adj[v]) {
            reach |= self.adj[u];
        }
        Ok(VertexSet::from_bits(reach & !closed))
    }

    /// `Some(k)` if every vertex has degree `k` and the graph has at least
    /// one edge ("nonempty"); `None` otherwise.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        if k == 0 || (1..self.n).any(|v| self.degree(v) != k) {
            None
        } else {
            Some(k)
        }
    }

    pub fn is_connected(&self) -> bool {
        let full = self.vertex_mask();
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            for u in VertexSet::from_bits(reached) {
                next |= self.adj[u];
            }
            if next == reached {
                return reached == full;
            }
            reached = next;
        }
    }

    /// Graph diameter via BFS from every vertex; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let full = self.vertex_mask();
        let mut diameter = 0;
        for v in 0..self.n {
            let mut reached = 1u64 << v;
            let mut frontier = reached;
            let mut dist = 0;
            while reached != full {
                let mut next = 0u64;
                for u in VertexSet::from_bits(frontier) {
                    next |= self.adj[u];
                }
                next &= !reached;
                if next == 0 {
                    return None;
                }
                reached |= next;
                frontier = next;
                dist += 1;
            }
            diameter = diameter.max(dist);
        }
        Some(diameter)
    }

    /// Same vertex set, edge exactly where there is a non-edge, no loops.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Relabels vertices: `relabeling[v]` is the new index of vertex `v`.
    pub fn permute(&self, relabeling: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n;
        let valid = relabeling.len() == n
            && relabeling.iter().all(|&x| x < n)
            && relabeling.iter().collect::<VertexSet>() == VertexSet::from_bits(Self::mask(n));
        if !valid {
            return Err(GraphError::InvalidPermutation { order: n });
        }
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in VertexSet::from_bits(self.adj[u]) {
                adj[relabeling[u]] |= 1 << relabeling[v];
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(record: &str) -> Result<Graph, Graph6Error> {
        graph6::decode(record)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}
