//! Immutable simple graphs with bitset adjacency rows.

mod graph6;

pub use graph6::{graph6_decode, graph6_encode, Graph6Error};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("vertex {0} has a loop")]
    Loop(usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Popcount of the intersection of two rows.
#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Iterates the set bits of a row.
pub fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            }
        })
    })
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for (u, w) in edges {
            for x in [u, w] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == w {
                return Err(GraphError::Loop(u));
            }
            set_bit(g.row_mut(u), w);
            set_bit(g.row_mut(w), u);
        }
        Ok(g)
    }

    /// Builds a graph from packed rows, checking symmetry and the diagonal.
    pub fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Result<Graph, GraphError> {
        let g = Self::from_rows_unchecked(n, rows);
        for u in 0..n {
            if test_bit(g.row(u), u) {
                return Err(GraphError::Loop(u));
            }
            for w in bits(g.row(u)) {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
                if !test_bit(g.row(w), u) {
                    return Err(GraphError::Asymmetric(u, w));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<u64>>) -> Graph {
        let words = words_for(n);
        assert_eq!(rows.len(), n);
        let mut bits = Vec::with_capacity(n * words);
        for r in rows {
            assert_eq!(r.len(), words);
            bits.extend(r);
        }
        Graph { n, words, bits }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `u`. Panics if `u` is out of range.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.bits[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn rows_owned(&self) -> Vec<Vec<u64>> {
        self.bits
            .chunks(self.words.max(1))
            .take(self.n)
            .map(<[u64]>::to_vec)
            .collect()
    }

    fn check(&self, u: usize) -> Result<(), GraphError> {
        if u < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.n,
            })
        }
    }

    /// Unchecked adjacency test.
    #[inline]
    pub(crate) fn adj(&self, u: usize, w: usize) -> bool {
        test_bit(self.row(u), w)
    }

    pub fn adjacent(&self, u: usize, w: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(w)?;
        Ok(self.adj(u, w))
    }

    pub fn degree(&self, u: usize) -> Result<usize, GraphError> {
        self.check(u)?;
        Ok(self.deg(u))
    }

    #[inline]
    pub(crate) fn deg(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbors(&self, u: usize, w: usize) -> Result<usize, GraphError> {
        self.check(u)?;
        self.check(w)?;
        Ok(and_count(self.row(u), self.row(w)))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.deg(u)).collect()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.deg(0) };
        (0..self.n).all(|u| self.deg(u) == k).then_some(k)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, w)` with `u < w`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&w| w > u)
                .map(move |w| (u, w))
        })
    }

    /// Breadth-first connectivity; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        set_bit(&mut seen, 0);
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !test_bit(&seen, w) {
                    set_bit(&mut seen, w);
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced on `vertices` (relabelled `0..len` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let edges = vertices.iter().enumerate().flat_map(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .enumerate()
                .filter(move |(_, &w)| self.adj(u, w))
                .map(move |(j, _)| (i, i + 1 + j))
        });
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Relabels vertices so that old vertex `u` becomes `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges(self.n, self.edges().map(|(u, w)| (perm[u], perm[w])))
            .expect("permutation of a simple graph")
    }

    /// Vertex pairs `(u, w)`, `u < w`, whose adjacency differs between the two graphs.
    pub fn symmetric_difference(&self, other: &Graph) -> Vec<(usize, usize)> {
        assert_eq!(self.n, other.n);
        let mut out = Vec::new();
        for u in 0..self.n {
            let diff: Vec<u64> = self
                .row(u)
                .iter()
                .zip(other.row(u))
                .map(|(a, b)| a ^ b)
                .collect();
            out.extend(bits(&diff).filter(|&w| w > u).map(|w| (u, w)));
        }
        out
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)))).unwrap()
    }
}
