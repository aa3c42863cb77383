//! Labeled bipartite graphs with a fixed bipartition.
//!
//! The left part is `X = {x_1, .., x_r}` and the right part is
//! `Y = {y_1, .., y_s}`. Edges are stored as an `r x s` bit matrix, one
//! row per left vertex, each row padded to a whole number of 64-bit words.
//! All public indices are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A vertex of a bipartite graph, labeled 1-based within its part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(j) => write!(f, "y{j}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    row_words: usize,
    bits: Vec<u64>,
}

/// Per-vertex degrees plus the minimum and maximum over all vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    pub left_degrees: Vec<usize>,
    pub right_degrees: Vec<usize>,
}

impl BipartiteGraph {
    /// The edgeless graph on parts of size `r` and `s`.
    pub fn empty(r: usize, s: usize) -> Self {
        let row_words = s.div_ceil(WORD);
        Self {
            left: r,
            right: s,
            row_words,
            bits: vec![0; r * row_words],
        }
    }

    /// `K_{r,s}`.
    pub fn complete(r: usize, s: usize) -> Self {
        Self::empty(r, s).complement()
    }

    /// Builds a graph from 1-based `(i, j)` pairs, meaning edge `x_i y_j`.
    pub fn new(r: usize, s: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(r, s);
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > r || j > s {
                return Err(Error::IndexOutOfRange { i, j, r, s });
            }
            if g.has_edge(i, j) {
                return Err(Error::DuplicateEdge { i, j });
            }
            g.set(i - 1, j - 1);
        }
        Ok(g)
    }

    /// Decodes an edge mask where bit `(i-1)*s + (j-1)` stands for `x_i y_j`.
    ///
    /// Only meaningful when `r * s <= 64`; higher bits are ignored.
    pub fn from_mask(r: usize, s: usize, mask: u64) -> Self {
        debug_assert!(r * s <= WORD);
        let mut g = Self::empty(r, s);
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if b >= r * s {
                break;
            }
            g.set(b / s, b % s);
        }
        g
    }

    /// Inverse of [`BipartiteGraph::from_mask`]; `None` when `r * s > 64`.
    pub fn to_mask(&self) -> Option<u64> {
        if self.left * self.right > WORD {
            return None;
        }
        let mut mask = 0u64;
        for (i, j) in self.edges() {
            mask |= 1 << ((i - 1) * self.right + (j - 1));
        }
        Some(mask)
    }

    #[inline]
    fn set(&mut self, i0: usize, j0: usize) {
        self.bits[i0 * self.row_words + j0 / WORD] |= 1 << (j0 % WORD);
    }

    #[inline]
    fn clear(&mut self, i0: usize, j0: usize) {
        self.bits[i0 * self.row_words + j0 / WORD] &= !(1 << (j0 % WORD));
    }

    #[inline]
    fn get(&self, i0: usize, j0: usize) -> bool {
        self.bits[i0 * self.row_words + j0 / WORD] >> (j0 % WORD) & 1 == 1
    }

    fn row(&self, i0: usize) -> &[u64] {
        &self.bits[i0 * self.row_words..(i0 + 1) * self.row_words]
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    /// `n = r + s`.
    pub fn order(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether `x_i y_j` is an edge. Out-of-range indices are never edges.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.left && j <= self.right && self.get(i - 1, j - 1)
    }

    /// Edges as 1-based pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.left).flat_map(move |i0| {
            (0..self.right)
                .filter(move |&j0| self.get(i0, j0))
                .map(move |j0| (i0 + 1, j0 + 1))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// The bipartite complement: same parts, exactly the missing `X`-`Y` pairs.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        let tail = self.right % WORD;
        for i0 in 0..self.left {
            let row = &mut out.bits[i0 * self.row_words..(i0 + 1) * self.row_words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                if let Some(last) = row.last_mut() {
                    *last &= (1u64 << tail) - 1;
                }
            }
        }
        out
    }

    /// A copy with `x_i y_j` added (no-op if present).
    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index(i, j)?;
        let mut out = self.clone();
        out.set(i - 1, j - 1);
        Ok(out)
    }

    /// A copy with `x_i y_j` removed (no-op if absent).
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index(i, j)?;
        let mut out = self.clone();
        out.clear(i - 1, j - 1);
        Ok(out)
    }

    /// A copy with `extra` isolated vertices appended to the right part.
    pub fn with_extra_right(&self, extra: usize) -> Self {
        let mut out = Self::empty(self.left, self.right + extra);
        for (i, j) in self.edges() {
            out.set(i - 1, j - 1);
        }
        out
    }

    /// Swaps the roles of the two parts: `x_i y_j` becomes `x_j y_i`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::empty(self.right, self.left);
        for (i, j) in self.edges() {
            out.set(j - 1, i - 1);
        }
        out
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.left || j > self.right {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                r: self.left,
                s: self.right,
            });
        }
        Ok(())
    }

    pub fn left_degree(&self, i: usize) -> usize {
        self.row(i - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn right_degree(&self, j: usize) -> usize {
        (0..self.left).filter(|&i0| self.get(i0, j - 1)).count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(i) => self.left_degree(i),
            Vertex::Y(j) => self.right_degree(j),
        }
    }

    /// Neighbours of `v`, in index order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match v {
            Vertex::X(i) => (1..=self.right)
                .filter(|&j| self.get(i - 1, j - 1))
                .map(Vertex::Y)
                .collect(),
            Vertex::Y(j) => (1..=self.left)
                .filter(|&i| self.get(i - 1, j - 1))
                .map(Vertex::X)
                .collect(),
        }
    }

    pub fn degrees(&self) -> Result<DegreeSummary> {
        if self.left == 0 || self.right == 0 {
            return Err(Error::EmptyPart);
        }
        let left_degrees: Vec<usize> = (1..=self.left).map(|i| self.left_degree(i)).collect();
        let mut right_degrees = vec![0; self.right];
        for (_, j) in self.edges() {
            right_degrees[j - 1] += 1;
        }
        let all = || left_degrees.iter().chain(&right_degrees).copied();
        Ok(DegreeSummary {
            min_degree: all().min().unwrap_or(0),
            max_degree: all().max().unwrap_or(0),
            left_degrees,
            right_degrees,
        })
    }

    /// `δ(G)`; zero when a part is empty.
    pub fn min_degree(&self) -> usize {
        self.degrees().map(|d| d.min_degree).unwrap_or(0)
    }

    /// Flattened vertex index: `x_i -> i - 1`, `y_j -> r + j - 1`.
    pub fn index_of(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(i) => i - 1,
            Vertex::Y(j) => self.left + j - 1,
        }
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        if index < self.left {
            Vertex::X(index + 1)
        } else {
            Vertex::Y(index - self.left + 1)
        }
    }

    /// Adjacency lists over flattened vertex indices.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order()];
        for (i, j) in self.edges() {
            let (u, v) = (i - 1, self.left + j - 1);
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Neighbourhood bit masks over flattened indices; `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > WORD {
            return None;
        }
        let mut adj = vec![0u64; self.order()];
        for (i, j) in self.edges() {
            let (u, v) = (i - 1, self.left + j - 1);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Some(adj)
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("r", &self.left)
            .field("s", &self.right)
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// Labeled equality: same part sizes and identical edge sets.
pub fn graphs_equal(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    a == b
}

#[derive(Serialize, Deserialize)]
struct Wire {
    r: usize,
    s: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for BipartiteGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            r: self.left,
            s: self.right,
            edges: self.edges().map(|(i, j)| [i, j]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BipartiteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let pairs: Vec<(usize, usize)> = wire.edges.iter().map(|e| (e[0], e[1])).collect();
        BipartiteGraph::new(wire.r, wire.s, &pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_examples() {
        let g = BipartiteGraph::new(2, 2, &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(BipartiteGraph::new(3, 3, &[]).unwrap().edge_count(), 0);
        let star = BipartiteGraph::new(1, 4, &[(1, 1), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star, BipartiteGraph::complete(1, 4));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(3, 1)]),
            Err(Error::IndexOutOfRange { i: 3, .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(0, 1)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(1, 2), (1, 2)]),
            Err(Error::DuplicateEdge { i: 1, j: 2 })
        ));
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let c = BipartiteGraph::empty(4, 5).complement();
        assert_eq!(c.edge_count(), 20);
        assert_eq!(c, BipartiteGraph::complete(4, 5));
    }

    #[test]
    fn complement_involution_small() {
        let g = BipartiteGraph::new(2, 3, &[(1, 1), (2, 3)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 4);
    }

    #[test]
    fn complement_multiword_rows() {
        let g = BipartiteGraph::new(2, 130, &[(1, 1), (2, 130), (1, 65)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 260 - 3);
        assert!(!c.has_edge(2, 130));
        assert!(c.has_edge(2, 129));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_examples() {
        let d = BipartiteGraph::complete(2, 3).degrees().unwrap();
        assert_eq!((d.min_degree, d.max_degree), (2, 3));
        let m = BipartiteGraph::new(3, 3, &[(1, 1), (2, 2), (3, 3)]).unwrap();
        let d = m.degrees().unwrap();
        assert_eq!((d.min_degree, d.max_degree), (1, 1));
        assert!(matches!(BipartiteGraph::empty(0, 3).degrees(), Err(Error::EmptyPart)));
    }

    #[test]
    fn equality_is_labeled() {
        let a = BipartiteGraph::new(2, 2, &[(1, 1), (2, 2)]).unwrap();
        let b = BipartiteGraph::new(2, 2, &[(1, 2), (2, 1)]).unwrap();
        assert!(graphs_equal(&a, &a));
        assert!(!graphs_equal(&a, &b));
        assert!(!graphs_equal(&BipartiteGraph::empty(2, 3), &BipartiteGraph::empty(3, 2)));
    }

    #[test]
    fn mask_layout_is_row_major() {
        let g = BipartiteGraph::from_mask(2, 3, 0b100_001);
        assert_eq!(g.edge_list(), vec![(1, 1), (2, 3)]);
        assert_eq!(g.to_mask(), Some(0b100_001));
    }

    #[test]
    fn json_shape() {
        let g = BipartiteGraph::new(2, 3, &[(2, 1), (1, 3)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"r":2,"s":3,"edges":[[1,3],[2,1]]}"#);
        let back: BipartiteGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<BipartiteGraph>(r#"{"r":1,"s":1,"edges":[[1,2]]}"#).is_err());
    }
}
