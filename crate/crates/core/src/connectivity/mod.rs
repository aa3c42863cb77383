//! Exact edge and vertex connectivity.
//!
//! `κ'(G)` is the minimum over sinks `t` of the unit-capacity max flow from a
//! fixed source (the first vertex in canonical order). `κ(G)` uses the
//! split-vertex network over every non-adjacent pair; graphs without such a
//! pair (only `K_{1,1}` among connected bipartite graphs) get `n - 1`.

mod brute;
pub(crate) mod flow;

use std::collections::VecDeque;

use serde::Serialize;

pub use brute::{brute_force_edge_connectivity, brute_force_vertex_connectivity, ORACLE_MAX_ORDER};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};
use flow::{FlowNetwork, INF};

/// Witness that the reported connectivity value is achievable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "set", rename_all = "snake_case")]
pub enum Certificate {
    /// The graph is disconnected; the empty set already separates it.
    AlreadyDisconnected,
    /// A minimum edge cut, as 1-based `(i, j)` pairs.
    Edges(Vec<(usize, usize)>),
    /// A minimum separating vertex set.
    Vertices(Vec<Vertex>),
    /// No separating set exists; removing these `n - 1` vertices leaves one.
    CompleteExhaustion(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    pub value: usize,
    pub certificate: Certificate,
}

impl ConnectivityResult {
    /// Whether removing the certificate disconnects `g` or leaves at most one vertex,
    /// and the certificate has exactly `value` elements.
    pub fn validates(&self, g: &BipartiteGraph) -> bool {
        match &self.certificate {
            Certificate::AlreadyDisconnected => self.value == 0 && !connected(g),
            Certificate::Edges(cut) => {
                if cut.len() != self.value {
                    return false;
                }
                let mut h = g.clone();
                for &(i, j) in cut {
                    if !g.has_edge(i, j) {
                        return false;
                    }
                    h = h.without_edge(i, j).expect("edge in range");
                }
                !connected(&h)
            }
            Certificate::Vertices(set) | Certificate::CompleteExhaustion(set) => {
                set.len() == self.value && separates(g, set)
            }
        }
    }
}

fn connected(g: &BipartiteGraph) -> bool {
    components_without(g, &vec![false; g.order()]) <= 1
}

fn separates(g: &BipartiteGraph, set: &[Vertex]) -> bool {
    let mut removed = vec![false; g.order()];
    for &v in set {
        removed[g.index_of(v)] = true;
    }
    let left = removed.iter().filter(|&&b| !b).count();
    left <= 1 || components_without(g, &removed) > 1
}

/// Number of connected components among the vertices not marked `removed`.
fn components_without(g: &BipartiteGraph, removed: &[bool]) -> usize {
    let adj = g.adjacency_lists();
    let mut seen = removed.to_vec();
    let mut count = 0;
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    count
}

/// Breadth-first reachability. A single vertex is connected.
pub fn is_connected(g: &BipartiteGraph) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(connected(g))
}

fn require_two(g: &BipartiteGraph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::TooSmall { order: g.order() });
    }
    Ok(())
}

pub fn edge_connectivity(g: &BipartiteGraph) -> Result<ConnectivityResult> {
    require_two(g)?;
    if !connected(g) {
        return Ok(ConnectivityResult {
            value: 0,
            certificate: Certificate::AlreadyDisconnected,
        });
    }
    let n = g.order();
    let mut net = FlowNetwork::new(n);
    for (i, j) in g.edges() {
        net.add_edge(i - 1, g.left_size() + j - 1, 1);
    }

    let mut best = INF;
    let mut best_side = Vec::new();
    for t in 1..n {
        net.reset();
        let f = net.max_flow(0, t, best);
        if f < best {
            best = f;
            best_side = net.residual_reach(0);
        }
    }
    let r = g.left_size();
    let cut: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(i, j)| best_side[i - 1] != best_side[r + j - 1])
        .collect();
    Ok(ConnectivityResult {
        value: best as usize,
        certificate: Certificate::Edges(cut),
    })
}

pub fn vertex_connectivity(g: &BipartiteGraph) -> Result<ConnectivityResult> {
    require_two(g)?;
    if !connected(g) {
        return Ok(ConnectivityResult {
            value: 0,
            certificate: Certificate::AlreadyDisconnected,
        });
    }
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut adjacent = vec![vec![false; n]; n];
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            adjacent[u][v] = true;
        }
    }

    // v_in = 2v, v_out = 2v + 1.
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            net.add_arc(2 * u + 1, 2 * v, INF);
        }
    }

    let mut best = INF;
    let mut best_cut = Vec::new();
    for (s, row) in adjacent.iter().enumerate() {
        for (t, &adj) in row.iter().enumerate().skip(s + 1) {
            if adj {
                continue;
            }
            net.reset();
            let f = net.max_flow(2 * s + 1, 2 * t, best);
            if f < best {
                best = f;
                let reach = net.residual_reach(2 * s + 1);
                best_cut = (0..n)
                    .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
                    .map(|v| g.vertex_at(v))
                    .collect();
            }
        }
    }

    if best == INF {
        let all_but_last = (0..n - 1).map(|v| g.vertex_at(v)).collect();
        return Ok(ConnectivityResult {
            value: n - 1,
            certificate: Certificate::CompleteExhaustion(all_but_last),
        });
    }
    Ok(ConnectivityResult {
        value: best as usize,
        certificate: Certificate::Vertices(best_cut),
    })
}

/// Which algorithm computes connectivity values inside bulk scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    MaxFlow,
    BruteForce,
}

impl Backend {
    /// Brute force up to 8 vertices, max-flow beyond.
    pub fn for_order(n: usize) -> Self {
        if n <= 8 {
            Backend::BruteForce
        } else {
            Backend::MaxFlow
        }
    }

    pub fn edge(self, g: &BipartiteGraph) -> Result<usize> {
        match self {
            Backend::MaxFlow => edge_connectivity(g).map(|c| c.value),
            Backend::BruteForce => brute_force_edge_connectivity(g),
        }
    }

    pub fn vertex(self, g: &BipartiteGraph) -> Result<usize> {
        match self {
            Backend::MaxFlow => vertex_connectivity(g).map(|c| c.value),
            Backend::BruteForce => brute_force_vertex_connectivity(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bi_cayley, CayleySubset};

    fn g(r: usize, s: usize, e: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(r, s, e).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&BipartiteGraph::complete(2, 3)).unwrap());
        assert!(!is_connected(&g(2, 2, &[(1, 1)])).unwrap());
        let c8 = bi_cayley(&CayleySubset::new(4, &[0, 1]).unwrap(), 0);
        assert!(is_connected(&c8).unwrap());
        assert!(is_connected(&BipartiteGraph::empty(1, 0)).unwrap());
        assert!(matches!(is_connected(&BipartiteGraph::empty(0, 0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn edge_connectivity_examples() {
        let k23 = BipartiteGraph::complete(2, 3);
        let res = edge_connectivity(&k23).unwrap();
        assert_eq!(res.value, 2);
        assert!(res.validates(&k23));

        let m = g(2, 2, &[(1, 1), (2, 2)]);
        let res = edge_connectivity(&m).unwrap();
        assert_eq!(res, ConnectivityResult { value: 0, certificate: Certificate::AlreadyDisconnected });

        let c8 = bi_cayley(&CayleySubset::new(4, &[0, 1]).unwrap(), 0);
        let res = edge_connectivity(&c8).unwrap();
        assert_eq!(res.value, 2);
        assert!(res.validates(&c8));

        assert!(matches!(
            edge_connectivity(&BipartiteGraph::empty(1, 0)),
            Err(Error::TooSmall { order: 1 })
        ));
    }

    #[test]
    fn vertex_connectivity_examples() {
        for (r, s, want) in [(1, 1, 1), (2, 2, 2), (2, 3, 2), (3, 3, 3), (1, 4, 1), (3, 5, 3)] {
            let k = BipartiteGraph::complete(r, s);
            let res = vertex_connectivity(&k).unwrap();
            assert_eq!(res.value, want, "K_{{{r},{s}}}");
            assert!(res.validates(&k));
        }
        let k11 = vertex_connectivity(&BipartiteGraph::complete(1, 1)).unwrap();
        assert_eq!(k11.certificate, Certificate::CompleteExhaustion(vec![Vertex::X(1)]));

        let path = g(2, 2, &[(1, 1), (2, 1), (2, 2)]);
        let res = vertex_connectivity(&path).unwrap();
        assert_eq!(res.value, 1);
        assert!(res.validates(&path));
    }

    #[test]
    fn certificates_follow_index_order() {
        // 4-cycle x1 y1 x2 y2: first non-adjacent pair is (x1, x2); cut is {y1, y2}.
        let c4 = BipartiteGraph::complete(2, 2);
        let res = vertex_connectivity(&c4).unwrap();
        assert_eq!(res.certificate, Certificate::Vertices(vec![Vertex::Y(1), Vertex::Y(2)]));
        // Star K_{1,3}: source x1, first sink y1 gives the leaf edge.
        let star = BipartiteGraph::complete(1, 3);
        let res = edge_connectivity(&star).unwrap();
        assert_eq!(res.certificate, Certificate::Edges(vec![(1, 1)]));
    }

    #[test]
    fn large_graph_uses_multiword_rows() {
        let c = bi_cayley(&CayleySubset::new(40, &[0, 1, 2]).unwrap(), 0);
        assert_eq!(c.order(), 80);
        assert_eq!(edge_connectivity(&c).unwrap().value, 3);
        assert_eq!(vertex_connectivity(&c).unwrap().value, 3);
    }
}
