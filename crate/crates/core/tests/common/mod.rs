// Shared by several test targets; not every target uses every helper.
#![allow(dead_code)]

use bicomp::BipartiteGraph;
use proptest::prelude::*;

/// Random graph with `r, s <= max_side` and a random edge density.
pub fn graph(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side, 0u8..=100).prop_flat_map(|(r, s, density)| {
        proptest::collection::vec(0u8..100, r * s).prop_map(move |draws| {
            let edges: Vec<(usize, usize)> = draws
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d < density)
                .map(|(k, _)| (k / s + 1, k % s + 1))
                .collect();
            BipartiteGraph::new(r, s, &edges).unwrap()
        })
    })
}

/// As `graph`, but with at least two vertices.
pub fn graph_n2(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    graph(max_side).prop_filter("n >= 2", |g| g.order() >= 2)
}
