//! Exhaustive subset-enumeration oracles for `κ'` and `κ`.
//!
//! These work straight from the definitions and share no code with the
//! max-flow path, so they can be used to cross-check it.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Largest order the oracles accept (cost is `2^n`).
pub const ORACLE_MAX_ORDER: usize = 16;

fn masks(g: &BipartiteGraph) -> Result<Vec<u64>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "oracle input",
            detail: format!("n = {n} exceeds {ORACLE_MAX_ORDER} (2^n subsets)"),
        });
    }
    if n < 2 {
        return Err(Error::TooSmall { order: n });
    }
    Ok(g.adjacency_masks().expect("n <= 16"))
}

/// Whether the subgraph induced on `within` is connected (empty counts as connected).
pub(crate) fn induced_connected(adj: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let start = within & within.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == within
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Minimum number of crossing edges over all cuts `(A, V \ A)`; 0 if disconnected.
pub fn brute_force_edge_connectivity(g: &BipartiteGraph) -> Result<usize> {
    let adj = masks(g)?;
    let n = g.order();
    let all = full(n);
    if !induced_connected(&adj, all) {
        return Ok(0);
    }
    // Fix vertex 0 inside A; A ranges over the 2^(n-1) - 1 proper supersets of {0}.
    let mut best = usize::MAX;
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let side = (rest << 1) | 1;
        let mut cut = 0usize;
        let mut it = side;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            cut += (adj[v] & all & !side).count_ones() as usize;
        }
        best = best.min(cut);
    }
    Ok(best)
}

/// Minimum `|S|` such that `G - S` is disconnected or has at most one vertex.
pub fn brute_force_vertex_connectivity(g: &BipartiteGraph) -> Result<usize> {
    let adj = masks(g)?;
    let n = g.order();
    let all = full(n);
    let mut best = n - 1;
    for removed in 0..=all {
        let size = removed.count_ones() as usize;
        if size >= best {
            continue;
        }
        let left = all & !removed;
        if !induced_connected(&adj, left) {
            best = size;
        }
    }
    Ok(best)
}
