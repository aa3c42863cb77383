//! Parallel scans over mask spaces.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::MaskSpace;
use crate::bounds::ParameterTriple;
use crate::connectivity::Backend;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Number of contiguous rank ranges a space is cut into. Fixed so that the
/// merge order, and hence tie-breaking, does not depend on the worker count.
const CHUNKS: u64 = 256;

/// The invariant evaluated on a graph and on its bipartite complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Minimum degree `δ`.
    Delta,
    /// Edge connectivity `κ'`.
    Edge,
    /// Vertex connectivity `κ`.
    Vertex,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Delta => "delta",
            Quantity::Edge => "edge",
            Quantity::Vertex => "vertex",
        }
    }

    pub fn of(self, g: &BipartiteGraph, backend: Backend) -> Result<usize> {
        match self {
            Quantity::Delta => Ok(g.min_degree()),
            Quantity::Edge => backend.edge(g),
            Quantity::Vertex => backend.vertex(g),
        }
    }

    /// Value on `g` and on `g^bc`.
    pub fn pair(self, g: &BipartiteGraph, backend: Backend) -> Result<(usize, usize)> {
        Ok((self.of(g, backend)?, self.of(&g.complement(), backend)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Aggregate {
    Sum,
    Product,
}

/// `sum_edge`, `prod_edge`, `sum_vertex`, `prod_vertex` (and the `delta` pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Metric {
    pub aggregate: Aggregate,
    pub quantity: Quantity,
}

impl Metric {
    pub const SUM_EDGE: Metric = Metric { aggregate: Aggregate::Sum, quantity: Quantity::Edge };
    pub const PROD_EDGE: Metric = Metric { aggregate: Aggregate::Product, quantity: Quantity::Edge };
    pub const SUM_VERTEX: Metric = Metric { aggregate: Aggregate::Sum, quantity: Quantity::Vertex };
    pub const PROD_VERTEX: Metric = Metric { aggregate: Aggregate::Product, quantity: Quantity::Vertex };

    pub fn combine(self, (a, b): (usize, usize)) -> usize {
        match self.aggregate {
            Aggregate::Sum => a + b,
            Aggregate::Product => a * b,
        }
    }

    pub fn evaluate(self, g: &BipartiteGraph) -> Result<usize> {
        let backend = Backend::for_order(g.order());
        Ok(self.combine(self.quantity.pair(g, backend)?))
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let agg = match self.aggregate {
            Aggregate::Sum => "sum",
            Aggregate::Product => "prod",
        };
        write!(f, "{agg}_{}", self.quantity.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownMetric(s.to_string());
        let (agg, q) = s.split_once('_').ok_or_else(unknown)?;
        let aggregate = match agg {
            "sum" => Aggregate::Sum,
            "prod" | "product" => Aggregate::Product,
            _ => return Err(unknown()),
        };
        let quantity = match q {
            "edge" => Quantity::Edge,
            "vertex" => Quantity::Vertex,
            "delta" => Quantity::Delta,
            _ => return Err(unknown()),
        };
        Ok(Metric { aggregate, quantity })
    }
}

/// Running minimum and maximum with the mask that first reached each.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Extremes {
    pub min: Option<(usize, u64)>,
    pub max: Option<(usize, u64)>,
}

impl Extremes {
    pub fn observe(&mut self, value: usize, mask: u64) {
        if self.min.is_none_or(|(v, _)| value < v) {
            self.min = Some((value, mask));
        }
        if self.max.is_none_or(|(v, _)| value > v) {
            self.max = Some((value, mask));
        }
    }

    /// Combine with the extremes of a later range; earlier masks win ties.
    pub fn merge(self, later: Self) -> Self {
        let pick = |a: Option<(usize, u64)>, b: Option<(usize, u64)>, better: fn(usize, usize) -> bool| match (a, b) {
            (Some(x), Some(y)) => Some(if better(y.0, x.0) { y } else { x }),
            (x, y) => x.or(y),
        };
        Self {
            min: pick(self.min, later.min, |new, old| new < old),
            max: pick(self.max, later.max, |new, old| new > old),
        }
    }
}

/// Folds every mask of `space` in parallel over fixed rank ranges, then merges
/// the partial results left to right.
pub(crate) fn fold_space<T, I, F, M>(space: &MaskSpace, init: I, step: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, u64) + Sync,
    M: Fn(T, T) -> T,
{
    let len = space.len();
    let chunks = CHUNKS.min(len.max(1));
    let parts: Vec<T> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            for mask in space.masks(len * c / chunks, len * (c + 1) / chunks) {
                step(&mut acc, mask);
            }
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub metric: String,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub graphs_checked: u64,
    pub max_value: usize,
    pub argmax: BipartiteGraph,
    pub min_value: usize,
    pub argmin: BipartiteGraph,
}

/// Extremal values of `metric` over every labeled graph on `(r, s)` with
/// exactly `m` edges. Ties go to the smallest edge mask.
pub fn extremal_scan(r: usize, s: usize, m: usize, metric: Metric) -> Result<ExtremalResult> {
    ParameterTriple::new(r, s, m)?;
    let space = MaskSpace::new(r, s, Some(m))?;
    let backend = Backend::for_order(r + s);
    let (count, ext) = fold_space(
        &space,
        || (0u64, Extremes::default()),
        |(count, ext), mask| {
            let g = space.graph(mask);
            let pair = metric.quantity.pair(&g, backend).expect("n >= 2 for valid triples");
            *count += 1;
            ext.observe(metric.combine(pair), mask);
        },
        |(c1, e1), (c2, e2)| (c1 + c2, e1.merge(e2)),
    );
    let (max_value, max_mask) = ext.max.expect("at least one graph");
    let (min_value, min_mask) = ext.min.expect("at least one graph");
    Ok(ExtremalResult {
        metric: metric.to_string(),
        r,
        s,
        m,
        graphs_checked: count,
        max_value,
        argmax: space.graph(max_mask),
        min_value,
        argmin: space.graph(min_mask),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_names() {
        for name in ["sum_edge", "prod_edge", "sum_vertex", "prod_vertex", "sum_delta"] {
            assert_eq!(name.parse::<Metric>().unwrap().to_string(), name);
        }
        assert!("max_edge".parse::<Metric>().is_err());
        assert!("sum".parse::<Metric>().is_err());
    }

    #[test]
    fn extremes_merge_prefers_earlier() {
        let mut a = Extremes::default();
        a.observe(3, 10);
        a.observe(1, 11);
        let mut b = Extremes::default();
        b.observe(3, 20);
        b.observe(1, 21);
        let m = a.merge(b);
        assert_eq!(m.max, Some((3, 10)));
        assert_eq!(m.min, Some((1, 11)));
        assert_eq!(Extremes::default().merge(b), b);
    }

    #[test]
    fn scan_small_examples() {
        let res = extremal_scan(2, 2, 2, Metric::SUM_EDGE).unwrap();
        assert_eq!((res.graphs_checked, res.max_value, res.min_value), (6, 0, 0));
        let res = extremal_scan(2, 2, 0, Metric::SUM_EDGE).unwrap();
        assert_eq!(res.max_value, 2);
        assert_eq!(Metric::SUM_EDGE.evaluate(&res.argmax).unwrap(), 2);
        assert!(matches!(extremal_scan(3, 2, 0, Metric::SUM_EDGE), Err(Error::InvalidTriple { .. })));
    }
}
