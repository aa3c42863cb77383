//! One checker per result: bound direction over every enumerated graph, plus
//! an attainment table comparing the witness constructions with the true
//! extremum.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::MaskSpace;
use super::report::{Attainment, TheoremReport, Violation, MAX_RECORDED_VIOLATIONS};
use super::scan::{fold_space, Extremes, Quantity};
use crate::bounds::{half_product, m_upper, n_upper, sum_lower_sized, ParameterTriple};
use crate::connectivity::{edge_connectivity, is_connected, vertex_connectivity, Backend};
use crate::constructions::{bi_cayley, build_witness, dispatch_witness, CayleySubset, Goal, WitnessFamilyId};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Complement of `BC(Z_r, S)` is `BC(Z_r, Z_r \ S)`.
    L2_1,
    /// Connected Bi-Cayley pairs are maximally connected.
    L2_4,
    /// Attaching a vertex with `>= k` edges keeps `k`-edge-connectivity.
    L2_5,
    /// Minimum degree sum and product.
    L3_1,
    /// Edge connectivity, no edge count fixed.
    T3_2,
    /// Vertex connectivity, no edge count fixed.
    T3_3,
    /// Edge connectivity sum with `m` edges.
    T4_1,
    /// Edge connectivity product with `m` edges.
    T4_2,
    /// Vertex connectivity sum and product with `m` edges.
    T4_3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        Self::L2_1,
        Self::L2_4,
        Self::L2_5,
        Self::L3_1,
        Self::T3_2,
        Self::T3_3,
        Self::T4_1,
        Self::T4_2,
        Self::T4_3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::L2_1 => "L2.1",
            Self::L2_4 => "L2.4",
            Self::L2_5 => "L2.5",
            Self::L3_1 => "L3.1",
            Self::T3_2 => "T3.2",
            Self::T3_3 => "T3.3",
            Self::T4_1 => "T4.1",
            Self::T4_2 => "T4.2",
            Self::T4_3 => "T4.3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', ".");
        Self::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// What a verification run covers.
///
/// For graph scans `max_n` bounds `r + s`; for the Bi-Cayley checks it bounds
/// the modulus `r`, and for the vertex-addition trials it bounds the order of
/// the random base graph. `r` and `s` pin a single part size when given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RangeSpec {
    pub max_n: usize,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for RangeSpec {
    fn default() -> Self {
        Self {
            max_n: 8,
            r: None,
            s: None,
            trials: 10_000,
            seed: 0x5eed,
        }
    }
}

impl RangeSpec {
    pub fn up_to(max_n: usize) -> Self {
        Self { max_n, ..Self::default() }
    }

    pub fn shape(r: usize, s: usize) -> Self {
        Self {
            max_n: r + s,
            r: Some(r),
            s: Some(s),
            ..Self::default()
        }
    }

    /// Shapes `(r, s)` with `1 <= r <= s` covered by the range.
    pub fn shapes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.max_n / 2 {
            for s in r..=self.max_n - r {
                out.push((r, s));
            }
        }
        if let (Some(r), Some(s)) = (self.r, self.s) {
            if r >= 1 && r <= s {
                return vec![(r, s)];
            }
            return Vec::new();
        }
        out.retain(|&(r, s)| self.r.is_none_or(|x| x == r) && self.s.is_none_or(|x| x == s));
        out
    }

    fn moduli(&self, from: usize) -> std::ops::RangeInclusive<usize> {
        match self.r {
            Some(r) => r.max(from)..=r,
            None => from..=self.max_n,
        }
    }
}

/// Runs `check_theorem` on a dedicated pool of `jobs` workers (default: all
/// cores). Results do not depend on the worker count.
pub fn check_theorem_with_jobs(id: TheoremId, range: &RangeSpec, jobs: Option<usize>) -> Result<TheoremReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| check_theorem(id, range))
}

pub fn check_theorem(id: TheoremId, range: &RangeSpec) -> Result<TheoremReport> {
    let start = Instant::now();
    let outcome = match id {
        TheoremId::L2_1 => complement_identity(range)?,
        TheoremId::L2_4 => maximal_bi_cayley(range)?,
        TheoremId::L2_5 => vertex_addition(range)?,
        TheoremId::L3_1 => unconstrained(range, Quantity::Delta)?,
        TheoremId::T3_2 => unconstrained(range, Quantity::Edge)?,
        TheoremId::T3_3 => unconstrained(range, Quantity::Vertex)?,
        TheoremId::T4_1 => sized(range, Quantity::Edge, &[Goal::SumLower, Goal::SumUpper])?,
        TheoremId::T4_2 => sized(range, Quantity::Edge, &[Goal::ProdUpper])?,
        TheoremId::T4_3 => sized(range, Quantity::Vertex, &[Goal::SumLower, Goal::SumUpper, Goal::ProdUpper])?,
    };
    Ok(TheoremReport {
        theorem: id.name().to_string(),
        range: serde_json::to_value(range)?,
        graphs_checked: outcome.checked,
        violation_count: outcome.violation_count,
        violations: outcome.violations,
        attainment: outcome.attainment,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Default)]
struct Outcome {
    checked: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    attainment: Vec<Attainment>,
}

impl Outcome {
    fn violation(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(v);
        }
    }

    fn absorb(&mut self, acc: Acc) {
        self.checked += acc.checked;
        self.violation_count += acc.violation_count;
        let room = MAX_RECORDED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(acc.violations.into_iter().take(room));
    }
}

/// Per-range accumulator for bound scans.
#[derive(Default)]
struct Acc {
    checked: u64,
    sum: Extremes,
    prod: Extremes,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Acc {
    fn merge(mut self, later: Acc) -> Acc {
        self.checked += later.checked;
        self.sum = self.sum.merge(later.sum);
        self.prod = self.prod.merge(later.prod);
        self.violation_count += later.violation_count;
        let room = MAX_RECORDED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(later.violations.into_iter().take(room));
        self
    }

    fn require(&mut self, ok: bool, make: impl FnOnce() -> Violation) {
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(make());
            }
        }
    }
}

/// Bounds checked on each graph of a scan: `lower <= a + b <= upper` and `a b <= prod`.
#[derive(Clone, Copy)]
struct Limits {
    sum_lower: Option<usize>,
    sum_upper: Option<usize>,
    prod_upper: Option<usize>,
}

fn scan_space(space: &MaskSpace, q: Quantity, limits: Limits) -> Acc {
    let backend = Backend::for_order(space.r + space.s);
    let name = q.name();
    fold_space(
        space,
        Acc::default,
        |acc, mask| {
            let g = space.graph(mask);
            let (a, b) = q.pair(&g, backend).expect("scanned shapes have n >= 2");
            let (sum, prod) = (a + b, a * b);
            acc.checked += 1;
            acc.sum.observe(sum, mask);
            acc.prod.observe(prod, mask);
            if let Some(lo) = limits.sum_lower {
                acc.require(sum >= lo, || Violation::new(&g, space.m, format!("{name}_sum >= sum_lower"), sum, lo));
            }
            if let Some(hi) = limits.sum_upper {
                acc.require(sum <= hi, || Violation::new(&g, space.m, format!("{name}_sum <= sum_upper"), sum, hi));
            }
            if let Some(hi) = limits.prod_upper {
                acc.require(prod <= hi, || Violation::new(&g, space.m, format!("{name}_prod <= prod_upper"), prod, hi));
            }
        },
        Acc::merge,
    )
}

fn witness_value(q: Quantity, goal: Goal, g: &BipartiteGraph) -> usize {
    let (a, b) = q
        .pair(g, Backend::for_order(g.order()))
        .expect("witness graphs have n >= 2");
    match goal {
        Goal::ProdUpper => a * b,
        Goal::SumLower | Goal::SumUpper => a + b,
    }
}

fn enumerated(acc: &Acc, goal: Goal) -> usize {
    let pick = match goal {
        Goal::SumLower => acc.sum.min,
        Goal::SumUpper => acc.sum.max,
        Goal::ProdUpper => acc.prod.max,
    };
    pick.expect("non-empty scan").0
}

/// Unconstrained bounds: every graph of every shape.
fn unconstrained(range: &RangeSpec, q: Quantity) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (r, s) in range.shapes() {
        let space = MaskSpace::new(r, s, None)?;
        let limits = Limits {
            sum_lower: None,
            sum_upper: Some(r),
            prod_upper: Some(half_product(r)),
        };
        let acc = scan_space(&space, q, limits);

        let s3g1 = build_witness(WitnessFamilyId::S3G1, r, s, 0).ok();
        let s3g2 = build_witness(WitnessFamilyId::S3G2, r, s, 0).ok();
        let complete = BipartiteGraph::complete(r, s);
        let cells = [
            (Goal::SumLower, 0, s3g1.as_ref().map(|w| (w.family.to_string(), &w.graph))),
            (Goal::SumUpper, r, Some(("complete".to_string(), &complete))),
            (Goal::ProdUpper, half_product(r), s3g2.as_ref().map(|w| (w.family.to_string(), &w.graph))),
        ];
        for (goal, formula, witness) in cells {
            let witness = witness.map(|(name, g)| (name, g, witness_value(q, goal, g)));
            out.attainment.push(Attainment::new(
                r,
                s,
                None,
                goal.name(),
                q.name(),
                enumerated(&acc, goal),
                formula,
                witness,
            ));
        }
        out.absorb(acc);
    }
    Ok(out)
}

/// Sized bounds: graphs with exactly `m` edges, `m <= floor(rs/2)`.
fn sized(range: &RangeSpec, q: Quantity, goals: &[Goal]) -> Result<Outcome> {
    let mut out = Outcome::default();
    let has = |g: Goal| goals.contains(&g);
    for (r, s) in range.shapes() {
        for m in 0..=r * s / 2 {
            let p = ParameterTriple::new(r, s, m)?;
            let space = MaskSpace::new(r, s, Some(m))?;
            let limits = Limits {
                sum_lower: has(Goal::SumLower).then(|| sum_lower_sized(&p)),
                sum_upper: has(Goal::SumUpper).then(|| n_upper(&p)),
                prod_upper: has(Goal::ProdUpper).then(|| m_upper(&p)),
            };
            let acc = scan_space(&space, q, limits);
            for &goal in goals {
                let formula = match goal {
                    Goal::SumLower => sum_lower_sized(&p),
                    Goal::SumUpper => n_upper(&p),
                    Goal::ProdUpper => m_upper(&p),
                };
                let witness = match dispatch_witness(goal, r, s, m) {
                    Ok(w) => Some(w),
                    Err(Error::NoWitness { .. }) => None,
                    Err(e) => return Err(e),
                };
                let witness = witness
                    .as_ref()
                    .map(|w| (w.family.to_string(), &w.graph, witness_value(q, goal, &w.graph)));
                out.attainment.push(Attainment::new(
                    r,
                    s,
                    Some(m),
                    goal.name(),
                    q.name(),
                    enumerated(&acc, goal),
                    formula,
                    witness,
                ));
            }
            out.absorb(acc);
        }
    }
    Ok(out)
}

const MAX_MODULUS_IDENTITY: usize = 20;
const MAX_MODULUS_CONNECTIVITY: usize = 12;

fn too_large_modulus(max: usize, cap: usize) -> Error {
    Error::TooLarge {
        what: "modulus range",
        detail: format!("r up to {max} means 2^{max} subsets; limit is {cap}"),
    }
}

/// `BC(Z_r, S)^bc == BC(Z_r, Z_r \ S)` as a labeled identity for every subset of every `Z_r`.
fn complement_identity(range: &RangeSpec) -> Result<Outcome> {
    let moduli = range.moduli(1);
    if *moduli.end() > MAX_MODULUS_IDENTITY {
        return Err(too_large_modulus(*moduli.end(), MAX_MODULUS_IDENTITY));
    }
    let mut out = Outcome::default();
    for r in moduli {
        let mismatches: Vec<Violation> = (0..1u64 << r)
            .into_par_iter()
            .filter_map(|bits| {
                let set = CayleySubset::from_bits(r, bits).expect("bits below r");
                let lhs = bi_cayley(&set, 0).complement();
                let rhs = bi_cayley(&set.complement(), 0);
                (lhs != rhs).then(|| {
                    let differing = lhs.edges().filter(|&(i, j)| !rhs.has_edge(i, j)).count()
                        + rhs.edges().filter(|&(i, j)| !lhs.has_edge(i, j)).count();
                    Violation::new(&bi_cayley(&set, 0), None, "complement == BC(Z_r, Z_r \\ S)", differing, 0)
                })
            })
            .collect();
        out.checked += 1 << r;
        for v in mismatches {
            out.violation(v);
        }
    }
    Ok(out)
}

/// When `BC(Z_r, S)` and its complement are both connected, both
/// have `κ = κ' = δ`, equal to `|S|` and `r - |S|`.
fn maximal_bi_cayley(range: &RangeSpec) -> Result<Outcome> {
    let moduli = range.moduli(2);
    if *moduli.end() > MAX_MODULUS_CONNECTIVITY {
        return Err(too_large_modulus(*moduli.end(), MAX_MODULUS_CONNECTIVITY));
    }
    let mut out = Outcome::default();
    for r in moduli {
        let per_subset: Vec<(bool, Vec<Violation>)> = (0..1u64 << r)
            .into_par_iter()
            .map(|bits| {
                let set = CayleySubset::from_bits(r, bits).expect("bits below r");
                let g = bi_cayley(&set, 0);
                let h = g.complement();
                let both = is_connected(&g).unwrap_or(false) && is_connected(&h).unwrap_or(false);
                let mut found = Vec::new();
                if both {
                    for (graph, want, label) in [(&g, set.len(), "G"), (&h, r - set.len(), "G^bc")] {
                        let values = [
                            ("kappa", vertex_connectivity(graph).expect("n >= 2").value),
                            ("kappa'", edge_connectivity(graph).expect("n >= 2").value),
                            ("delta", graph.min_degree()),
                        ];
                        for (what, got) in values {
                            if got != want {
                                found.push(Violation::new(&g, None, format!("{what}({label}) == |S|-degree"), got, want));
                            }
                        }
                    }
                }
                (both, found)
            })
            .collect();
        for (both, found) in per_subset {
            out.checked += u64::from(both);
            for v in found {
                out.violation(v);
            }
        }
    }
    Ok(out)
}

/// A connected random graph with `2 <= r + s <= max_n`.
fn random_connected(rng: &mut ChaCha8Rng, max_n: usize) -> BipartiteGraph {
    loop {
        let r = rng.gen_range(1..max_n);
        let s = rng.gen_range(1..=max_n - r);
        let density: f64 = rng.gen_range(0.3..0.95);
        let edges: Vec<(usize, usize)> = (1..=r)
            .flat_map(|i| (1..=s).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        let g = BipartiteGraph::new(r, s, &edges).expect("distinct in-range edges");
        if is_connected(&g).unwrap_or(false) {
            return g;
        }
    }
}

/// `g` plus one new right vertex joined to `attach` (left indices).
fn attach_right(g: &BipartiteGraph, attach: &[usize]) -> BipartiteGraph {
    let j = g.right_size() + 1;
    attach
        .iter()
        .fold(g.with_extra_right(1), |h, &i| h.with_edge(i, j).expect("in range"))
}

/// Random instances: for connected `G` with `κ'(G) = k`, adding a
/// vertex with at least `k` edges into `G` keeps `κ' >= k`.
fn vertex_addition(range: &RangeSpec) -> Result<Outcome> {
    if range.max_n < 2 {
        return Err(Error::TooSmall { order: range.max_n });
    }
    let max_n = range.max_n;
    let results: Vec<Option<Violation>> = (0..range.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(range.seed);
            rng.set_stream(trial);
            let g = random_connected(&mut rng, max_n);
            let k = edge_connectivity(&g).expect("n >= 2").value;
            // Joining the new vertex to the left part, or (via transpose) to the right part.
            let on_right = rng.gen_bool(0.5);
            let base = if on_right { g.clone() } else { g.transpose() };
            let side = base.left_size();
            let count = rng.gen_range(k..=side);
            let mut targets: Vec<usize> = sample(&mut rng, side, count).into_iter().map(|i| i + 1).collect();
            targets.sort_unstable();
            let grown = attach_right(&base, &targets);
            let grown = if on_right { grown } else { grown.transpose() };
            let got = edge_connectivity(&grown).expect("n >= 3").value;
            (got < k).then(|| Violation::new(&grown, None, "kappa'(G + v) >= kappa'(G)", got, k))
        })
        .collect();
    let mut out = Outcome {
        checked: range.trials as u64,
        ..Outcome::default()
    };
    for v in results.into_iter().flatten() {
        out.violation(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("t4_1".parse::<TheoremId>().unwrap(), TheoremId::T4_1);
        assert!(matches!("T9.9".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn shapes_respect_filters() {
        assert_eq!(RangeSpec::up_to(4).shapes(), vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        assert_eq!(RangeSpec::shape(2, 2).shapes(), vec![(2, 2)]);
        assert!(RangeSpec::shape(3, 2).shapes().is_empty());
        let only_r2 = RangeSpec { r: Some(2), ..RangeSpec::up_to(6) };
        assert_eq!(only_r2.shapes(), vec![(2, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn degenerate_cell_is_recorded_not_violated() {
        let report = check_theorem(TheoremId::T4_1, &RangeSpec::shape(2, 2)).unwrap();
        assert_eq!(report.violation_count, 0);
        assert_eq!(report.graphs_checked, 1 + 4 + 6);
        let cell = report
            .attainment
            .iter()
            .find(|a| a.m == Some(2) && a.goal == "sum_upper")
            .unwrap();
        assert_eq!((cell.enumerated, cell.formula, cell.attained), (0, 1, false));
        assert!(cell.witness.is_none());
    }

    #[test]
    fn modulus_caps() {
        assert!(matches!(
            check_theorem(TheoremId::L2_4, &RangeSpec::up_to(13)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn vertex_addition_is_deterministic() {
        let range = RangeSpec { trials: 200, ..RangeSpec::up_to(7) };
        let a = check_theorem_with_jobs(TheoremId::L2_5, &range, Some(1)).unwrap();
        let b = check_theorem_with_jobs(TheoremId::L2_5, &range, Some(3)).unwrap();
        assert_eq!(a.violations, b.violations);
        assert_eq!((a.graphs_checked, a.violation_count), (200, 0));
    }
}
