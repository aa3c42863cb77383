use serde::Serialize;

use crate::graph::BipartiteGraph;

/// Reports keep at most this many violation records; the full count is
/// always kept in `violation_count`.
pub const MAX_RECORDED_VIOLATIONS: usize = 1000;

fn edge_pairs(g: &BipartiteGraph) -> Vec<[usize; 2]> {
    g.edges().map(|(i, j)| [i, j]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub r: usize,
    pub s: usize,
    pub m: Option<usize>,
    pub edges: Vec<[usize; 2]>,
    /// What was compared, e.g. `edge_sum <= upper`.
    pub quantity: String,
    pub observed: usize,
    pub bound: usize,
}

impl Violation {
    pub fn new(g: &BipartiteGraph, m: Option<usize>, quantity: impl Into<String>, observed: usize, bound: usize) -> Self {
        Self {
            r: g.left_size(),
            s: g.right_size(),
            m,
            edges: edge_pairs(g),
            quantity: quantity.into(),
            observed,
            bound,
        }
    }
}

/// One cell of an attainment audit: does the witness construction reach the
/// formula, and what is the true extremum over all labeled graphs?
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attainment {
    pub r: usize,
    pub s: usize,
    pub m: Option<usize>,
    pub goal: String,
    pub quantity: String,
    /// Extremal value over every enumerated graph.
    pub enumerated: usize,
    pub formula: usize,
    /// The witness exists and its value equals `formula`.
    pub attained: bool,
    pub family: Option<String>,
    pub witness_value: Option<usize>,
    pub witness: Option<Vec<[usize; 2]>>,
}

impl Attainment {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        r: usize,
        s: usize,
        m: Option<usize>,
        goal: &str,
        quantity: &str,
        enumerated: usize,
        formula: usize,
        witness: Option<(String, &BipartiteGraph, usize)>,
    ) -> Self {
        let attained = witness.as_ref().is_some_and(|w| w.2 == formula);
        let (family, witness_value, witness) = match witness {
            Some((name, g, v)) => (Some(name), Some(v), Some(edge_pairs(g))),
            None => (None, None, None),
        };
        Self {
            r,
            s,
            m,
            goal: goal.to_string(),
            quantity: quantity.to_string(),
            enumerated,
            formula,
            attained,
            family,
            witness_value,
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub range: serde_json::Value,
    pub graphs_checked: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub attainment: Vec<Attainment>,
    pub wall_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// 0 when no violations were found, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Cells where no witness reaches the formula value.
    pub fn not_attained(&self) -> impl Iterator<Item = &Attainment> {
        self.attainment.iter().filter(|a| !a.attained)
    }
}
