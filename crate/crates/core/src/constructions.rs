//! Bi-Cayley graphs over `Z_r` and the extremal witness families.
//!
//! Canonical labeling for `BC(Z_r, S)`: `x_{g+1} = (g, 0)` and
//! `y_{g+1} = (g, 1)`, with edge `x_{g+1} y_{((s+g) mod r)+1}` for every
//! `g` in `Z_r` and `s` in `S`. Appended right vertices `y_{r+1}, ..`
//! come after the group elements.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::ParameterTriple;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// A subset `S` of `Z_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleySubset {
    modulus: usize,
    members: BTreeSet<usize>,
}

impl CayleySubset {
    pub fn new(modulus: usize, members: &[usize]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&member) = members.iter().find(|&&x| x >= modulus) {
            return Err(Error::BadSubset { member, modulus });
        }
        Ok(Self {
            modulus,
            members: members.iter().copied().collect(),
        })
    }

    /// `{0, 1, .., len - 1}`.
    pub fn interval(modulus: usize, len: usize) -> Result<Self> {
        Self::new(modulus, &(0..len).collect::<Vec<_>>())
    }

    /// The subset whose members are the set bits of `bits`.
    pub fn from_bits(modulus: usize, bits: u64) -> Result<Self> {
        let members: Vec<usize> = (0..64).filter(|&b| bits >> b & 1 == 1).collect();
        Self::new(modulus, &members)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `Z_r \ S`.
    pub fn complement(&self) -> Self {
        Self {
            modulus: self.modulus,
            members: (0..self.modulus).filter(|x| !self.members.contains(x)).collect(),
        }
    }
}

fn bi_cayley_edges(spec: &CayleySubset) -> Vec<(usize, usize)> {
    let r = spec.modulus;
    (0..r)
        .flat_map(|g| spec.members().map(move |s| (g + 1, (s + g) % r + 1)))
        .collect()
}

/// `BC(Z_r, S)` with `extra_right` isolated vertices appended to `Y`.
pub fn bi_cayley(spec: &CayleySubset, extra_right: usize) -> BipartiteGraph {
    let r = spec.modulus;
    BipartiteGraph::new(r, r + extra_right, &bi_cayley_edges(spec)).expect("Bi-Cayley edges are distinct and in range")
}

/// Attachment of `y_{r+k}`, `k = 1..=extra`, to `d` left vertices each, walking
/// `x_1, x_2, ..` cyclically so consecutive vertices continue where the last stopped.
fn round_robin(r: usize, extra: usize, d: usize) -> Vec<(usize, usize)> {
    (1..=extra)
        .flat_map(|k| (0..d).map(move |t| (((k - 1) * d + t) % r + 1, r + k)))
        .collect()
}

/// `BC(Z_r, {0..d-1})` on an `(r, s)` vertex set, each appended `y` joined to
/// `d` left vertices in round-robin order.
fn bi_cayley_padded(r: usize, s: usize, d: usize) -> Vec<(usize, usize)> {
    let mut edges = bi_cayley_edges(&CayleySubset::interval(r, d).expect("d <= r"));
    edges.extend(round_robin(r, s - r, d));
    edges
}

/// The named extremal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WitnessFamilyId {
    #[serde(rename = "s3-g1")]
    S3G1,
    #[serde(rename = "s3-g2")]
    S3G2,
    #[serde(rename = "s4-g1")]
    S4G1,
    #[serde(rename = "s4-g2")]
    S4G2,
    #[serde(rename = "s4-g3")]
    S4G3,
    #[serde(rename = "s4-g4")]
    S4G4,
    #[serde(rename = "s4-g5")]
    S4G5,
    #[serde(rename = "s4-g6")]
    S4G6,
    #[serde(rename = "s4-g7")]
    S4G7,
}

impl WitnessFamilyId {
    pub const ALL: [WitnessFamilyId; 9] = [
        Self::S3G1,
        Self::S3G2,
        Self::S4G1,
        Self::S4G2,
        Self::S4G3,
        Self::S4G4,
        Self::S4G5,
        Self::S4G6,
        Self::S4G7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::S3G1 => "s3-g1",
            Self::S3G2 => "s3-g2",
            Self::S4G1 => "s4-g1",
            Self::S4G2 => "s4-g2",
            Self::S4G3 => "s4-g3",
            Self::S4G4 => "s4-g4",
            Self::S4G5 => "s4-g5",
            Self::S4G6 => "s4-g6",
            Self::S4G7 => "s4-g7",
        }
    }

    /// Whether the family's edge count is the parameter `m`.
    pub fn is_sized(self) -> bool {
        !matches!(self, Self::S3G1 | Self::S3G2)
    }

    /// The `(κ'(G), κ'(G^bc))` pair the construction is meant to realise.
    /// The vertex-connectivity pair is the same.
    pub fn claimed_pair(self, r: usize, s: usize, m: usize) -> (usize, usize) {
        let d = m.checked_div(s).unwrap_or(0);
        match self {
            Self::S3G1 | Self::S4G2 => (0, 0),
            Self::S3G2 => (r / 2, r.div_ceil(2)),
            Self::S4G1 => (0, r - m),
            Self::S4G3 => (0, r - 1),
            Self::S4G4 => (0, r - 2),
            Self::S4G5 => (1, r - 2),
            Self::S4G6 => (d, r - d),
            Self::S4G7 => (d, r - d - 1),
        }
    }
}

impl fmt::Display for WitnessFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessFamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s) || f.name().replace('-', "_").eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A built witness graph, with notes on any reading of the construction that
/// is not literal.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub family: WitnessFamilyId,
    pub graph: BipartiteGraph,
    pub notes: Vec<&'static str>,
}

const NOTE_G3_PARTIAL: &str = "m < r: partial matching x_i y_i (i <= m) used so the graph has m edges";
const NOTE_G7_ROTATED: &str = "the l extra edges extend y_1, y_2, .. in turn (each y_{g+1} gains x_{((g-d) mod r)+1}, \
                               appended y's gain their next round-robin neighbour) instead of all meeting x_1";

struct Check {
    family: WitnessFamilyId,
    r: usize,
    s: usize,
    m: usize,
}

impl Check {
    fn require(&self, ok: bool, condition: &'static str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::PreconditionViolated {
                family: self.family.name(),
                condition,
                r: self.r,
                s: self.s,
                m: self.m,
            })
        }
    }
}

/// Builds witness `family` on parts of size `r <= s`. `m` is ignored by the
/// two unconstrained families.
pub fn build_witness(family: WitnessFamilyId, r: usize, s: usize, m: usize) -> Result<Witness> {
    use WitnessFamilyId::*;
    let c = Check { family, r, s, m };
    c.require(r >= 1, "r >= 1")?;
    c.require(r <= s, "r <= s")?;
    let n = r + s;
    if family.is_sized() {
        c.require(m <= r * s / 2, "m <= floor(rs/2)")?;
    }
    let mut notes = Vec::new();
    let edges: Vec<(usize, usize)> = match family {
        S3G1 => {
            c.require(n >= 3, "n >= 3")?;
            (1..=r).map(|i| (i, 1)).collect()
        }
        S3G2 => {
            c.require(r >= 4, "r >= 4")?;
            bi_cayley_padded(r, s, r / 2)
        }
        S4G1 => {
            c.require(m < r, "m < r")?;
            (1..=m).map(|i| (i, 1)).collect()
        }
        S4G2 => {
            c.require(m >= r, "m >= r")?;
            let mut edges: Vec<(usize, usize)> = (1..=r).map(|i| (i, 1)).collect();
            let fill = (3..=s).flat_map(|j| (1..=r).map(move |i| (i, j)));
            edges.extend(fill.take(m - r));
            edges
        }
        S4G3 => {
            c.require((1..=s).contains(&m), "1 <= m <= s")?;
            // With r = 2 and m = s the complement has s < n - 1 edges.
            c.require(!(r == 2 && m == s), "not (r = 2 and m = s)")?;
            if m < r {
                notes.push(NOTE_G3_PARTIAL);
                (1..=m).map(|i| (i, i)).collect()
            } else {
                (1..=r).map(|i| (i, i)).chain((r + 1..=m).map(|j| (1, j))).collect()
            }
        }
        S4G4 => {
            c.require(s < m && m + 2 <= n, "s + 1 <= m <= n - 2")?;
            (1..=r)
                .map(|i| (i, i))
                .chain((1..=m - s).map(|i| (i, i + 1)))
                .chain((r + 1..=s).map(|j| (1, j)))
                .collect()
        }
        S4G5 => {
            c.require(m + 1 == n, "m = n - 1")?;
            c.require(r >= 2, "r >= 2")?;
            (1..=r)
                .map(|i| (i, i))
                .chain((1..r).map(|i| (i, i + 1)))
                .chain((r + 1..=s).map(|j| (r, j)))
                .collect()
        }
        S4G6 => {
            c.require(m.is_multiple_of(s), "m = 0 (mod s)")?;
            c.require(m >= n, "m >= n")?;
            bi_cayley_padded(r, s, m / s)
        }
        S4G7 => {
            c.require(!m.is_multiple_of(s), "m != 0 (mod s)")?;
            c.require(m >= n, "m >= n")?;
            let (d, l) = (m / s, m % s);
            let mut edges = bi_cayley_padded(r, s, d);
            let core = (0..r).map(|g| ((g + r - d) % r + 1, g + 1));
            let appended = (1..=s - r).map(|k| ((k * d) % r + 1, r + k));
            edges.extend(core.chain(appended).take(l));
            notes.push(NOTE_G7_ROTATED);
            edges
        }
    };
    let graph = BipartiteGraph::new(r, s, &edges).expect("witness edge sets are valid by construction");
    if family.is_sized() {
        debug_assert_eq!(graph.edge_count(), m);
    }
    Ok(Witness { family, graph, notes })
}

/// Which extremal value a witness should realise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Goal {
    SumLower,
    SumUpper,
    ProdUpper,
}

impl Goal {
    pub fn name(self) -> &'static str {
        match self {
            Goal::SumLower => "sum_lower",
            Goal::SumUpper => "sum_upper",
            Goal::ProdUpper => "prod_upper",
        }
    }
}

fn family_for(goal: Goal, p: &ParameterTriple) -> Option<WitnessFamilyId> {
    use WitnessFamilyId::*;
    let (r, s, m, n) = (p.r(), p.s(), p.m(), p.n());
    let sum_lower = if m < r { S4G1 } else { S4G2 };
    let tail = |m: usize| {
        if m + 1 == n {
            (r >= 2).then_some(S4G5)
        } else if m.is_multiple_of(s) {
            Some(S4G6)
        } else {
            Some(S4G7)
        }
    };
    match goal {
        Goal::SumLower => Some(sum_lower),
        Goal::SumUpper => match m {
            0 => Some(S4G1),
            m if m <= s => Some(S4G3),
            m if m + 2 <= n => Some(S4G4),
            m => tail(m),
        },
        // Every graph with m <= n - 2 edges is disconnected, so any m-edge graph works.
        Goal::ProdUpper if m + 2 <= n => Some(sum_lower),
        Goal::ProdUpper => tail(m),
    }
}

/// Picks and builds the construction used for `goal` at `(r, s, m)`.
pub fn dispatch_witness(goal: Goal, r: usize, s: usize, m: usize) -> Result<Witness> {
    let p = ParameterTriple::new(r, s, m)?;
    let no_witness = || Error::NoWitness { goal: goal.name(), r, s, m };
    let family = family_for(goal, &p).ok_or_else(no_witness)?;
    build_witness(family, r, s, m).map_err(|e| match e {
        Error::PreconditionViolated { .. } => no_witness(),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{brute_force_edge_connectivity, edge_connectivity};

    fn kappa_pair(g: &BipartiteGraph) -> (usize, usize) {
        (
            edge_connectivity(g).unwrap().value,
            edge_connectivity(&g.complement()).unwrap().value,
        )
    }

    #[test]
    fn bi_cayley_examples() {
        let m3 = bi_cayley(&CayleySubset::new(3, &[0]).unwrap(), 0);
        assert_eq!(m3.edge_list(), vec![(1, 1), (2, 2), (3, 3)]);

        // Incidence rule for r = 4, S = {0, 1}: x_{g+1} ~ y_{g+1}, y_{g+2 mod 4}.
        let c8 = bi_cayley(&CayleySubset::new(4, &[0, 1]).unwrap(), 0);
        assert_eq!(
            c8.edge_list(),
            vec![(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (4, 1), (4, 4)]
        );
        let deg = c8.degrees().unwrap();
        assert_eq!((deg.min_degree, deg.max_degree), (2, 2));

        let padded = bi_cayley(&CayleySubset::new(3, &[1]).unwrap(), 2);
        assert_eq!((padded.left_size(), padded.right_size(), padded.edge_count()), (3, 5, 3));
    }

    #[test]
    fn subset_errors() {
        assert!(matches!(CayleySubset::new(3, &[3]), Err(Error::BadSubset { member: 3, modulus: 3 })));
        assert!(matches!(CayleySubset::new(0, &[]), Err(Error::ZeroModulus)));
        assert_eq!(CayleySubset::new(4, &[1, 1, 2]).unwrap().len(), 2);
    }

    #[test]
    fn complement_of_bi_cayley_is_bi_cayley() {
        let m3 = bi_cayley(&CayleySubset::new(3, &[0]).unwrap(), 0);
        let c6 = bi_cayley(&CayleySubset::new(3, &[1, 2]).unwrap(), 0);
        assert_eq!(m3.complement(), c6);
        let a = bi_cayley(&CayleySubset::new(5, &[0, 2]).unwrap(), 0);
        let b = bi_cayley(&CayleySubset::new(5, &[1, 3, 4]).unwrap(), 0);
        assert_eq!(a.complement(), b);
    }

    #[test]
    fn witness_examples() {
        let g1 = build_witness(WitnessFamilyId::S4G1, 5, 5, 2).unwrap();
        assert_eq!(g1.graph.edge_list(), vec![(1, 1), (2, 1)]);
        assert_eq!(kappa_pair(&g1.graph), (0, 3));

        let g5 = build_witness(WitnessFamilyId::S4G5, 3, 4, 6).unwrap();
        assert_eq!(kappa_pair(&g5.graph), (1, 1));

        let g6 = build_witness(WitnessFamilyId::S4G6, 4, 5, 10).unwrap();
        assert_eq!(g6.graph.edge_count(), 10);
        assert_eq!(kappa_pair(&g6.graph), (2, 2));
        assert_eq!(brute_force_edge_connectivity(&g6.graph).unwrap(), 2);
    }

    #[test]
    fn g6_round_robin_layout() {
        // d = 2, appended y5 takes x1, x2.
        let g6 = build_witness(WitnessFamilyId::S4G6, 4, 5, 10).unwrap();
        assert!(g6.graph.has_edge(1, 5) && g6.graph.has_edge(2, 5));
        assert_eq!(g6.graph.right_degree(5), 2);
    }

    #[test]
    fn g7_extends_columns_in_order() {
        // (5, 5, 11): d = 2, l = 1. y1 = (0,1) gains x_{(0-2 mod 5)+1} = x4.
        let w = build_witness(WitnessFamilyId::S4G7, 5, 5, 11).unwrap();
        let base = build_witness(WitnessFamilyId::S4G6, 5, 5, 10).unwrap();
        assert_eq!(w.graph.without_edge(4, 1).unwrap(), base.graph);
        assert_eq!(kappa_pair(&w.graph), (2, 2));
        assert!(build_witness(WitnessFamilyId::S4G7, 4, 5, 11).is_err());
        assert_eq!(w.notes, vec![NOTE_G7_ROTATED]);
    }

    #[test]
    fn precondition_errors() {
        use WitnessFamilyId::*;
        for (f, r, s, m) in [
            (S3G1, 1, 1, 0),
            (S3G2, 3, 5, 0),
            (S4G1, 3, 4, 3),
            (S4G2, 3, 4, 2),
            (S4G3, 3, 4, 5),
            (S4G3, 2, 3, 3),
            (S4G4, 3, 4, 4),
            (S4G5, 3, 4, 5),
            (S4G6, 3, 4, 5),
            (S4G7, 4, 5, 10),
            (S4G1, 4, 3, 0),
            (S4G1, 2, 2, 3),
        ] {
            let err = build_witness(f, r, s, m).unwrap_err();
            assert!(matches!(err, Error::PreconditionViolated { .. }), "{f} {r} {s} {m}: {err}");
        }
    }

    #[test]
    fn partial_matching_for_small_m() {
        let w = build_witness(WitnessFamilyId::S4G3, 4, 5, 2).unwrap();
        assert_eq!(w.graph.edge_list(), vec![(1, 1), (2, 2)]);
        assert_eq!(w.notes, vec![NOTE_G3_PARTIAL]);
        assert_eq!(kappa_pair(&w.graph), (0, 3));
    }

    #[test]
    fn dispatch_examples() {
        let w = dispatch_witness(Goal::SumUpper, 4, 5, 10).unwrap();
        assert_eq!(w.family, WitnessFamilyId::S4G6);
        let (a, b) = kappa_pair(&w.graph);
        assert_eq!(a + b, 4);

        let w = dispatch_witness(Goal::SumUpper, 4, 5, 0).unwrap();
        assert_eq!(w.graph, BipartiteGraph::empty(4, 5));
        let (a, b) = kappa_pair(&w.graph);
        assert_eq!(a + b, 4);

        let w = dispatch_witness(Goal::SumLower, 5, 5, 3).unwrap();
        assert_eq!(w.family, WitnessFamilyId::S4G1);
        let (a, b) = kappa_pair(&w.graph);
        assert_eq!(a + b, 2);

        assert_eq!(dispatch_witness(Goal::SumUpper, 4, 5, 7).unwrap().family, WitnessFamilyId::S4G4);
        assert_eq!(dispatch_witness(Goal::ProdUpper, 3, 4, 6).unwrap().family, WitnessFamilyId::S4G5);
        assert_eq!(dispatch_witness(Goal::ProdUpper, 5, 5, 11).unwrap().family, WitnessFamilyId::S4G7);
        assert_eq!(dispatch_witness(Goal::SumUpper, 3, 4, 2).unwrap().family, WitnessFamilyId::S4G3);
    }

    #[test]
    fn dispatch_reports_missing_witness() {
        assert!(matches!(
            dispatch_witness(Goal::SumUpper, 2, 2, 2),
            Err(Error::NoWitness { goal: "sum_upper", .. })
        ));
        assert!(matches!(dispatch_witness(Goal::SumUpper, 2, 2, 3), Err(Error::InvalidTriple { .. })));
    }

    #[test]
    fn family_names_round_trip() {
        for f in WitnessFamilyId::ALL {
            assert_eq!(f.name().parse::<WitnessFamilyId>().unwrap(), f);
        }
        assert_eq!("S4_G7".parse::<WitnessFamilyId>().unwrap(), WitnessFamilyId::S4G7);
        assert!("s5-g1".parse::<WitnessFamilyId>().is_err());
    }
}
