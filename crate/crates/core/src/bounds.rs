//! Closed-form Nordhaus-Gaddum bounds for bipartite complements.
//!
//! Unconstrained bounds depend only on the smaller part size `r`. Sized
//! bounds fix the edge count `m` as well and are only stated for
//! `1 <= r <= s` and `m <= floor(rs / 2)`; both the edge and the vertex
//! connectivity variants share the same formulas.

use serde::Serialize;

use crate::error::{Error, Result};

/// `(r, s, m)` with `1 <= r <= s` and `0 <= m <= floor(rs / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ParameterTriple {
    r: usize,
    s: usize,
    m: usize,
}

impl ParameterTriple {
    pub fn new(r: usize, s: usize, m: usize) -> Result<Self> {
        let reason = if r == 0 {
            "r must be at least 1"
        } else if r > s {
            "r must not exceed s"
        } else if m > r * s / 2 {
            "m must not exceed floor(rs/2)"
        } else {
            return Ok(Self { r, s, m });
        };
        Err(Error::InvalidTriple { r, s, m, reason })
    }

    /// Skips the `m <= floor(rs/2)` restriction (still needs `1 <= r <= s`
    /// and `m <= rs`). The formulas are only claimed inside the domain; this
    /// exists to evaluate them outside it.
    pub fn unrestricted(r: usize, s: usize, m: usize) -> Result<Self> {
        match Self::new(r, s, m) {
            Err(Error::InvalidTriple { .. }) if r >= 1 && r <= s && m <= r * s => Ok(Self { r, s, m }),
            other => other,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.r + self.s
    }

    /// `floor(m / s)`.
    pub fn d(&self) -> usize {
        self.m / self.s
    }

    /// `m mod s`.
    pub fn l(&self) -> usize {
        self.m % self.s
    }

    /// Every valid triple with `r <= s` and `r + s <= max_n`, in `(r, s, m)` order.
    pub fn all_up_to(max_n: usize) -> impl Iterator<Item = ParameterTriple> {
        (1..=max_n / 2).flat_map(move |r| {
            (r..=max_n - r).flat_map(move |s| (0..=r * s / 2).map(move |m| ParameterTriple { r, s, m }))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub sum_lower: usize,
    pub sum_upper: usize,
    pub prod_lower: usize,
    pub prod_upper: usize,
}

/// `ceil(r/2) * floor(r/2)`, the largest `a * b` with `a + b <= r`.
pub fn half_product(r: usize) -> usize {
    r.div_ceil(2) * (r / 2)
}

/// Bounds on `δ(G) + δ(G^bc)` and `δ(G) δ(G^bc)`.
pub fn delta_bounds(r: usize) -> BoundSet {
    BoundSet {
        sum_lower: 0,
        sum_upper: r,
        prod_lower: 0,
        prod_upper: half_product(r),
    }
}

/// Bounds on the sum and product of `κ'` (or `κ`) over `G` and `G^bc`,
/// without fixing the edge count. Numerically equal to [`delta_bounds`].
pub fn connectivity_bounds_unconstrained(r: usize) -> BoundSet {
    delta_bounds(r)
}

/// `max(0, r - m)`.
pub fn sum_lower_sized(p: &ParameterTriple) -> usize {
    p.r.saturating_sub(p.m)
}

/// The case of the sum upper bound that applies to a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SumBranch {
    /// `s + 1 <= m <= n - 2`: `r - 2`.
    Sparse,
    /// `1 <= m <= s`, or `m = n - 1` with `r >= 2`, or `m ≢ 0 (mod s)` with `m >= n`: `r - 1`.
    OneShort,
    /// Everything else: `r`.
    Full,
}

/// First matching case, tested in the order the cases are listed.
pub fn sum_branch(p: &ParameterTriple) -> SumBranch {
    let (r, s, m, n) = (p.r, p.s, p.m, p.n());
    if s < m && m + 2 <= n {
        SumBranch::Sparse
    } else if (1..=s).contains(&m) || (m + 1 == n && r >= 2) || (m % s != 0 && m >= n) {
        SumBranch::OneShort
    } else {
        SumBranch::Full
    }
}

/// `N(n, m)`: upper bound on `κ'(G) + κ'(G^bc)` for graphs with `m` edges.
pub fn n_upper(p: &ParameterTriple) -> usize {
    match sum_branch(p) {
        SumBranch::Sparse => p.r - 2,
        SumBranch::OneShort => p.r - 1,
        SumBranch::Full => p.r,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductBranch {
    /// `m <= n - 2`, or `m = n - 1` with `r = 1`: 0.
    Disconnected,
    /// `m ≡ 0 (mod s)` and `m >= n`: `(m/s)(r - m/s)`.
    Divisible,
    /// Everything else: `floor(m/s)(r - 1 - floor(m/s))`.
    Remainder,
}

pub fn product_branch(p: &ParameterTriple) -> ProductBranch {
    let (r, s, m, n) = (p.r, p.s, p.m, p.n());
    if m + 2 <= n || (m + 1 == n && r == 1) {
        ProductBranch::Disconnected
    } else if m % s == 0 && m >= n {
        ProductBranch::Divisible
    } else {
        ProductBranch::Remainder
    }
}

/// `M(n, m)`: upper bound on `κ'(G) κ'(G^bc)` for graphs with `m` edges.
pub fn m_upper(p: &ParameterTriple) -> usize {
    let d = p.d();
    match product_branch(p) {
        ProductBranch::Disconnected => 0,
        ProductBranch::Divisible => d * (p.r - d),
        ProductBranch::Remainder => d * (p.r - 1 - d),
    }
}

/// All four sized bounds for a triple.
pub fn sized_bounds(p: &ParameterTriple) -> BoundSet {
    BoundSet {
        sum_lower: sum_lower_sized(p),
        sum_upper: n_upper(p),
        prod_lower: 0,
        prod_upper: m_upper(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(r: usize, s: usize, m: usize) -> ParameterTriple {
        ParameterTriple::new(r, s, m).unwrap()
    }

    #[test]
    fn unrestricted_only_lifts_the_edge_cap() {
        assert!(matches!(ParameterTriple::new(4, 5, 11), Err(Error::InvalidTriple { .. })));
        assert_eq!(ParameterTriple::unrestricted(4, 5, 11).unwrap().m(), 11);
        assert!(ParameterTriple::unrestricted(4, 5, 21).is_err());
        assert!(ParameterTriple::unrestricted(5, 4, 1).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_bounds(5).sum_upper, 5);
        assert_eq!(delta_bounds(5).prod_upper, 6);
        assert_eq!(delta_bounds(4).prod_upper, 4);
        assert_eq!(delta_bounds(1), BoundSet { sum_lower: 0, sum_upper: 1, prod_lower: 0, prod_upper: 0 });
    }

    #[test]
    fn unconstrained_examples() {
        let b = connectivity_bounds_unconstrained(4);
        assert_eq!((b.sum_lower, b.sum_upper, b.prod_lower, b.prod_upper), (0, 4, 0, 4));
        assert_eq!(connectivity_bounds_unconstrained(2).prod_upper, 1);
        assert_eq!(connectivity_bounds_unconstrained(7).prod_upper, 12);
    }

    #[test]
    fn sum_lower_examples() {
        assert_eq!(sum_lower_sized(&t(5, 5, 2)), 3);
        assert_eq!(sum_lower_sized(&t(3, 8, 7)), 0);
        assert_eq!(sum_lower_sized(&t(4, 4, 4)), 0);
    }

    #[test]
    fn n_upper_examples() {
        assert_eq!(n_upper(&t(4, 5, 7)), 2);
        assert_eq!(n_upper(&ParameterTriple::unrestricted(4, 5, 11).unwrap()), 3);
        assert_eq!(n_upper(&t(4, 5, 10)), 4);
        assert_eq!(n_upper(&t(4, 5, 0)), 4);
    }

    #[test]
    fn m_upper_examples() {
        assert_eq!(m_upper(&t(4, 5, 10)), 4);
        assert_eq!(m_upper(&t(4, 5, 7)), 0);
        assert_eq!(m_upper(&ParameterTriple::unrestricted(4, 5, 11).unwrap()), 2);
    }

    #[test]
    fn invalid_triples() {
        assert!(matches!(ParameterTriple::new(0, 3, 0), Err(Error::InvalidTriple { .. })));
        assert!(matches!(ParameterTriple::new(4, 3, 0), Err(Error::InvalidTriple { .. })));
        assert!(matches!(ParameterTriple::new(3, 3, 5), Err(Error::InvalidTriple { .. })));
        assert!(ParameterTriple::new(3, 3, 4).is_ok());
    }

    #[test]
    fn star_case_is_outside_the_domain() {
        // m = n - 1 with r = 1 means m = s > floor(s/2).
        for s in 1..40 {
            assert!(ParameterTriple::new(1, s, s).is_err());
        }
    }

    #[test]
    fn envelope_consistency_exhaustive() {
        for p in ParameterTriple::all_up_to(16) {
            let n = n_upper(&p);
            assert!(sum_lower_sized(&p) <= n && n <= p.r(), "{p:?}");
            assert!(m_upper(&p) <= half_product(p.r()), "{p:?}");
        }
    }

    #[test]
    fn branch_totality_exhaustive() {
        // Under the triple invariants each branch predicate set is hit by exactly
        // one top-down match, and the overlap cases the ordering resolves are
        // exactly the `m = n - 1, r = 1` star, which cannot occur.
        for r in 1..=8 {
            for s in r..=8 {
                for m in 0..=r * s / 2 {
                    let p = t(r, s, m);
                    let n = p.n();
                    let sparse = s < m && m + 2 <= n;
                    let one_short =
                        (1..=s).contains(&m) || (m + 1 == n && r >= 2) || (m % s != 0 && m >= n);
                    assert!(!(sparse && one_short), "{p:?} matches two sum branches");
                    let zero = m + 2 <= n || (m + 1 == n && r == 1);
                    let div = m % s == 0 && m >= n;
                    assert!(!(zero && div), "{p:?} matches two product branches");
                }
            }
        }
    }

    #[test]
    fn am_gm_exhaustive() {
        for r in 0..=64usize {
            let cap = half_product(r);
            for a in 0..=r {
                for b in 0..=r - a {
                    assert!(a * b <= cap, "r={r} a={a} b={b}");
                }
            }
        }
    }
}
