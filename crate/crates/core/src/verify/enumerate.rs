//! Labeled enumeration of edge masks.
//!
//! Bit `(i-1)*s + (j-1)` of a mask is the edge `x_i y_j`. Masks are produced
//! in ascending numeric order; with a fixed edge count that is colex order
//! on `m`-subsets, which lets a rank range be unranked directly so that
//! workers can start anywhere in the sequence.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Full enumeration is limited to `rs <= 24`.
pub const MAX_FULL_CELLS: usize = 24;
/// Fixed-size enumeration is limited to `rs <= 30` ...
pub const MAX_SIZED_CELLS: usize = 30;
/// ... and at most `2^24` masks.
pub const MAX_SIZED_COUNT: u128 = 1 << 24;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The masks of one `(r, s)` shape, optionally restricted to popcount `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskSpace {
    pub r: usize,
    pub s: usize,
    pub m: Option<usize>,
}

impl MaskSpace {
    pub fn new(r: usize, s: usize, m: Option<usize>) -> Result<Self> {
        let cells = r * s;
        match m {
            None if cells > MAX_FULL_CELLS => Err(Error::TooLarge {
                what: "enumeration",
                detail: format!("2^{cells} graphs for ({r}, {s}); full enumeration needs rs <= {MAX_FULL_CELLS}"),
            }),
            Some(m) if cells > MAX_SIZED_CELLS || binomial(cells, m) > MAX_SIZED_COUNT => Err(Error::TooLarge {
                what: "enumeration",
                detail: format!(
                    "C({cells}, {m}) = {} graphs for ({r}, {s}); need rs <= {MAX_SIZED_CELLS} and at most 2^24 graphs",
                    binomial(cells, m)
                ),
            }),
            _ => Ok(Self { r, s, m }),
        }
    }

    pub fn cells(&self) -> usize {
        self.r * self.s
    }

    /// Number of masks in the space.
    pub fn len(&self) -> u64 {
        match self.m {
            None => 1u64 << self.cells(),
            Some(m) => binomial(self.cells(), m) as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The mask of 0-based rank `rank` in ascending order.
    pub fn unrank(&self, rank: u64) -> u64 {
        match self.m {
            None => rank,
            Some(m) => {
                let mut rest = rank as u128;
                let mut mask = 0u64;
                let mut top = self.cells();
                for i in (1..=m).rev() {
                    let mut c = top;
                    while binomial(c, i) > rest {
                        c -= 1;
                    }
                    mask |= 1 << c;
                    rest -= binomial(c, i);
                    top = c;
                }
                mask
            }
        }
    }

    /// Masks with rank in `[start, end)`, ascending.
    pub fn masks(&self, start: u64, end: u64) -> Masks {
        let end = end.min(self.len());
        Masks {
            next: (start < end).then(|| self.unrank(start)),
            remaining: end.saturating_sub(start),
            sized: self.m.is_some(),
        }
    }

    pub fn all_masks(&self) -> Masks {
        self.masks(0, self.len())
    }

    pub fn graph(&self, mask: u64) -> BipartiteGraph {
        BipartiteGraph::from_mask(self.r, self.s, mask)
    }
}

#[derive(Debug, Clone)]
pub struct Masks {
    next: Option<u64>,
    remaining: u64,
    sized: bool,
}

/// Next larger integer with the same popcount.
fn gosper(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    (((r ^ x) >> 2) / c) | r
}

impl Iterator for Masks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.next?;
        self.remaining -= 1;
        self.next = if self.remaining == 0 {
            None
        } else if self.sized && cur != 0 {
            Some(gosper(cur))
        } else {
            Some(cur + 1)
        };
        Some(cur)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// Every labeled graph on `(r, s)`, or those with exactly `m` edges, in
/// ascending mask order.
pub fn enumerate_graphs(r: usize, s: usize, m: Option<usize>) -> Result<impl Iterator<Item = BipartiteGraph>> {
    let space = MaskSpace::new(r, s, m)?;
    Ok(space.all_masks().map(move |mask| space.graph(mask)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(2, 2, Some(2)).unwrap().count(), 6);
        assert_eq!(enumerate_graphs(2, 2, None).unwrap().count(), 16);
        let empty: Vec<_> = enumerate_graphs(3, 3, Some(0)).unwrap().collect();
        assert_eq!(empty, vec![BipartiteGraph::empty(3, 3)]);
    }

    #[test]
    fn sized_masks_ascend_with_fixed_popcount() {
        let space = MaskSpace::new(3, 3, Some(4)).unwrap();
        let masks: Vec<u64> = space.all_masks().collect();
        assert_eq!(masks.len() as u128, binomial(9, 4));
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert!(masks.iter().all(|m| m.count_ones() == 4 && *m < 1 << 9));
        let brute: Vec<u64> = (0u64..1 << 9).filter(|m| m.count_ones() == 4).collect();
        assert_eq!(masks, brute);
    }

    #[test]
    fn unrank_matches_iteration() {
        let space = MaskSpace::new(4, 5, Some(7)).unwrap();
        for (rank, mask) in space.all_masks().enumerate().step_by(997) {
            assert_eq!(space.unrank(rank as u64), mask);
        }
        let tail: Vec<u64> = space.masks(100, 110).collect();
        let direct: Vec<u64> = space.all_masks().skip(100).take(10).collect();
        assert_eq!(tail, direct);
    }

    #[test]
    fn caps() {
        assert!(matches!(MaskSpace::new(5, 5, None), Err(Error::TooLarge { .. })));
        assert!(MaskSpace::new(4, 6, None).is_ok());
        assert!(MaskSpace::new(4, 5, Some(10)).is_ok());
        assert!(matches!(MaskSpace::new(5, 6, Some(15)), Err(Error::TooLarge { .. })));
        assert!(MaskSpace::new(5, 6, Some(4)).is_ok());
        assert!(matches!(MaskSpace::new(4, 8, Some(1)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn full_and_zero_popcount_edge_cases() {
        let space = MaskSpace::new(2, 3, Some(6)).unwrap();
        assert_eq!(space.all_masks().collect::<Vec<_>>(), vec![0b111111]);
        let space = MaskSpace::new(1, 1, None).unwrap();
        assert_eq!(space.all_masks().collect::<Vec<_>>(), vec![0, 1]);
    }
}
