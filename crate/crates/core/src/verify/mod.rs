//! Exhaustive and randomized verification of the connectivity bounds.

mod enumerate;
mod report;
mod scan;
mod theorems;

pub use enumerate::{enumerate_graphs, MaskSpace, Masks, MAX_FULL_CELLS, MAX_SIZED_CELLS, MAX_SIZED_COUNT};
pub use report::{Attainment, TheoremReport, Violation, MAX_RECORDED_VIOLATIONS};
pub use scan::{extremal_scan, Aggregate, ExtremalResult, Metric, Quantity};
pub use theorems::{check_theorem, check_theorem_with_jobs, RangeSpec, TheoremId};
