//! The partitioning heuristics: LS, LPT, FFD at a fixed capacity, MultiFit.
//!
//! All of them are deterministic. Ties are always broken toward the smaller
//! index, and every sort is stable.

mod ffd;
mod ls;
mod multifit;

pub use ffd::{run_ffd, FfdPacking, UnpackableItem};
pub use ls::{run_ls, run_lpt, LsStep, LsTrace, TraceError};
pub use multifit::{ffd_feasible, multifit_lower_bound, run_multifit, MultifitResult};

use alloc::vec::Vec;
use core::cmp::Reverse;

/// Indices of `values` ordered by descending value; equal values keep their
/// input order.
pub fn descending_order(values: &[u64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| Reverse(values[i]));
    order
}
