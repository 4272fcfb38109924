use alloc::vec::Vec;

use super::ffd::{pass_based, run_ffd};
use crate::model::{Instance, Partition};

/// Outcome of MultiFit: the smallest capacity at which FFD fits everything
/// into at most `m` bins, and the resulting `m`-part partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultifitResult {
    pub capacity: u64,
    /// `max(ceil(total / m), max value)`; no capacity below it can work.
    pub lower_bound: u64,
    /// FFD bins in opening order, padded with empty parts up to `m`.
    pub partition: Partition,
    /// What binary search alone returned. Differs from `capacity` only when
    /// FFD feasibility is not monotone in the capacity on this instance.
    pub binary_search_capacity: u64,
}

pub fn multifit_lower_bound(inst: &Instance) -> u64 {
    let m = inst.m() as u64;
    inst.total().div_ceil(m).max(inst.max_value())
}

/// Whether FFD at `capacity` opens at most `m` bins.
pub fn ffd_feasible(values: &[u64], capacity: u64, m: usize) -> bool {
    match run_ffd(values, capacity) {
        Ok(p) => p.bin_count() <= m,
        Err(_) => false,
    }
}

/// Smallest feasible capacity in `from..below`, visiting only capacities at
/// which the FFD run actually changes.
fn first_feasible(values: &[u64], m: usize, from: u64, below: u64) -> Option<u64> {
    let mut c = from;
    while c < below {
        let (packing, next) = pass_based(values, c);
        if packing.bin_count() <= m {
            return Some(c);
        }
        c = next?;
    }
    None
}

/// MultiFit: binary search over integer capacities for the smallest one at
/// which FFD needs at most `m` bins.
///
/// The search starts at the lower bound and doubles an upper bound until it
/// is feasible (capacity `total` always is). FFD's bin count is not monotone
/// in the capacity, so binary search can overshoot; the answer is then
/// checked by scanning `[lower bound, candidate)`. The scan only stops at
/// capacities equal to some rejected `bin sum + item`, since between those
/// the FFD run cannot change.
pub fn run_multifit(inst: &Instance) -> MultifitResult {
    let values = inst.values();
    let m = inst.m();
    let lower = multifit_lower_bound(inst);
    let feasible = |c: u64| ffd_feasible(values, c, m);

    let mut searched = lower;
    if !feasible(lower) {
        // Invariant: `lo` infeasible, `hi` feasible.
        let mut lo = lower;
        let mut hi = lower;
        while !feasible(hi) {
            lo = hi;
            hi = hi.saturating_mul(2).min(inst.total());
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if feasible(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        searched = hi;
    }
    let capacity = first_feasible(values, m, lower, searched).unwrap_or(searched);

    let packing = run_ffd(values, capacity).expect("capacity is at least the largest value");
    let mut parts: Vec<Vec<usize>> = packing.bins;
    parts.resize_with(m, Vec::new);
    let partition = Partition::new(inst, parts).expect("FFD packs every item exactly once");
    MultifitResult { capacity, lower_bound: lower, partition, binary_search_capacity: searched }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn inst(v: &[u64], m: usize) -> Instance {
        Instance::new(v.to_vec(), m).unwrap()
    }

    #[test]
    fn capacity_sixty_for_original_instance() {
        let r = run_multifit(&inst(&[44, 24, 24, 22, 21, 17, 8, 8, 6, 6], 3));
        assert_eq!(r.capacity, 60);
        assert_eq!(r.partition.sums(), &[60, 60, 60]);
        assert_eq!(r.binary_search_capacity, 60);
    }

    #[test]
    fn capacity_sixty_two_after_decrease() {
        let r = run_multifit(&inst(&[44, 24, 24, 22, 21, 16, 8, 8, 6, 6], 3));
        assert_eq!(r.lower_bound, 60);
        assert_eq!(r.capacity, 62);
        assert_eq!(r.partition.sums(), &[60, 62, 57]);
    }

    #[test]
    fn single_item_pads_with_empty_part() {
        let r = run_multifit(&inst(&[9], 2));
        assert_eq!(r.capacity, 9);
        assert_eq!(r.partition.sums(), &[9, 0]);
        assert_eq!(r.partition.parts(), &[vec![0], vec![]]);
    }

    #[test]
    fn binary_search_overshoot_is_corrected() {
        // FFD fits this into 3 bins at 189 but not at 190 or 191.
        let v = [35, 18, 40, 16, 76, 47, 99, 55, 91, 29, 14, 44];
        let r = run_multifit(&inst(&v, 3));
        assert_eq!(r.binary_search_capacity, 192);
        assert_eq!(r.capacity, 189);
        assert!(ffd_feasible(&v, 189, 3));
        assert!(!ffd_feasible(&v, 190, 3));
        assert!((r.lower_bound..189).all(|c| !ffd_feasible(&v, c, 3)));
    }

    #[test]
    fn lower_bound_uses_largest_item() {
        assert_eq!(multifit_lower_bound(&inst(&[10, 1, 1], 2)), 10);
        assert_eq!(multifit_lower_bound(&inst(&[3, 3, 3], 2)), 5);
    }
}
