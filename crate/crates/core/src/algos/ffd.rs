use alloc::vec::Vec;

use thiserror::Error;

use super::descending_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("item {index} has value {value}, larger than the capacity {capacity}")]
pub struct UnpackableItem {
    pub index: usize,
    pub value: u64,
    pub capacity: u64,
}

/// Bins produced by first-fit-decreasing at a fixed capacity, in opening
/// order. Each bin lists item indices in the order they were inserted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FfdPacking {
    pub capacity: u64,
    pub bins: Vec<Vec<usize>>,
    pub bin_sums: Vec<u64>,
}

impl FfdPacking {
    pub fn bin_count(&self) -> usize {
        self.bins.len()
    }
}

pub(crate) fn check_packable(values: &[u64], capacity: u64) -> Result<(), UnpackableItem> {
    match values.iter().position(|&v| v > capacity) {
        Some(index) => Err(UnpackableItem { index, value: values[index], capacity }),
        None => Ok(()),
    }
}

/// First Fit Decreasing in its pass-based form: sort descending, then
/// repeatedly open one bin and sweep the remaining items, inserting every
/// item that still fits, until nothing remains.
pub fn run_ffd(values: &[u64], capacity: u64) -> Result<FfdPacking, UnpackableItem> {
    check_packable(values, capacity)?;
    Ok(pass_based(values, capacity).0)
}

/// The packing plus the smallest capacity above `capacity` at which some
/// fit test would flip (`None` if no item was ever turned away). Every
/// capacity in `capacity..next` reproduces the same packing.
pub(crate) fn pass_based(values: &[u64], capacity: u64) -> (FfdPacking, Option<u64>) {
    let mut remaining = descending_order(values);
    let mut bins = Vec::new();
    let mut bin_sums = Vec::new();
    let mut next: Option<u64> = None;
    while !remaining.is_empty() {
        let mut bin = Vec::new();
        let mut sum = 0u64;
        remaining.retain(|&i| {
            if values[i] <= capacity - sum {
                sum += values[i];
                bin.push(i);
                false
            } else {
                let needed = sum.saturating_add(values[i]);
                next = Some(next.map_or(needed, |n| n.min(needed)));
                true
            }
        });
        bins.push(bin);
        bin_sums.push(sum);
    }
    (FfdPacking { capacity, bins, bin_sums }, next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const SEVENTEEN: [u64; 10] = [44, 24, 24, 22, 21, 17, 8, 8, 6, 6];
    const SIXTEEN: [u64; 10] = [44, 24, 24, 22, 21, 16, 8, 8, 6, 6];

    #[test]
    fn three_full_bins_at_sixty() {
        let p = run_ffd(&SEVENTEEN, 60).unwrap();
        assert_eq!(p.bin_sums, vec![60, 60, 60]);
        assert_eq!(p.bins, vec![vec![0, 6, 7], vec![1, 2, 8, 9], vec![3, 4, 5]]);
    }

    #[test]
    fn decreased_instance_needs_four_bins_at_sixty() {
        let p = run_ffd(&SIXTEEN, 60).unwrap();
        assert_eq!(p.bin_sums, vec![60, 56, 57, 6]);
    }

    #[test]
    fn decreased_instance_capacity_61_and_62() {
        let p = run_ffd(&SIXTEEN, 61).unwrap();
        assert_eq!(p.bin_sums, vec![60, 56, 57, 6]);
        let p = run_ffd(&SIXTEEN, 62).unwrap();
        assert_eq!(p.bin_sums, vec![60, 62, 57]);
    }

    #[test]
    fn exact_fit() {
        let p = run_ffd(&[7], 7).unwrap();
        assert_eq!((p.bins, p.bin_sums), (vec![vec![0]], vec![7]));
    }

    #[test]
    fn oversized_item_is_rejected() {
        assert_eq!(
            run_ffd(&[3, 9, 2], 8),
            Err(UnpackableItem { index: 1, value: 9, capacity: 8 })
        );
    }

    #[test]
    fn no_items_no_bins() {
        assert_eq!(run_ffd(&[], 1).unwrap().bin_count(), 0);
    }
}
