//! Instances, partitions and sum vectors.
//!
//! Item indices are 0-based throughout the library. The command-line front
//! end and [`crate::harness::Perturbation`] use 1-based positions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Rejection reasons for [`Instance::new`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance has no values")]
    Empty,
    #[error("value at position {position} is {value}; values must be positive")]
    NonPositive { position: usize, value: u64 },
    #[error("bin count {0} is below 2")]
    TooFewBins(usize),
    #[error("sum of values overflows u64")]
    SumOverflow,
}

/// A number-partitioning input: positive integers and a bin count `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    values: Vec<u64>,
    m: usize,
    total: u64,
}

impl Instance {
    pub fn new(values: Vec<u64>, m: usize) -> Result<Self, InstanceError> {
        if values.is_empty() {
            return Err(InstanceError::Empty);
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v == 0) {
            return Err(InstanceError::NonPositive { position: i + 1, value: v });
        }
        if m < 2 {
            return Err(InstanceError::TooFewBins(m));
        }
        let total = checked_total(&values).ok_or(InstanceError::SumOverflow)?;
        Ok(Instance { values, m, total })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max_value(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// Same values, different bin count.
    pub fn with_m(&self, m: usize) -> Result<Self, InstanceError> {
        Instance::new(self.values.clone(), m)
    }

    /// Same bin count, different values.
    pub fn with_values(&self, values: Vec<u64>) -> Result<Self, InstanceError> {
        Instance::new(values, self.m)
    }
}

pub(crate) fn checked_total(values: &[u64]) -> Option<u64> {
    values.iter().try_fold(0u64, |acc, &v| acc.checked_add(v))
}

/// Structural problems found when assembling a [`Partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("expected {expected} parts, got {actual}")]
    PartCount { expected: usize, actual: usize },
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("index {0} appears in more than one part")]
    Duplicate(usize),
    #[error("index {0} is not assigned to any part")]
    Missing(usize),
}

/// `m` labelled parts, each a set of item indices, with their sums.
///
/// Indices inside a part are kept sorted ascending. Empty parts are legal
/// and have sum 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
    sums: Vec<u64>,
}

impl Partition {
    /// Builds a partition of `instance`'s items, checking that `parts` is an
    /// exact cover of `0..n` with exactly `m` parts.
    pub fn new(instance: &Instance, parts: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        Self::with_part_count(instance.values(), instance.m(), parts)
    }

    pub(crate) fn with_part_count(
        values: &[u64],
        m: usize,
        mut parts: Vec<Vec<usize>>,
    ) -> Result<Self, PartitionError> {
        if parts.len() != m {
            return Err(PartitionError::PartCount { expected: m, actual: parts.len() });
        }
        let mut seen = vec![false; values.len()];
        for part in &parts {
            for &i in part {
                match seen.get_mut(i) {
                    None => return Err(PartitionError::IndexOutOfRange(i)),
                    Some(true) => return Err(PartitionError::Duplicate(i)),
                    Some(s) => *s = true,
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(PartitionError::Missing(i));
        }
        for part in &mut parts {
            part.sort_unstable();
        }
        // Every index occurs once, so no part sum can exceed the checked total.
        let sums = parts.iter().map(|p| p.iter().map(|&i| values[i]).sum()).collect();
        Ok(Partition { parts, sums })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn sums(&self) -> &[u64] {
        &self.sums
    }

    pub fn sum_vector(&self) -> SumVector {
        SumVector::new(self.sums.clone())
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Largest part sum.
    pub fn max_sum(&self) -> u64 {
        self.sums.iter().copied().max().unwrap_or(0)
    }

    /// Smallest part sum; 0 when some part is empty.
    pub fn min_sum(&self) -> u64 {
        self.sums.iter().copied().min().unwrap_or(0)
    }

    /// Re-derives every structural invariant against `instance`.
    pub fn validate(&self, instance: &Instance) -> Result<(), PartitionError> {
        let rebuilt = Partition::new(instance, self.parts.clone())?;
        assert_eq!(rebuilt.sums, self.sums, "stored sums diverged from parts");
        Ok(())
    }
}

/// A vector of `m` part sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumVector(Vec<u64>);

impl SumVector {
    pub fn new(entries: Vec<u64>) -> Self {
        SumVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> u64 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    /// Entries sorted ascending.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for SumVector {
    fn from(v: Vec<u64>) -> Self {
        SumVector(v)
    }
}

impl fmt::Display for SumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_multifit_instance() {
        let inst = Instance::new(vec![18, 10, 6, 4], 2).unwrap();
        assert_eq!(inst.total(), 38);
        assert_eq!(inst.n(), 4);
    }

    #[test]
    fn fewer_items_than_bins_is_fine() {
        assert!(Instance::new(vec![5], 2).is_ok());
    }

    #[test]
    fn rejects_bad_instances() {
        assert_eq!(
            Instance::new(vec![0, 3], 2),
            Err(InstanceError::NonPositive { position: 1, value: 0 })
        );
        assert_eq!(Instance::new(vec![], 2), Err(InstanceError::Empty));
        assert_eq!(Instance::new(vec![1, 2], 1), Err(InstanceError::TooFewBins(1)));
        assert_eq!(Instance::new(vec![u64::MAX, 1], 2), Err(InstanceError::SumOverflow));
    }

    #[test]
    fn max_fits_exactly() {
        assert!(Instance::new(vec![u64::MAX - 1, 1], 2).is_ok());
    }

    #[test]
    fn partition_sums_and_extremes() {
        let inst = Instance::new(vec![18, 10, 6, 4], 2).unwrap();
        let p = Partition::new(&inst, vec![vec![0], vec![3, 1, 2]]).unwrap();
        assert_eq!(p.sums(), &[18, 20]);
        assert_eq!(p.parts()[1], vec![1, 2, 3]);
        assert_eq!((p.max_sum(), p.min_sum()), (20, 18));
        p.validate(&inst).unwrap();

        let single = Instance::new(vec![5], 2).unwrap();
        let p = Partition::new(&single, vec![vec![0], vec![]]).unwrap();
        assert_eq!((p.max_sum(), p.min_sum()), (5, 0));
    }

    #[test]
    fn makespan_of_three_machine_loads() {
        assert_eq!(SumVector::new(vec![120, 121, 121]).max(), 121);
    }

    #[test]
    fn partition_rejects_bad_covers() {
        let inst = Instance::new(vec![1, 2, 3], 2).unwrap();
        assert_eq!(
            Partition::new(&inst, vec![vec![0, 1, 2]]),
            Err(PartitionError::PartCount { expected: 2, actual: 1 })
        );
        assert_eq!(
            Partition::new(&inst, vec![vec![0, 1], vec![1, 2]]),
            Err(PartitionError::Duplicate(1))
        );
        assert_eq!(Partition::new(&inst, vec![vec![0], vec![2]]), Err(PartitionError::Missing(1)));
        assert_eq!(
            Partition::new(&inst, vec![vec![0, 1, 2], vec![7]]),
            Err(PartitionError::IndexOutOfRange(7))
        );
    }
}
