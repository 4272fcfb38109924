use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use super::descending_order;
use crate::model::{Instance, Partition, SumVector};

/// One LS iteration: which item was placed, where, and the bin sums after.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LsStep {
    /// Original (0-based) index of the placed item.
    pub item: usize,
    pub bin: usize,
    pub sums: SumVector,
}

/// Per-iteration record of an LS run.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LsTrace {
    pub steps: Vec<LsStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {step}: sums changed in a coordinate other than the chosen bin, or by the wrong amount")]
    BadDelta { step: usize },
    #[error("step {step}: bin {bin} did not have the smallest prior sum (ties to the lowest index)")]
    NotGreedy { step: usize, bin: usize },
    #[error("step {step}: sum vector has the wrong length")]
    Shape { step: usize },
}

impl LsTrace {
    /// Sums after the last step, or all zeros for an empty trace.
    pub fn final_sums(&self, m: usize) -> SumVector {
        self.steps
            .last()
            .map(|s| s.sums.clone())
            .unwrap_or_else(|| SumVector::new(vec![0; m]))
    }

    /// Checks the greedy rule and the single-coordinate update at every step.
    pub fn validate(&self, values: &[u64], m: usize) -> Result<(), TraceError> {
        let mut prev = vec![0u64; m];
        for (k, step) in self.steps.iter().enumerate() {
            let cur = step.sums.entries();
            if cur.len() != m || step.bin >= m {
                return Err(TraceError::Shape { step: k });
            }
            if smallest_bin(&prev) != step.bin {
                return Err(TraceError::NotGreedy { step: k, bin: step.bin });
            }
            let ok = (0..m).all(|b| {
                if b == step.bin {
                    prev[b].checked_add(values[step.item]) == Some(cur[b])
                } else {
                    prev[b] == cur[b]
                }
            });
            if !ok {
                return Err(TraceError::BadDelta { step: k });
            }
            prev.copy_from_slice(cur);
        }
        Ok(())
    }
}

/// First bin with the smallest sum.
fn smallest_bin(sums: &[u64]) -> usize {
    let mut best = 0;
    for (b, &s) in sums.iter().enumerate().skip(1) {
        if s < sums[best] {
            best = b;
        }
    }
    best
}

/// List Scheduling over items visited in `order`.
fn list_schedule(values: &[u64], m: usize, order: &[usize]) -> (Vec<Vec<usize>>, LsTrace) {
    let mut sums = vec![0u64; m];
    let mut parts = vec![Vec::new(); m];
    let mut steps = Vec::with_capacity(order.len());
    for &item in order {
        let bin = smallest_bin(&sums);
        // Cannot overflow: partial sums are bounded by the instance total.
        sums[bin] += values[item];
        parts[bin].push(item);
        steps.push(LsStep { item, bin, sums: SumVector::new(sums.clone()) });
    }
    (parts, LsTrace { steps })
}

/// List Scheduling: each value, in input order, goes to the bin whose
/// current sum is smallest (lowest index on ties).
pub fn run_ls(inst: &Instance) -> (Partition, LsTrace) {
    let order: Vec<usize> = (0..inst.n()).collect();
    finish(inst, &order)
}

/// Longest Processing Time first: LS over the values sorted descending
/// (stable). Parts and trace items refer to original indices.
pub fn run_lpt(inst: &Instance) -> (Partition, LsTrace) {
    finish(inst, &descending_order(inst.values()))
}

fn finish(inst: &Instance, order: &[usize]) -> (Partition, LsTrace) {
    let (parts, trace) = list_schedule(inst.values(), inst.m(), order);
    let partition = Partition::new(inst, parts).expect("list scheduling places every item once");
    (partition, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(v: &[u64], m: usize) -> Instance {
        Instance::new(v.to_vec(), m).unwrap()
    }

    #[test]
    fn ls_on_two_bin_sequences() {
        let (p, trace) = run_ls(&inst(&[18, 10, 6, 4], 2));
        assert_eq!(p.parts(), &[vec![0], vec![1, 2, 3]]);
        assert_eq!(p.sums(), &[18, 20]);
        trace.validate(&[18, 10, 6, 4], 2).unwrap();

        let (p, _) = run_ls(&inst(&[18, 10, 9, 4], 2));
        assert_eq!(p.parts(), &[vec![0, 3], vec![1, 2]]);
        assert_eq!(p.sums(), &[22, 19]);
    }

    #[test]
    fn ls_without_dependencies_on_scheduling_example() {
        let (p, _) = run_ls(&inst(&[30, 21, 22, 20, 40, 40, 40, 40, 90], 3));
        assert_eq!(p.max_sum(), 160);
        let (p, _) = run_ls(&inst(&[22, 11, 12, 10, 30, 30, 30, 30, 80], 3));
        assert_eq!(p.max_sum(), 131);
    }

    #[test]
    fn single_item_lands_in_first_bin() {
        let (p, trace) = run_ls(&inst(&[5], 2));
        assert_eq!(p.sums(), &[5, 0]);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].bin, 0);
    }

    #[test]
    fn lpt_examples() {
        assert_eq!(run_lpt(&inst(&[18, 10, 6, 4], 2)).0.sums(), &[18, 20]);
        assert_eq!(run_lpt(&inst(&[5, 5, 4, 4, 3, 3], 2)).0.sums(), &[12, 12]);
        assert_eq!(run_lpt(&inst(&[1, 1, 1], 3)).0.sums(), &[1, 1, 1]);
    }

    #[test]
    fn lpt_reports_original_indices() {
        let (p, trace) = run_lpt(&inst(&[4, 18, 6, 10], 2));
        // sorted: 18(1) 10(3) 6(2) 4(0)
        assert_eq!(p.parts(), &[vec![1], vec![0, 2, 3]]);
        let items: Vec<usize> = trace.steps.iter().map(|s| s.item).collect();
        assert_eq!(items, vec![1, 3, 2, 0]);
        trace.validate(&[4, 18, 6, 10], 2).unwrap();
    }

    #[test]
    fn trace_validation_catches_tampering() {
        let values = [3, 2, 1];
        let (_, mut trace) = run_ls(&inst(&values, 2));
        trace.steps[1].bin = 0;
        assert_eq!(trace.validate(&values, 2), Err(TraceError::NotGreedy { step: 1, bin: 0 }));

        let (_, mut trace) = run_ls(&inst(&values, 2));
        trace.steps[2].sums = SumVector::new(vec![3, 4]);
        assert_eq!(trace.validate(&values, 2), Err(TraceError::BadDelta { step: 2 }));
    }
}
