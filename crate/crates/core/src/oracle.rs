//! Slow, exhaustive reference implementations.
//!
//! Nothing here shares code with the fast paths it is used to check.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::algos::{FfdPacking, UnpackableItem};
use crate::model::{Instance, Partition, SumVector};

/// Assignment evaluations allowed by default in [`optimal_partition`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest vector length [`dominates_bruteforce`] accepts.
pub const MAX_BRUTEFORCE_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {needed:?} evaluations, budget is {budget}")]
    BudgetExceeded { needed: Option<u64>, budget: u64 },
    #[error("vector length {0} exceeds the brute-force limit of {MAX_BRUTEFORCE_LEN}")]
    TooLarge(usize),
    #[error("vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Minimise the largest part sum.
    MinMax,
    /// Maximise the smallest part sum.
    MaxMin,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MinMax => "minmax",
            Objective::MaxMin => "maxmin",
        }
    }

    fn score(self, sums: &[u64]) -> u64 {
        match self {
            Objective::MinMax => sums.iter().copied().max().unwrap_or(0),
            Objective::MaxMin => sums.iter().copied().min().unwrap_or(0),
        }
    }

    fn better(self, candidate: u64, incumbent: u64) -> bool {
        match self {
            Objective::MinMax => candidate < incumbent,
            Objective::MaxMin => candidate > incumbent,
        }
    }

    /// The objective value `p` achieves.
    pub fn value_of(self, p: &Partition) -> u64 {
        self.score(p.sums())
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown objective {0:?} (expected \"minmax\" or \"maxmin\")")]
pub struct UnknownObjective(pub String);

impl FromStr for Objective {
    type Err = UnknownObjective;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "minmax" => Ok(Objective::MinMax),
            "maxmin" => Ok(Objective::MaxMin),
            _ => Err(UnknownObjective(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalValue {
    pub objective: Objective,
    pub value: u64,
    pub witness: Partition,
}

/// Number of assignments [`optimal_partition`] evaluates: `m^(n-1)`.
pub fn enumeration_size(inst: &Instance) -> Option<u64> {
    let exp = u32::try_from(inst.n() - 1).ok()?;
    (inst.m() as u64).checked_pow(exp)
}

/// Exact optimum by enumerating every assignment of items to parts, with the
/// first item fixed in part 0.
pub fn optimal_partition(
    inst: &Instance,
    objective: Objective,
    budget: u64,
) -> Result<OptimalValue, OracleError> {
    let needed = enumeration_size(inst);
    match needed {
        Some(k) if k <= budget => {}
        _ => return Err(OracleError::BudgetExceeded { needed, budget }),
    }
    let values = inst.values();
    let m = inst.m();
    let n = values.len();

    let mut assign = vec![0usize; n];
    let mut sums = vec![0u64; m];
    sums[0] = values[0];
    let mut best: Option<(u64, Vec<usize>)> = None;
    enumerate(values, 1, &mut assign, &mut sums, &mut |assign, sums| {
        let score = objective.score(sums);
        if best.as_ref().is_none_or(|(b, _)| objective.better(score, *b)) {
            best = Some((score, assign.to_vec()));
        }
    });
    let (value, assign) = best.expect("at least one assignment");
    let mut parts = vec![Vec::new(); m];
    for (i, &p) in assign.iter().enumerate() {
        parts[p].push(i);
    }
    let witness = Partition::new(inst, parts).expect("assignment covers every item");
    Ok(OptimalValue { objective, value, witness })
}

fn enumerate(
    values: &[u64],
    item: usize,
    assign: &mut [usize],
    sums: &mut [u64],
    visit: &mut impl FnMut(&[usize], &[u64]),
) {
    if item == values.len() {
        visit(assign, sums);
        return;
    }
    for part in 0..sums.len() {
        assign[item] = part;
        sums[part] += values[item];
        enumerate(values, item + 1, assign, sums, visit);
        sums[part] -= values[item];
    }
}

/// Decides domination by trying all `m!` permutations.
pub fn dominates_bruteforce(s: &SumVector, t: &SumVector) -> Result<bool, OracleError> {
    let (s, t) = (s.entries(), t.entries());
    if s.len() != t.len() {
        return Err(OracleError::LengthMismatch(s.len(), t.len()));
    }
    if s.len() > MAX_BRUTEFORCE_LEN {
        return Err(OracleError::TooLarge(s.len()));
    }
    let mut perm: Vec<usize> = (0..s.len()).collect();
    let holds = |perm: &[usize]| perm.iter().zip(t).all(|(&p, &ti)| s[p] >= ti);
    if holds(&perm) {
        return Ok(true);
    }
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; perm.len()];
    let mut i = 0;
    while i < perm.len() {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if holds(&perm) {
                return Ok(true);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(false)
}

/// Textbook first-fit-decreasing: each item, largest first, goes into the
/// lowest-indexed open bin with room, or into a new bin.
pub fn ffd_classic(values: &[u64], capacity: u64) -> Result<FfdPacking, UnpackableItem> {
    if let Some(index) = values.iter().position(|&v| v > capacity) {
        return Err(UnpackableItem { index, value: values[index], capacity });
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]));
    let mut bins: Vec<Vec<usize>> = Vec::new();
    let mut bin_sums: Vec<u64> = Vec::new();
    for i in order {
        match bin_sums.iter().position(|&s| s + values[i] <= capacity) {
            Some(b) => {
                bins[b].push(i);
                bin_sums[b] += values[i];
            }
            None => {
                bins.push(vec![i]);
                bin_sums.push(values[i]);
            }
        }
    }
    Ok(FfdPacking { capacity, bins, bin_sums })
}
