//! Monotonicity checks: perturb an input, re-run an algorithm, compare.
//!
//! A value check raises one coordinate (or several) and asks whether the new
//! sum vector dominates the old one. It also records the two weaker
//! conditions separately, largest sum not decreasing and smallest sum not
//! decreasing, so a result can be "monotone without domination".
//!
//! A bin-count check raises `m` and asks whether the largest and smallest
//! sums weakly fall.
//!
//! Random search uses ChaCha8 (`rand_chacha`). Trial `t` of a search with
//! seed `s` draws from the generator seeded with `seed_from_u64(s)` and
//! switched to stream `t`, so every trial can be regenerated on its own and
//! trials may run in any order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algos::{run_lpt, run_ls, run_multifit, LsTrace};
use crate::domination::{dominates, DominationWitness};
use crate::model::{Instance, InstanceError, Partition, SumVector};
use crate::precedence::{schedule, DispatchPolicy, PrecedenceError, PrecedenceInstance};

/// The dependency-free partitioning algorithms under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Ls,
    Lpt,
    Multifit,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Ls, Algorithm::Lpt, Algorithm::Multifit];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ls => "ls",
            Algorithm::Lpt => "lpt",
            Algorithm::Multifit => "multifit",
        }
    }

    pub fn run(self, inst: &Instance) -> Partition {
        match self {
            Algorithm::Ls => run_ls(inst).0,
            Algorithm::Lpt => run_lpt(inst).0,
            Algorithm::Multifit => run_multifit(inst).partition,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ls" => Ok(Algorithm::Ls),
            "lpt" => Ok(Algorithm::Lpt),
            "multifit" => Ok(Algorithm::Multifit),
            _ => Err(HarnessError::UnknownAlgorithm(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown algorithm {0:?} (expected ls, lpt or multifit)")]
    UnknownAlgorithm(String),
    #[error("epsilon must be positive")]
    ZeroEpsilon,
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("instances differ in shape")]
    ShapeMismatch,
    #[error("second instance is not an entrywise increase of the first")]
    NotAnIncrease,
    #[error("new bin count {m2} must exceed {m}")]
    BinCountNotIncreased { m: usize, m2: usize },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Precedence(#[from] PrecedenceError),
}

/// Raise (or lower) the value at 1-based position `index` by `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perturbation {
    pub index: usize,
    pub epsilon: u64,
}

impl Perturbation {
    pub fn new(index: usize, epsilon: u64) -> Result<Self, HarnessError> {
        if epsilon == 0 {
            return Err(HarnessError::ZeroEpsilon);
        }
        if index == 0 {
            return Err(HarnessError::IndexOutOfRange { index, n: 0 });
        }
        Ok(Perturbation { index, epsilon })
    }

    fn position(&self, inst: &Instance) -> Result<usize, HarnessError> {
        if self.epsilon == 0 {
            return Err(HarnessError::ZeroEpsilon);
        }
        if self.index == 0 || self.index > inst.n() {
            return Err(HarnessError::IndexOutOfRange { index: self.index, n: inst.n() });
        }
        Ok(self.index - 1)
    }

    /// `x + epsilon * e_index`.
    pub fn raise(&self, inst: &Instance) -> Result<Instance, HarnessError> {
        let i = self.position(inst)?;
        let mut values = inst.values().to_vec();
        values[i] = values[i].checked_add(self.epsilon).ok_or(InstanceError::SumOverflow)?;
        Ok(inst.with_values(values)?)
    }

    /// `x - epsilon * e_index`; fails if the value would drop below 1.
    pub fn lower(&self, inst: &Instance) -> Result<Instance, HarnessError> {
        let i = self.position(inst)?;
        let mut values = inst.values().to_vec();
        values[i] = values[i].saturating_sub(self.epsilon);
        Ok(inst.with_values(values)?)
    }
}

/// A failed monotonicity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    MaxDecreased,
    MinDecreased,
    MaxIncreased,
    MinIncreased,
    NoDomination,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::MaxDecreased => "max-decreased",
            Condition::MinDecreased => "min-decreased",
            Condition::MaxIncreased => "max-increased",
            Condition::MinIncreased => "min-increased",
            Condition::NoDomination => "no-domination",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Violation => "VIOLATION",
        })
    }
}

/// What was run, on what.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Partition { algorithm: Algorithm, instance: Instance },
    Schedule { policy: DispatchPolicy, instance: PrecedenceInstance },
}

impl Subject {
    pub fn label(&self) -> &'static str {
        match self {
            Subject::Partition { algorithm, .. } => algorithm.name(),
            Subject::Schedule { policy, .. } => policy.name(),
        }
    }
}

/// How the second run's input differs from the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Change {
    Raise(Perturbation),
    Lower(Perturbation),
    /// Several coordinates raised; holds the new values.
    Entrywise(Vec<u64>),
    BinCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCheckResult {
    pub subject: Subject,
    pub change: Change,
    pub before: SumVector,
    pub after: SumVector,
    /// For raises: `after` dominates `before`. For a lowering: `before`
    /// dominates `after`. Always `None` for bin-count checks.
    pub witness: Option<DominationWitness>,
    /// Sorted, without duplicates.
    pub violations: Vec<Condition>,
}

impl MonotoneCheckResult {
    pub fn verdict(&self) -> Verdict {
        if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Violation
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict() == Verdict::Violation
    }
}

/// Inputs went up: sums should not go down, and `after` should dominate.
fn compare_raise(before: SumVector, after: SumVector) -> (Option<DominationWitness>, Vec<Condition>) {
    let mut violations = Vec::new();
    if after.max() < before.max() {
        violations.push(Condition::MaxDecreased);
    }
    if after.min() < before.min() {
        violations.push(Condition::MinDecreased);
    }
    let witness = dominates(&after, &before).expect("same bin count");
    if witness.is_none() {
        violations.push(Condition::NoDomination);
    }
    (witness, violations)
}

/// Inputs went down: sums should not go up, and `before` should dominate.
fn compare_lower(before: SumVector, after: SumVector) -> (Option<DominationWitness>, Vec<Condition>) {
    let mut violations = Vec::new();
    if after.max() > before.max() {
        violations.push(Condition::MaxIncreased);
    }
    if after.min() > before.min() {
        violations.push(Condition::MinIncreased);
    }
    let witness = dominates(&before, &after).expect("same bin count");
    if witness.is_none() {
        violations.push(Condition::NoDomination);
    }
    (witness, violations)
}

/// Runs `algo` on `x` and on `x + epsilon * e_j`.
pub fn check_value_monotone(
    algo: Algorithm,
    inst: &Instance,
    pert: Perturbation,
) -> Result<MonotoneCheckResult, HarnessError> {
    let raised = pert.raise(inst)?;
    let before = algo.run(inst).sum_vector();
    let after = algo.run(&raised).sum_vector();
    let (witness, violations) = compare_raise(before.clone(), after.clone());
    Ok(MonotoneCheckResult {
        subject: Subject::Partition { algorithm: algo, instance: inst.clone() },
        change: Change::Raise(pert),
        before,
        after,
        witness,
        violations,
    })
}

/// Runs `algo` on `x` and on `x - epsilon * e_j`. Flags exactly the pairs
/// [`check_value_monotone`] flags from the lowered instance, with the roles
/// of before and after swapped.
pub fn check_value_decrease(
    algo: Algorithm,
    inst: &Instance,
    pert: Perturbation,
) -> Result<MonotoneCheckResult, HarnessError> {
    let lowered = pert.lower(inst)?;
    let before = algo.run(inst).sum_vector();
    let after = algo.run(&lowered).sum_vector();
    let (witness, violations) = compare_lower(before.clone(), after.clone());
    Ok(MonotoneCheckResult {
        subject: Subject::Partition { algorithm: algo, instance: inst.clone() },
        change: Change::Lower(pert),
        before,
        after,
        witness,
        violations,
    })
}

/// Value check for an arbitrary entrywise increase `x_prime >= x`.
pub fn check_multi_increase(
    algo: Algorithm,
    x: &Instance,
    x_prime: &Instance,
) -> Result<MonotoneCheckResult, HarnessError> {
    if x.n() != x_prime.n() || x.m() != x_prime.m() {
        return Err(HarnessError::ShapeMismatch);
    }
    let pairs = x.values().iter().zip(x_prime.values());
    if pairs.clone().any(|(a, b)| b < a) || pairs.clone().all(|(a, b)| a == b) {
        return Err(HarnessError::NotAnIncrease);
    }
    let before = algo.run(x).sum_vector();
    let after = algo.run(x_prime).sum_vector();
    let (witness, violations) = compare_raise(before.clone(), after.clone());
    Ok(MonotoneCheckResult {
        subject: Subject::Partition { algorithm: algo, instance: x.clone() },
        change: Change::Entrywise(x_prime.values().to_vec()),
        before,
        after,
        witness,
        violations,
    })
}

fn count_violations(before: &SumVector, after: &SumVector) -> Vec<Condition> {
    let mut violations = Vec::new();
    if after.max() > before.max() {
        violations.push(Condition::MaxIncreased);
    }
    if after.min() > before.min() {
        violations.push(Condition::MinIncreased);
    }
    violations
}

/// Compares `algo` at `m` and at `m2 > m` bins. A violation means the
/// largest or the smallest sum went up.
pub fn check_count_monotone(
    algo: Algorithm,
    inst: &Instance,
    m2: usize,
) -> Result<MonotoneCheckResult, HarnessError> {
    if m2 <= inst.m() {
        return Err(HarnessError::BinCountNotIncreased { m: inst.m(), m2 });
    }
    let before = algo.run(inst).sum_vector();
    let after = algo.run(&inst.with_m(m2)?).sum_vector();
    let violations = count_violations(&before, &after);
    Ok(MonotoneCheckResult {
        subject: Subject::Partition { algorithm: algo, instance: inst.clone() },
        change: Change::BinCount(m2),
        before,
        after,
        witness: None,
        violations,
    })
}

/// Bin-count check for precedence scheduling; compares machine finish times.
pub fn check_count_monotone_schedule(
    policy: DispatchPolicy,
    inst: &PrecedenceInstance,
    m2: usize,
) -> Result<MonotoneCheckResult, HarnessError> {
    if m2 <= inst.m() {
        return Err(HarnessError::BinCountNotIncreased { m: inst.m(), m2 });
    }
    let before = schedule(inst, policy).machine_finish_times();
    let after = schedule(&inst.with_m(m2)?, policy).machine_finish_times();
    let violations = count_violations(&before, &after);
    Ok(MonotoneCheckResult {
        subject: Subject::Schedule { policy, instance: inst.clone() },
        change: Change::BinCount(m2),
        before,
        after,
        witness: None,
        violations,
    })
}

/// Where the step-by-step domination argument first breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceDominationError {
    #[error("traces differ in length or bin count")]
    Shape,
    #[error("domination fails after step {0}")]
    Fails(usize),
}

/// Replays the inductive domination argument over two LS traces of equal
/// length, where `after` ran on an entrywise-larger input in the same item
/// order.
///
/// Starting from the identity, the permutation `pi` (before-part `i` maps to
/// after-part `pi[i]`) is kept when both runs put step `k` into matching
/// parts, and otherwise has the two affected images swapped. Returns the
/// witness for each step, each re-checked against the traced sums.
pub fn proof_witnesses(
    before: &LsTrace,
    after: &LsTrace,
) -> Result<Vec<DominationWitness>, TraceDominationError> {
    if before.steps.len() != after.steps.len() {
        return Err(TraceDominationError::Shape);
    }
    let Some(first) = before.steps.first() else {
        return Ok(Vec::new());
    };
    let m = first.sums.len();
    let mut pi = DominationWitness::identity(m);
    let mut out = Vec::with_capacity(before.steps.len());
    for (k, (b, a)) in before.steps.iter().zip(&after.steps).enumerate() {
        if b.sums.len() != m || a.sums.len() != m {
            return Err(TraceDominationError::Shape);
        }
        let i = b.bin;
        if pi.permutation()[i] != a.bin {
            let j = pi
                .permutation()
                .iter()
                .position(|&p| p == a.bin)
                .ok_or(TraceDominationError::Shape)?;
            pi.swap(i, j);
        }
        if !pi.holds(&a.sums, &b.sums) {
            return Err(TraceDominationError::Fails(k));
        }
        out.push(pi.clone());
    }
    Ok(out)
}

/// First step at which `after`'s sums fail to dominate `before`'s, if any.
pub fn first_trace_domination_failure(before: &LsTrace, after: &LsTrace) -> Option<usize> {
    before
        .steps
        .iter()
        .zip(&after.steps)
        .position(|(b, a)| !matches!(dominates(&a.sums, &b.sums), Ok(Some(_))))
}

/// Parameters of a randomised value-monotonicity search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub algorithm: Algorithm,
    pub trials: u64,
    pub seed: u64,
    pub n: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    pub values: RangeInclusive<u64>,
    pub epsilon: RangeInclusive<u64>,
}

impl SearchConfig {
    /// `n` in 1..=12, `m` in 2..=5, values in 1..=100, epsilon in 1..=20.
    pub fn new(algorithm: Algorithm, trials: u64, seed: u64) -> Self {
        SearchConfig { algorithm, trials, seed, n: 1..=12, m: 2..=5, values: 1..=100, epsilon: 1..=20 }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.trials == 0 {
            return Err(HarnessError::InvalidConfig("trials must be at least 1"));
        }
        if self.n.is_empty() || *self.n.start() == 0 {
            return Err(HarnessError::InvalidConfig("n range must be nonempty and start at 1 or more"));
        }
        if self.m.is_empty() || *self.m.start() < 2 {
            return Err(HarnessError::InvalidConfig("m range must be nonempty and start at 2 or more"));
        }
        if self.values.is_empty() || *self.values.start() == 0 {
            return Err(HarnessError::InvalidConfig("value range must be nonempty and positive"));
        }
        if self.epsilon.is_empty() || *self.epsilon.start() == 0 {
            return Err(HarnessError::InvalidConfig("epsilon range must be nonempty and positive"));
        }
        let worst = (*self.n.end() as u64)
            .checked_mul(*self.values.end())
            .and_then(|t| t.checked_add(*self.epsilon.end()));
        if worst.is_none() {
            return Err(HarnessError::InvalidConfig("ranges allow sums that overflow u64"));
        }
        Ok(())
    }
}

/// The MultiFit counterexample, in the increasing direction: raising the
/// sixth value from 16 to 17 lowers the largest sum from 62 to 60.
pub fn multifit_counterexample() -> (Instance, Perturbation) {
    let inst = Instance::new(alloc::vec![44, 24, 24, 22, 21, 16, 8, 8, 6, 6], 3)
        .expect("valid constant instance");
    (inst, Perturbation { index: 6, epsilon: 1 })
}

/// The instance and perturbation of trial `trial`. Trial 0 of a MultiFit
/// search is always [`multifit_counterexample`].
pub fn trial_case(cfg: &SearchConfig, trial: u64) -> (Instance, Perturbation) {
    if cfg.algorithm == Algorithm::Multifit && trial == 0 {
        return multifit_counterexample();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let n = rng.random_range(cfg.n.clone());
    let m = rng.random_range(cfg.m.clone());
    let values = (0..n).map(|_| rng.random_range(cfg.values.clone())).collect();
    let index = rng.random_range(1..=n);
    let epsilon = rng.random_range(cfg.epsilon.clone());
    let inst = Instance::new(values, m).expect("config validated");
    (inst, Perturbation { index, epsilon })
}

/// Runs trial `trial` of `cfg` (which must already be validated).
pub fn run_trial(cfg: &SearchConfig, trial: u64) -> MonotoneCheckResult {
    let (inst, pert) = trial_case(cfg, trial);
    check_value_monotone(cfg.algorithm, &inst, pert).expect("generated cases are in range")
}

/// A violation found by [`search_anomalies`], with what is needed to
/// reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub seed: u64,
    pub trial: u64,
    pub result: MonotoneCheckResult,
}

impl ViolationReport {
    /// Re-runs the stored instance and perturbation.
    pub fn replay(&self) -> MonotoneCheckResult {
        match (&self.result.subject, &self.result.change) {
            (Subject::Partition { algorithm, instance }, Change::Raise(pert)) => {
                check_value_monotone(*algorithm, instance, *pert).expect("replay of a stored case")
            }
            _ => unreachable!("search reports only hold single-value raises"),
        }
    }

    /// Regenerates the trial from `(seed, trial)` under `cfg`'s ranges.
    pub fn regenerate(&self, cfg: &SearchConfig) -> MonotoneCheckResult {
        let cfg = SearchConfig { seed: self.seed, ..cfg.clone() };
        run_trial(&cfg, self.trial)
    }
}

/// Runs every trial in order and returns the violations, by trial index.
pub fn search_anomalies(cfg: &SearchConfig) -> Result<Vec<ViolationReport>, HarnessError> {
    cfg.validate()?;
    Ok((0..cfg.trials)
        .filter_map(|t| {
            let result = run_trial(cfg, t);
            result.is_violation().then_some(ViolationReport { seed: cfg.seed, trial: t, result })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn inst(v: &[u64], m: usize) -> Instance {
        Instance::new(v.to_vec(), m).unwrap()
    }

    #[test]
    fn ls_raise_passes_with_witness() {
        let r = check_value_monotone(Algorithm::Ls, &inst(&[18, 10, 6, 4], 2), Perturbation::new(3, 3).unwrap())
            .unwrap();
        assert_eq!(r.verdict(), Verdict::Pass);
        assert_eq!(r.before.entries(), &[18, 20]);
        assert_eq!(r.after.entries(), &[22, 19]);
        assert!(r.witness.is_some());
    }

    #[test]
    fn multifit_raise_lowers_the_maximum() {
        let (x, pert) = multifit_counterexample();
        let r = check_value_monotone(Algorithm::Multifit, &x, pert).unwrap();
        assert_eq!(r.verdict(), Verdict::Violation);
        assert_eq!((r.before.max(), r.after.max()), (62, 60));
        assert!(r.violations.contains(&Condition::MaxDecreased));
    }

    #[test]
    fn rejects_bad_perturbations() {
        let x = inst(&[1, 2], 2);
        assert_eq!(Perturbation::new(1, 0), Err(HarnessError::ZeroEpsilon));
        assert_eq!(
            check_value_monotone(Algorithm::Ls, &x, Perturbation { index: 1, epsilon: 0 }),
            Err(HarnessError::ZeroEpsilon)
        );
        assert_eq!(
            check_value_monotone(Algorithm::Ls, &x, Perturbation { index: 3, epsilon: 1 }),
            Err(HarnessError::IndexOutOfRange { index: 3, n: 2 })
        );
        assert!(matches!(
            check_value_decrease(Algorithm::Ls, &x, Perturbation { index: 1, epsilon: 1 }),
            Err(HarnessError::Instance(InstanceError::NonPositive { .. }))
        ));
        assert!(matches!("ldm".parse::<Algorithm>(), Err(HarnessError::UnknownAlgorithm(_))));
    }

    #[test]
    fn multi_increase_checks() {
        let x = inst(&[18, 10, 6, 4], 2);
        let r = check_multi_increase(Algorithm::Ls, &x, &inst(&[19, 11, 7, 5], 2)).unwrap();
        assert_eq!(r.verdict(), Verdict::Pass);
        assert!(r.witness.is_some());
        assert_eq!(check_multi_increase(Algorithm::Ls, &x, &x), Err(HarnessError::NotAnIncrease));
        assert_eq!(
            check_multi_increase(Algorithm::Ls, &x, &inst(&[19, 9, 7, 5], 2)),
            Err(HarnessError::NotAnIncrease)
        );
        assert_eq!(
            check_multi_increase(Algorithm::Ls, &x, &inst(&[19, 11, 7], 2)),
            Err(HarnessError::ShapeMismatch)
        );
    }

    #[test]
    fn count_check_on_unit_values() {
        let r = check_count_monotone(Algorithm::Ls, &inst(&[1, 1, 1], 2), 3).unwrap();
        assert_eq!(r.verdict(), Verdict::Pass);
        assert_eq!((r.before.max(), r.after.max()), (2, 1));
        assert_eq!((r.before.min(), r.after.min()), (1, 1));
        assert_eq!(
            check_count_monotone(Algorithm::Ls, &inst(&[1, 1, 1], 2), 2),
            Err(HarnessError::BinCountNotIncreased { m: 2, m2: 2 })
        );
    }

    #[test]
    fn proof_witness_on_example() {
        let (_, before) = run_ls(&inst(&[18, 10, 6, 4], 2));
        let (_, after) = run_ls(&inst(&[18, 10, 9, 4], 2));
        let ws = proof_witnesses(&before, &after).unwrap();
        assert_eq!(ws.len(), 4);
        // the last item goes to different bins, so the images get swapped
        assert_eq!(ws[3].permutation(), &[1, 0]);
        assert_eq!(first_trace_domination_failure(&before, &after), None);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SearchConfig::new(Algorithm::Ls, 1, 0);
        cfg.validate().unwrap();
        cfg.m = 1..=3;
        assert!(cfg.validate().is_err());
        let mut cfg = SearchConfig::new(Algorithm::Ls, 0, 0);
        assert!(cfg.validate().is_err());
        cfg.trials = 1;
        #[allow(clippy::reversed_empty_ranges)]
        {
            cfg.values = 5..=4;
        }
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn multifit_search_always_hits_trial_zero() {
        let cfg = SearchConfig::new(Algorithm::Multifit, 1, 0);
        let hits = search_anomalies(&cfg).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].trial, 0);
        assert_eq!(hits[0].replay(), hits[0].result);
        assert_eq!(hits[0].regenerate(&cfg), hits[0].result);
        assert_eq!(vec![Condition::MaxDecreased, Condition::NoDomination], hits[0].result.violations);
    }
}
