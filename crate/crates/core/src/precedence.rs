//! List scheduling of jobs with dependencies on identical machines.
//!
//! Two dispatch rules are provided because "the first machine that becomes
//! available" admits two common readings:
//!
//! * [`DispatchPolicy::EventDriven`] simulates time. Whenever a machine is
//!   idle it takes the first job in list order whose dependencies have all
//!   finished; simultaneously idle machines are served lowest index first,
//!   and a machine with nothing ready idles until the next completion.
//! * [`DispatchPolicy::ListOrder`] commits jobs one at a time in list order.
//!   A job is ready when its last dependency finishes and goes to the machine
//!   minimising `max(ready, machine free time)`, lowest index on ties. If the
//!   list is not a topological order, the next job committed is the first
//!   one in list order whose dependencies are all committed.
//!
//! Time is integral; every job runs without preemption.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::model::{checked_total, SumVector};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Job {
    pub id: String,
    pub time: u64,
}

impl Job {
    pub fn new(id: impl Into<String>, time: u64) -> Self {
        Job { id: id.into(), time }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecedenceError {
    #[error("machine count must be at least 1")]
    NoMachines,
    #[error("job {0} has processing time 0")]
    ZeroTime(String),
    #[error("job id {0} is declared twice")]
    DuplicateId(String),
    #[error("dependency refers to unknown job {0}")]
    UnknownJob(String),
    #[error("dependency edge refers to job index {0}, out of range")]
    IndexOutOfRange(usize),
    #[error("dependencies contain a cycle through job {0}")]
    Cycle(String),
    #[error("total processing time overflows u64")]
    TimeOverflow,
}

/// Jobs in list order, dependency edges and a machine count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrecedenceInstance {
    jobs: Vec<Job>,
    /// `preds[b]` holds every `a` with an edge `a -> b`, ascending.
    preds: Vec<Vec<usize>>,
    m: usize,
}

impl PrecedenceInstance {
    /// `edges` are `(a, b)` pairs of job indices meaning `b` waits for `a`.
    pub fn new(jobs: Vec<Job>, edges: &[(usize, usize)], m: usize) -> Result<Self, PrecedenceError> {
        if m == 0 {
            return Err(PrecedenceError::NoMachines);
        }
        let mut ids = BTreeSet::new();
        for job in &jobs {
            if job.time == 0 {
                return Err(PrecedenceError::ZeroTime(job.id.clone()));
            }
            if !ids.insert(job.id.as_str()) {
                return Err(PrecedenceError::DuplicateId(job.id.clone()));
            }
        }
        let times: Vec<u64> = jobs.iter().map(|j| j.time).collect();
        checked_total(&times).ok_or(PrecedenceError::TimeOverflow)?;

        let mut preds = vec![Vec::new(); jobs.len()];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= jobs.len() {
                    return Err(PrecedenceError::IndexOutOfRange(x));
                }
            }
            preds[b].push(a);
        }
        for p in &mut preds {
            p.sort_unstable();
            p.dedup();
        }
        let inst = PrecedenceInstance { jobs, preds, m };
        inst.commit_order()?;
        Ok(inst)
    }

    /// Like [`PrecedenceInstance::new`] with edges given by job id.
    pub fn from_ids(jobs: Vec<Job>, edges: &[(&str, &str)], m: usize) -> Result<Self, PrecedenceError> {
        let lookup = |id: &str| {
            jobs.iter()
                .position(|j| j.id == id)
                .ok_or_else(|| PrecedenceError::UnknownJob(id.into()))
        };
        let idx = edges
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, PrecedenceError>>()?;
        PrecedenceInstance::new(jobs, &idx, m)
    }

    /// Same jobs with all dependencies removed.
    pub fn without_deps(&self) -> Self {
        PrecedenceInstance { jobs: self.jobs.clone(), preds: vec![Vec::new(); self.jobs.len()], m: self.m }
    }

    pub fn with_m(&self, m: usize) -> Result<Self, PrecedenceError> {
        if m == 0 {
            return Err(PrecedenceError::NoMachines);
        }
        Ok(PrecedenceInstance { m, ..self.clone() })
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn times(&self) -> Vec<u64> {
        self.jobs.iter().map(|j| j.time).collect()
    }

    /// Indices of the jobs that `job` waits for.
    pub fn preds(&self, job: usize) -> &[usize] {
        &self.preds[job]
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    /// Stable topological order: repeatedly the first job in list order whose
    /// dependencies are all taken. Fails on a cycle.
    fn commit_order(&self) -> Result<Vec<usize>, PrecedenceError> {
        let n = self.jobs.len();
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n).find(|&j| !done[j] && self.preds[j].iter().all(|&p| done[p]));
            match next {
                Some(j) => {
                    done[j] = true;
                    order.push(j);
                }
                None => {
                    let stuck = (0..n).find(|&j| !done[j]).unwrap_or(0);
                    return Err(PrecedenceError::Cycle(self.jobs[stuck].id.clone()));
                }
            }
        }
        Ok(order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DispatchPolicy {
    EventDriven,
    ListOrder,
}

impl DispatchPolicy {
    pub const ALL: [DispatchPolicy; 2] = [DispatchPolicy::EventDriven, DispatchPolicy::ListOrder];

    pub fn name(self) -> &'static str {
        match self {
            DispatchPolicy::EventDriven => "event",
            DispatchPolicy::ListOrder => "list-order",
        }
    }
}

impl fmt::Display for DispatchPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown dispatch policy {0:?} (expected \"event\" or \"list-order\")")]
pub struct UnknownPolicy(pub String);

impl FromStr for DispatchPolicy {
    type Err = UnknownPolicy;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "event" | "event-driven" => Ok(DispatchPolicy::EventDriven),
            "list-order" | "list" => Ok(DispatchPolicy::ListOrder),
            _ => Err(UnknownPolicy(s.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub machine: usize,
    pub start: u64,
    pub finish: u64,
}

/// Where and when each job (by list index) ran.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schedule {
    pub policy: DispatchPolicy,
    pub m: usize,
    pub assignments: Vec<Assignment>,
    pub makespan: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("schedule has {actual} assignments for {expected} jobs")]
    JobCount { expected: usize, actual: usize },
    #[error("job {0}: finish is not start plus processing time, or machine out of range")]
    BadAssignment(usize),
    #[error("jobs {0} and {1} overlap on the same machine")]
    Overlap(usize, usize),
    #[error("job {job} starts before its dependency {dep} finishes")]
    Dependency { job: usize, dep: usize },
    #[error("stored makespan {stored} differs from the latest finish {actual}")]
    Makespan { stored: u64, actual: u64 },
}

impl Schedule {
    /// Finish time of the last job on each machine (0 for unused machines).
    pub fn machine_finish_times(&self) -> SumVector {
        let mut out = vec![0u64; self.m];
        for a in &self.assignments {
            out[a.machine] = out[a.machine].max(a.finish);
        }
        SumVector::new(out)
    }

    /// Total processing time placed on each machine.
    pub fn machine_loads(&self) -> SumVector {
        let mut out = vec![0u64; self.m];
        for a in &self.assignments {
            out[a.machine] += a.finish - a.start;
        }
        SumVector::new(out)
    }

    /// Job indices on `machine`, by start time.
    pub fn machine_jobs(&self, machine: usize) -> Vec<usize> {
        let mut jobs: Vec<usize> =
            (0..self.assignments.len()).filter(|&j| self.assignments[j].machine == machine).collect();
        jobs.sort_by_key(|&j| self.assignments[j].start);
        jobs
    }

    pub fn validate(&self, inst: &PrecedenceInstance) -> Result<(), ScheduleError> {
        if self.assignments.len() != inst.n() {
            return Err(ScheduleError::JobCount { expected: inst.n(), actual: self.assignments.len() });
        }
        for (j, a) in self.assignments.iter().enumerate() {
            if a.machine >= self.m || a.start.checked_add(inst.jobs[j].time) != Some(a.finish) {
                return Err(ScheduleError::BadAssignment(j));
            }
            for &p in inst.preds(j) {
                if self.assignments[p].finish > a.start {
                    return Err(ScheduleError::Dependency { job: j, dep: p });
                }
            }
        }
        for machine in 0..self.m {
            let jobs = self.machine_jobs(machine);
            for w in jobs.windows(2) {
                if self.assignments[w[0]].finish > self.assignments[w[1]].start {
                    return Err(ScheduleError::Overlap(w[0], w[1]));
                }
            }
        }
        let actual = self.assignments.iter().map(|a| a.finish).max().unwrap_or(0);
        if actual != self.makespan {
            return Err(ScheduleError::Makespan { stored: self.makespan, actual });
        }
        Ok(())
    }
}

/// Runs list scheduling under `policy`.
pub fn schedule(inst: &PrecedenceInstance, policy: DispatchPolicy) -> Schedule {
    let assignments = match policy {
        DispatchPolicy::EventDriven => event_driven(inst),
        DispatchPolicy::ListOrder => list_order(inst),
    };
    let makespan = assignments.iter().map(|a| a.finish).max().unwrap_or(0);
    Schedule { policy, m: inst.m, assignments, makespan }
}

fn event_driven(inst: &PrecedenceInstance) -> Vec<Assignment> {
    let n = inst.n();
    let mut out: Vec<Option<Assignment>> = vec![None; n];
    let mut free_at = vec![0u64; inst.m];
    let mut placed = 0;
    let mut now = 0u64;
    loop {
        for (machine, free) in free_at.iter_mut().enumerate() {
            if *free > now {
                continue;
            }
            let ready = (0..n).find(|&j| {
                out[j].is_none()
                    && inst.preds[j].iter().all(|&p| matches!(out[p], Some(a) if a.finish <= now))
            });
            if let Some(j) = ready {
                let finish = now + inst.jobs[j].time;
                out[j] = Some(Assignment { machine, start: now, finish });
                *free = finish;
                placed += 1;
            }
        }
        if placed == n {
            break;
        }
        // Acyclic, so something is running whenever jobs remain.
        now = free_at
            .iter()
            .copied()
            .filter(|&t| t > now)
            .min()
            .expect("a running job while unscheduled jobs remain");
    }
    out.into_iter().map(|a| a.expect("every job placed")).collect()
}

fn list_order(inst: &PrecedenceInstance) -> Vec<Assignment> {
    let order = inst.commit_order().expect("validated acyclic at construction");
    let mut out: Vec<Option<Assignment>> = vec![None; inst.n()];
    let mut free_at = vec![0u64; inst.m];
    for j in order {
        let ready = inst.preds[j]
            .iter()
            .map(|&p| out[p].expect("dependencies are committed first").finish)
            .max()
            .unwrap_or(0);
        let mut machine = 0;
        for k in 1..inst.m {
            if ready.max(free_at[k]) < ready.max(free_at[machine]) {
                machine = k;
            }
        }
        let start = ready.max(free_at[machine]);
        let finish = start + inst.jobs[j].time;
        out[j] = Some(Assignment { machine, start, finish });
        free_at[machine] = finish;
    }
    out.into_iter().map(|a| a.expect("every job placed")).collect()
}

/// `after.makespan - before.makespan`; positive means the later run is longer.
pub fn makespan_delta(before: &Schedule, after: &Schedule) -> i128 {
    i128::from(after.makespan) - i128::from(before.makespan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    /// Jobs 1..=9 with times `t`; jobs 5..=8 wait for job 4.
    fn nine_jobs(t: [u64; 9], m: usize) -> PrecedenceInstance {
        let jobs = t.iter().enumerate().map(|(i, &t)| Job::new(format!("{}", i + 1), t)).collect();
        PrecedenceInstance::new(jobs, &[(3, 4), (3, 5), (3, 6), (3, 7)], m).unwrap()
    }

    const ORIGINAL: [u64; 9] = [30, 21, 22, 20, 40, 40, 40, 40, 90];
    const SHRUNK: [u64; 9] = [22, 11, 12, 10, 30, 30, 30, 30, 80];

    #[test]
    fn event_driven_original_three_machines() {
        let inst = nine_jobs(ORIGINAL, 3);
        let s = schedule(&inst, DispatchPolicy::EventDriven);
        s.validate(&inst).unwrap();
        assert_eq!(s.makespan, 121);
        assert_eq!(s.machine_finish_times().entries(), &[121, 121, 112]);
        // the 90 is taken by the machine that frees up at time 22
        assert_eq!(s.assignments[8], Assignment { machine: 2, start: 22, finish: 112 });
    }

    #[test]
    fn event_driven_original_four_machines() {
        let inst = nine_jobs(ORIGINAL, 4);
        let s = schedule(&inst, DispatchPolicy::EventDriven);
        s.validate(&inst).unwrap();
        assert_eq!(s.makespan, 150);
    }

    #[test]
    fn list_order_shrunk() {
        let inst = nine_jobs(SHRUNK, 3);
        let s = schedule(&inst, DispatchPolicy::ListOrder);
        s.validate(&inst).unwrap();
        assert_eq!(s.machine_finish_times().entries(), &[52, 81, 131]);
        assert_eq!(s.makespan, 131);
    }

    #[test]
    fn event_driven_shrunk_differs() {
        let inst = nine_jobs(SHRUNK, 3);
        let s = schedule(&inst, DispatchPolicy::EventDriven);
        s.validate(&inst).unwrap();
        assert_eq!(s.makespan, 92);
        assert_eq!(s.assignments[8], Assignment { machine: 2, start: 12, finish: 92 });
    }

    #[test]
    fn deltas() {
        let a = schedule(&nine_jobs(ORIGINAL, 3), DispatchPolicy::EventDriven);
        let b = schedule(&nine_jobs(SHRUNK, 3), DispatchPolicy::ListOrder);
        let c = schedule(&nine_jobs(ORIGINAL, 4), DispatchPolicy::EventDriven);
        assert_eq!(makespan_delta(&a, &b), 10);
        assert_eq!(makespan_delta(&a, &c), 29);
        assert_eq!(makespan_delta(&a, &a), 0);
    }

    #[test]
    fn without_deps_matches_list_scheduling() {
        for (t, expected) in [(ORIGINAL, 160), (SHRUNK, 131)] {
            let inst = nine_jobs(t, 3).without_deps();
            for policy in DispatchPolicy::ALL {
                assert_eq!(schedule(&inst, policy).makespan, expected, "{policy}");
            }
        }
    }

    #[test]
    fn cycle_is_rejected() {
        let jobs = vec![Job::new("a", 1), Job::new("b", 1)];
        assert_eq!(
            PrecedenceInstance::from_ids(jobs.clone(), &[("a", "b"), ("b", "a")], 2),
            Err(PrecedenceError::Cycle("a".into()))
        );
        assert_eq!(
            PrecedenceInstance::from_ids(jobs, &[("b", "b")], 2),
            Err(PrecedenceError::Cycle("b".into()))
        );
    }

    #[test]
    fn construction_errors() {
        let jobs = vec![Job::new("a", 1), Job::new("a", 2)];
        assert_eq!(PrecedenceInstance::new(jobs, &[], 1), Err(PrecedenceError::DuplicateId("a".into())));
        assert_eq!(
            PrecedenceInstance::new(vec![Job::new("x", 0)], &[], 1),
            Err(PrecedenceError::ZeroTime("x".into()))
        );
        assert_eq!(PrecedenceInstance::new(vec![Job::new("x", 1)], &[], 0), Err(PrecedenceError::NoMachines));
        assert_eq!(
            PrecedenceInstance::from_ids(vec![Job::new("x", 1)], &[("y", "x")], 1),
            Err(PrecedenceError::UnknownJob("y".into()))
        );
    }

    #[test]
    fn list_order_handles_non_topological_lists() {
        // "b" is listed first but waits for "a".
        let jobs = vec![Job::new("b", 2), Job::new("a", 3)];
        let inst = PrecedenceInstance::from_ids(jobs, &[("a", "b")], 2).unwrap();
        for policy in DispatchPolicy::ALL {
            let s = schedule(&inst, policy);
            s.validate(&inst).unwrap();
            assert_eq!(s.makespan, 5);
        }
    }

    #[test]
    fn policy_names_round_trip() {
        for p in DispatchPolicy::ALL {
            assert_eq!(p.name().parse::<DispatchPolicy>(), Ok(p));
        }
        assert!("fifo".parse::<DispatchPolicy>().is_err());
    }
}
