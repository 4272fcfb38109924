//! Number-partitioning heuristics and the machinery to test their monotonicity.
//!
//! The crate provides List Scheduling (LS), Longest Processing Time first
//! (LPT), First Fit Decreasing (FFD) at a fixed capacity and MultiFit, a list
//! scheduler for jobs with dependency DAGs, exhaustive reference solvers, and
//! a harness that perturbs instances and compares outputs under the
//! domination order on sum vectors.
//!
//! Everything here is pure and allocation-only; file formats and the
//! command-line front end live in the `partmono` crate.
//!
//! ```
//! use partmono_core::{algos, dominates, Instance};
//!
//! let before = algos::run_ls(&Instance::new(vec![18, 10, 6, 4], 2).unwrap()).0;
//! let after = algos::run_ls(&Instance::new(vec![18, 10, 9, 4], 2).unwrap()).0;
//! assert_eq!(before.sums(), &[18, 20]);
//! assert_eq!(after.sums(), &[22, 19]);
//! assert!(dominates(&after.sum_vector(), &before.sum_vector()).unwrap().is_some());
//! ```

#![no_std]

extern crate alloc;

pub mod algos;
pub mod domination;
pub mod harness;
pub mod model;
pub mod oracle;
pub mod precedence;

pub use domination::{dominates, DominationWitness, LengthMismatch};
pub use model::{Instance, InstanceError, Partition, PartitionError, SumVector};
