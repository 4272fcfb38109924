//! The domination order on sum vectors.
//!
//! `s` dominates `t` when some permutation `pi` gives `s[pi(i)] >= t[i]` for
//! every `i`. Sorting both vectors ascending and comparing position by
//! position decides this exactly: if the sorted comparison fails at rank `k`,
//! the `m - k` largest entries of `t` would need `m - k` entries of `s` that
//! are all at least `sorted_t[k]`, and only `m - k - 1` exist.

use alloc::vec::Vec;

use thiserror::Error;

use crate::model::SumVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("sum vectors have different lengths ({left} vs {right})")]
pub struct LengthMismatch {
    pub left: usize,
    pub right: usize,
}

/// A permutation `pi` with `s[pi[i]] >= t[i]` for all `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominationWitness {
    permutation: Vec<usize>,
}

impl DominationWitness {
    /// Wraps `permutation` if it is a bijection on `0..len` (the inequality is
    /// not checked here, see [`DominationWitness::holds`]).
    pub fn from_permutation(permutation: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; permutation.len()];
        for &p in &permutation {
            if p >= seen.len() || core::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(DominationWitness { permutation })
    }

    pub fn identity(m: usize) -> Self {
        DominationWitness { permutation: (0..m).collect() }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Re-checks `s[pi[i]] >= t[i]` entrywise.
    pub fn holds(&self, s: &SumVector, t: &SumVector) -> bool {
        let (s, t) = (s.entries(), t.entries());
        s.len() == self.permutation.len()
            && t.len() == self.permutation.len()
            && self.permutation.iter().zip(t).all(|(&p, &ti)| s[p] >= ti)
    }

    pub(crate) fn swap(&mut self, a: usize, b: usize) {
        self.permutation.swap(a, b);
    }
}

/// Returns a witness that `s` dominates `t`, or `None` when no permutation
/// works.
pub fn dominates(s: &SumVector, t: &SumVector) -> Result<Option<DominationWitness>, LengthMismatch> {
    if s.len() != t.len() {
        return Err(LengthMismatch { left: s.len(), right: t.len() });
    }
    let order_s = ascending_order(s.entries());
    let order_t = ascending_order(t.entries());
    let (se, te) = (s.entries(), t.entries());
    let mut permutation = alloc::vec![0; s.len()];
    for (&i, &j) in order_s.iter().zip(&order_t) {
        if se[i] < te[j] {
            return Ok(None);
        }
        permutation[j] = i;
    }
    Ok(Some(DominationWitness { permutation }))
}

/// Indices of `v` in ascending value order, ties by index.
fn ascending_order(v: &[u64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by_key(|&i| v[i]);
    idx
}
