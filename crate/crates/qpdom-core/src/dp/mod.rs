//! The polynomial dynamic program for `γ[1,2]` on interval graphs.
//!
//! [`Evaluator`] computes the eight tables of [`GammaKey`] top-down with a
//! memo and records the minimizing branch of every entry, so witnesses can
//! be replayed.  [`solve_gamma12`] is the driver.
//!
//! Some branches of the textbook recurrences disagree with brute force.
//! [`Recurrences::Corrected`] (the default) replaces them.
//! [`Recurrences::Published`] keeps the original triple/run rules and
//! serves as a negative control.

mod eval;
mod key;
mod peel;

use alloc::vec::Vec;

pub use eval::{Evaluator, MemoStats, DEFAULT_MEMO_CAP};
pub use key::{GammaKey, KeyConstraint, KeyKind, KeyRangeError};

use crate::graph::{GraphError, IntervalGraph};

/// Value of one table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gamma {
    Value(usize),
    /// No set satisfies the side condition.
    Undefined,
    /// A pair entry strictly above the tail entry with the same left
    /// bound; consuming minima skip it.
    Dominated,
}

impl Gamma {
    pub fn value(self) -> Option<usize> {
        match self {
            Gamma::Value(v) => Some(v),
            _ => None,
        }
    }
}

/// Which recurrences drive the triple and run tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Recurrences {
    #[default]
    Corrected,
    Published,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DpError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Key(#[from] KeyRangeError),
    #[error("memo cap of {cap} entries exceeded")]
    MemoCap { cap: usize },
    #[error("the empty graph has no optimum to report")]
    EmptyGraph,
    #[error("internal inconsistency: {0}")]
    Internal(&'static str),
}

/// Result of [`solve_gamma12`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    /// Sorted member list of size `value`.
    pub witness: Vec<usize>,
    pub stats: MemoStats,
}

/// Computes `γ[1,2](G)` and a witness.
pub fn solve_gamma12(g: &IntervalGraph) -> Result<Solution, DpError> {
    solve_with(g, Recurrences::Corrected, eval::DEFAULT_MEMO_CAP)
}

/// [`solve_gamma12`] with an explicit recurrence set and memo cap.
pub fn solve_with(g: &IntervalGraph, rec: Recurrences, memo_cap: usize) -> Result<Solution, DpError> {
    let n = g.n();
    if n == 0 {
        return Err(DpError::EmptyGraph);
    }
    let mut ev = Evaluator::with_options(g, rec, memo_cap)?;
    // bottom-up over prefixes keeps the recursion depth small
    for p in 1..n {
        ev.prefix_optimum(p)?;
    }
    let value = ev.prefix_optimum(n)?;
    let mut witness = ev.prefix_witness(n)?;
    witness.sort_unstable();
    if witness.len() != value {
        return Err(DpError::Internal("witness size differs from the value"));
    }
    Ok(Solution { value, witness, stats: ev.stats() })
}
