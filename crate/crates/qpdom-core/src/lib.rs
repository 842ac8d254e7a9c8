//! Minimum [1,2]-dominating sets on interval graphs.
//!
//! A set `D` is [1,j]-dominating when every vertex outside `D` has between
//! one and `j` neighbours inside it.  This crate provides:
//!
//! * [`graph`]: interval, chord-diagram and plain graph models, the
//!   right-endpoint vertex numbering and the `low`/`maxlow` tables.
//! * [`oracle`]: an exponential exact search used as ground truth.
//! * [`dp`]: the polynomial dynamic program over eight memoized tables.
//! * [`reduction`]: the 3SAT to circle-graph gadget and its desk-scale checks.
//! * [`gen`]: seeded instance generators.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use qpdom_core::graph::IntervalGraph;
//! use qpdom_core::dp::solve_gamma12;
//!
//! let g = IntervalGraph::from_intervals(&[(1.0, 3.0), (2.0, 5.0), (4.0, 6.0)]).unwrap();
//! let sol = solve_gamma12(&g).unwrap();
//! assert_eq!(sol.value, 1);
//! assert_eq!(sol.witness, vec![2]);
//! ```
#![no_std]

extern crate alloc;

pub mod dp;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod reduction;

pub use graph::Multiplicity;
