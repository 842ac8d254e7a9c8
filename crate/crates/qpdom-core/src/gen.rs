//! Seeded instance generators.
//!
//! All randomness comes from [`SplitMix64`], so every instance is a pure
//! function of its seed on every platform.

use alloc::vec::Vec;

use crate::graph::{GraphError, IntervalGraph};
use crate::reduction::{CnfFormula, Literal};

/// The SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, bound)`, by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// An independent stream.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

/// Shape of random interval families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Left endpoints are integers in `[0, span)`.
    pub span: u64,
    /// Lengths are integers in `[1, max_len]`.
    pub max_len: u64,
}

impl GenSpec {
    pub fn new(n: usize) -> Self {
        GenSpec { n, span: 100, max_len: 30 }
    }
}

/// Random closed intervals with integer endpoints.
pub fn gen_intervals(spec: GenSpec, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = SplitMix64::new(seed);
    (0..spec.n)
        .map(|_| {
            let left = rng.below(spec.span.max(1)) as f64;
            let len = (1 + rng.below(spec.max_len.max(1))) as f64;
            (left, left + len)
        })
        .collect()
}

/// Random unit intervals; left endpoints are quarter integers in `[0, n/2)`.
pub fn gen_unit_intervals(n: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = SplitMix64::new(seed);
    let slots = (2 * n as u64).max(1);
    (0..n)
        .map(|_| {
            let left = rng.below(slots) as f64 / 4.0;
            (left, left + 1.0)
        })
        .collect()
}

/// Intervals at three scales: half are leaves of length 1 or 2 anywhere
/// in `[0, 100)`, a quarter have lengths `5..=30` on a grid of 5, and a
/// quarter have lengths `30..=90` on a grid of 10.  The grids make
/// near-twin hubs common, which plain uniform draws almost never give.
pub fn gen_multiscale_intervals(n: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let (left, len) = match rng.below(4) {
                0 | 1 => (rng.below(100), 1 + rng.below(2)),
                2 => (5 * rng.below(20), 5 * (1 + rng.below(6))),
                _ => (10 * rng.below(10), 10 * (3 + rng.below(7))),
            };
            (left as f64, (left + len) as f64)
        })
        .collect()
}

/// Builds the graph of a generated family.
pub fn gen_graph(intervals: &[(f64, f64)]) -> Result<IntervalGraph, GraphError> {
    IntervalGraph::from_intervals(intervals)
}

/// Random 3-CNF with `m` clauses over `t >= 3` variables; each clause has
/// three distinct variables with random signs.
pub fn gen_3sat(t: usize, m: usize, seed: u64) -> CnfFormula {
    assert!(t >= 3, "need at least three variables");
    let mut rng = SplitMix64::new(seed);
    let clauses = (0..m)
        .map(|_| {
            let mut vars = [0usize; 3];
            let mut c = 0;
            while c < 3 {
                let v = 1 + rng.below(t as u64) as usize;
                if !vars[..c].contains(&v) {
                    vars[c] = v;
                    c += 1;
                }
            }
            vars.map(|v| Literal::new(v, rng.coin()))
        })
        .collect();
    CnfFormula::new(t, clauses)
}
