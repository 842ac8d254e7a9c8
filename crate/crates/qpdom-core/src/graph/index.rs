use alloc::vec;
use alloc::vec::Vec;

use super::{find_numbering_violation, Graph, GraphError};

/// `low`, `lowRange` and `maxlow` for a graph in RR order.
///
/// `low(a) = min N[a]`, `lowRange(a, b) = min{low(k) : a <= k <= b}` and
/// `maxlow(a) = max{low(k) : low(a) <= k <= a}`.  `lowRange` is kept as a
/// full triangular table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodIndex {
    n: usize,
    low: Vec<usize>,
    maxlow: Vec<usize>,
    // row a holds lowRange(a, a..=n)
    range: Vec<u32>,
    row_start: Vec<usize>,
}

impl NeighborhoodIndex {
    pub fn build(g: &Graph) -> Result<Self, GraphError> {
        if let Some((i, j, k)) = find_numbering_violation(g) {
            return Err(GraphError::NumberingViolated { i, j, k });
        }
        let n = g.n();
        let mut low = vec![0; n + 1];
        for (a, l) in low.iter_mut().enumerate().skip(1) {
            *l = g.neighbors(a).first().map_or(a, |&v| v.min(a));
        }
        let mut maxlow = vec![0; n + 1];
        for a in 1..=n {
            maxlow[a] = (low[a]..=a).map(|k| low[k]).max().unwrap_or(a);
        }
        let mut row_start = vec![0; n + 2];
        for a in 1..=n {
            row_start[a + 1] = row_start[a] + (n - a + 1);
        }
        let mut range = vec![0u32; row_start[n + 1]];
        for a in 1..=n {
            let mut cur = u32::MAX;
            for b in a..=n {
                cur = cur.min(low[b] as u32);
                range[row_start[a] + (b - a)] = cur;
            }
        }
        Ok(NeighborhoodIndex { n, low, maxlow, range, row_start })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn low(&self, a: usize) -> usize {
        self.low[a]
    }

    pub fn maxlow(&self, a: usize) -> usize {
        self.maxlow[a]
    }

    /// `lowRange(a, b)`, or `None` for an empty range.
    pub fn low_range(&self, a: usize, b: usize) -> Option<usize> {
        if a > b || a == 0 || b > self.n {
            None
        } else {
            Some(self.range[self.row_start[a] + (b - a)] as usize)
        }
    }

    /// `lowRange(a, b)` with the empty range read as `usize::MAX`.
    pub fn low_range_or_inf(&self, a: usize, b: usize) -> usize {
        self.low_range(a, b).unwrap_or(usize::MAX)
    }

    /// The whole `low` array, 1-based (slot 0 unused).
    pub fn lows(&self) -> &[usize] {
        &self.low
    }
}
