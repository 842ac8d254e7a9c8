use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Graph, GraphError};

/// A closed interval with its RR vertex id.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub id: usize,
    pub left: f64,
    pub right: f64,
    /// Position of the interval in the caller's input list (0-based).
    pub input_index: usize,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// A graph whose numbering satisfies the RR property.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalGraph {
    graph: Graph,
    source: Option<Vec<Interval>>,
}

impl IntervalGraph {
    /// Renumbers by right endpoint (ties: left endpoint, then input order)
    /// and joins intervals that share a point.
    pub fn from_intervals(intervals: &[(f64, f64)]) -> Result<Self, GraphError> {
        if intervals.is_empty() {
            return Err(GraphError::Empty);
        }
        for (index, &(left, right)) in intervals.iter().enumerate() {
            // NaN fails this comparison too
            if !left.is_finite() || !right.is_finite() || left >= right {
                return Err(GraphError::DegenerateInterval { index, left, right });
            }
        }
        let mut order: Vec<usize> = (0..intervals.len()).collect();
        order.sort_by(|&a, &b| {
            let (la, ra) = intervals[a];
            let (lb, rb) = intervals[b];
            ra.partial_cmp(&rb)
                .unwrap_or(Ordering::Equal)
                .then(la.partial_cmp(&lb).unwrap_or(Ordering::Equal))
                .then(a.cmp(&b))
        });
        let source: Vec<Interval> = order
            .iter()
            .enumerate()
            .map(|(pos, &input_index)| Interval {
                id: pos + 1,
                left: intervals[input_index].0,
                right: intervals[input_index].1,
                input_index,
            })
            .collect();
        let n = source.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if source[a].intersects(&source[b]) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges)?;
        debug_assert!(verify_numbering(&graph));
        Ok(IntervalGraph { graph, source: Some(source) })
    }

    /// Wraps a graph given directly, e.g. read from an edge list.
    pub fn from_graph(graph: Graph) -> Result<Self, GraphError> {
        if let Some((i, j, k)) = find_numbering_violation(&graph) {
            return Err(GraphError::NumberingViolated { i, j, k });
        }
        Ok(IntervalGraph { graph, source: None })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> Option<&[Interval]> {
        self.source.as_deref()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `G[1, i]`.  The RR property is hereditary on prefixes.
    pub fn induced_prefix(&self, i: usize) -> Result<IntervalGraph, GraphError> {
        let graph = self.graph.induced_prefix(i)?;
        let source = self.source.as_ref().map(|s| s[..i].to_vec());
        Ok(IntervalGraph { graph, source })
    }
}

/// True iff `ik ∈ E` and `i < j < k` imply `jk ∈ E`.
pub fn verify_numbering(g: &Graph) -> bool {
    find_numbering_violation(g).is_none()
}

/// A witness triple `(i, j, k)` against the RR property, if any.
///
/// The property holds iff the lower neighbours of every `k` form the
/// contiguous range `[min, k)`, which this checks in `O(n + m)`.
pub fn find_numbering_violation(g: &Graph) -> Option<(usize, usize, usize)> {
    for k in 1..=g.n() {
        let lower: Vec<usize> = g.neighbors(k).iter().copied().take_while(|&v| v < k).collect();
        let Some(&i) = lower.first() else { continue };
        if lower.len() != k - i {
            let mut expect = i;
            for &v in &lower {
                if v != expect {
                    return Some((i, expect, k));
                }
                expect += 1;
            }
            return Some((i, expect, k));
        }
    }
    None
}
