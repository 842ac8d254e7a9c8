//! Graph models, the RR numbering and domination checks.
//!
//! Vertices are numbered `1..=n` everywhere.

mod chord;
mod domination;
mod index;
mod interval;

use alloc::vec;
use alloc::vec::Vec;

pub use chord::{chords_to_graph, overlap_graph, Chord, ChordDiagram};
pub use domination::{is_1j_dominating, DominationCertificate, Multiplicity};
pub use index::NeighborhoodIndex;
pub use interval::{find_numbering_violation, verify_numbering, Interval, IntervalGraph};

/// Errors raised while building or querying graph models.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self loop on vertex {0}")]
    SelfLoop(usize),
    #[error("interval {index} is degenerate: left {left} must be below right {right}")]
    DegenerateInterval { index: usize, left: f64, right: f64 },
    #[error("the interval list is empty")]
    Empty,
    #[error("position {0} is used twice")]
    DuplicatePosition(usize),
    #[error("position {position} is outside 0..{limit}")]
    PositionOutOfRange { position: usize, limit: usize },
    #[error("numbering property fails: {i}-{k} is an edge but {j}-{k} is not")]
    NumberingViolated { i: usize, j: usize, k: usize },
    #[error("crossing and overlap models disagree on chords {0} and {1}")]
    ModelMismatch(usize, usize),
}

/// Undirected simple graph on `1..=n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n + 1] }
    }

    /// Builds a graph from a 1-based edge list.  Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for row in &mut g.adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len().saturating_sub(1)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u <= self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n() {
            out.extend(self.adj[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `1..=i`.
    pub fn induced_prefix(&self, i: usize) -> Result<Graph, GraphError> {
        if i == 0 || i > self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: i, n: self.n() });
        }
        let adj = self.adj[..=i]
            .iter()
            .map(|row| row.iter().copied().filter(|&v| v <= i).collect())
            .collect();
        Ok(Graph { adj })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }
}
