use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, GraphError};

/// A labelled chord between two circle positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub label: String,
    pub p: usize,
    pub q: usize,
}

impl Chord {
    fn span(&self) -> (usize, usize) {
        (self.p.min(self.q), self.p.max(self.q))
    }
}

/// `N` chords on the positions `0..2N`, each position used once.
///
/// Chord `i` of the list is vertex `i + 1` of the derived graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChordDiagram {
    chords: Vec<Chord>,
}

impl ChordDiagram {
    pub fn new(chords: Vec<Chord>) -> Result<Self, GraphError> {
        let limit = 2 * chords.len();
        let mut used = vec![false; limit];
        for c in &chords {
            for pos in [c.p, c.q] {
                if pos >= limit {
                    return Err(GraphError::PositionOutOfRange { position: pos, limit });
                }
                if used[pos] {
                    return Err(GraphError::DuplicatePosition(pos));
                }
                used[pos] = true;
            }
        }
        Ok(ChordDiagram { chords })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Whether chords `a` and `b` (0-based) cross: exactly one endpoint of
    /// `b` lies strictly between the endpoints of `a`.
    pub fn crosses(&self, a: usize, b: usize) -> bool {
        let (p, q) = self.chords[a].span();
        let inside = |x: usize| p < x && x < q;
        inside(self.chords[b].p) != inside(self.chords[b].q)
    }
}

/// Intersection graph via the crossing relation, cross-checked against the
/// interval model (overlap without containment).
pub fn chords_to_graph(d: &ChordDiagram) -> Result<Graph, GraphError> {
    let crossing = crossing_graph(d);
    let overlap = overlap_graph(d);
    if crossing != overlap {
        let n = d.len();
        for a in 1..=n {
            for b in a + 1..=n {
                if crossing.has_edge(a, b) != overlap.has_edge(a, b) {
                    return Err(GraphError::ModelMismatch(a, b));
                }
            }
        }
    }
    Ok(crossing)
}

fn crossing_graph(d: &ChordDiagram) -> Graph {
    let n = d.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if d.crosses(a, b) {
                edges.push((a + 1, b + 1));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("chord indices are in range")
}

/// Graph of the interval representation: each chord becomes `[min, max]`,
/// adjacent when the intervals overlap and neither contains the other.
pub fn overlap_graph(d: &ChordDiagram) -> Graph {
    let n = d.len();
    let spans: Vec<(usize, usize)> = d.chords.iter().map(Chord::span).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (l1, r1) = spans[a];
            let (l2, r2) = spans[b];
            let overlap = l1 < r2 && l2 < r1;
            let contains = (l1 < l2 && r2 < r1) || (l2 < l1 && r1 < r2);
            if overlap && !contains {
                edges.push((a + 1, b + 1));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("chord indices are in range")
}
