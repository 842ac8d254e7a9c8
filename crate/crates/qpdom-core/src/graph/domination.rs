use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, GraphError};

/// Upper bound `j` on how many chosen neighbours an outside vertex may have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    AtMost(usize),
    Unbounded,
}

impl Multiplicity {
    pub fn bound(self) -> usize {
        match self {
            Multiplicity::AtMost(j) => j,
            Multiplicity::Unbounded => usize::MAX,
        }
    }
}

/// A vertex set with its checked [1,j] verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub vertices: Vec<usize>,
    pub j: Multiplicity,
    pub valid: bool,
    /// Outside vertices with a neighbour count outside `[1, j]`.
    pub violations: Vec<(usize, usize)>,
}

/// Checks whether `s` is a [1,j]-dominating set of `g`.
pub fn is_1j_dominating(
    g: &Graph,
    s: &[usize],
    j: Multiplicity,
) -> Result<DominationCertificate, GraphError> {
    let n = g.n();
    let mut inside = vec![false; n + 1];
    for &v in s {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    let mut violations = Vec::new();
    for v in 1..=n {
        if inside[v] {
            continue;
        }
        let c = g.neighbors(v).iter().filter(|&&u| inside[u]).count();
        if c == 0 || c > j.bound() {
            violations.push((v, c));
        }
    }
    let mut vertices: Vec<usize> = s.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(DominationCertificate { vertices, j, valid: violations.is_empty(), violations })
}
