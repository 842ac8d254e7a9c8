//! Exponential exact search for minimum [1,j]-dominating sets.
//!
//! Branching always picks the lowest vertex that is outside the partial set
//! and still undominated.  Its closed neighbourhood is tried in increasing
//! order, each tried candidate being excluded from the later branches.
//! Bitsets limit graphs to 64 vertices; the configured caps are lower.

use alloc::vec::Vec;

use crate::dp::{GammaKey, KeyRangeError};
use crate::graph::{Graph, IntervalGraph, Multiplicity};

/// Forced and forbidden members.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MembershipConstraint {
    pub must_include: Vec<usize>,
    pub must_exclude: Vec<usize>,
}

impl MembershipConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.must_include.is_empty() && self.must_exclude.is_empty()
    }
}

/// Outcome of one search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` is UNDEFINED: no feasible set (within the budget, if any).
    pub value: Option<usize>,
    /// Sorted members of a set of size `value`.
    pub witness: Option<Vec<usize>>,
    /// Set when a budget was given and every feasible set exceeds it.
    pub exceeds_budget: bool,
}

/// Vertex caps.  They guard running time and do not affect results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub unconstrained_cap: usize,
    /// Applies when a constraint or a budget is present.
    pub constrained_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { unconstrained_cap: 25, constrained_cap: 40 }
    }
}

/// Hard limit of the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is both required and forbidden")]
    Conflict(usize),
    #[error(transparent)]
    Key(#[from] KeyRangeError),
}

struct Search {
    nb: Vec<u64>,
    all: u64,
    j: u32,
}

impl Search {
    fn new(g: &Graph, j: Multiplicity) -> Self {
        let n = g.n();
        let nb = (1..=n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << (u - 1)))
            .collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Search { nb, all, j: j.bound().min(u32::MAX as usize) as u32 }
    }

    fn seen(&self, v: usize, s: u64) -> u32 {
        (self.nb[v] & s).count_ones()
    }

    fn first_over(&self, mut m: u64, s: u64) -> Option<usize> {
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.seen(v, s) > self.j {
                return Some(v);
            }
            m &= m - 1;
        }
        None
    }

    fn first_undominated(&self, s: u64) -> Option<usize> {
        let mut m = self.all & !s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.nb[v] & s == 0 {
                return Some(v);
            }
            m &= m - 1;
        }
        None
    }

    /// Some feasible superset of `s` avoiding `out` with at most `budget`
    /// members.
    fn find(&self, s: u64, out: u64, size: u32, budget: u32) -> Option<u64> {
        if self.first_over(out, s).is_some() {
            return None;
        }
        if let Some(v) = self.first_undominated(s) {
            if size == budget {
                return None;
            }
            let mut cand = ((1u64 << v) | self.nb[v]) & !s & !out;
            let mut out = out;
            while cand != 0 {
                let u = 1u64 << cand.trailing_zeros();
                if let Some(r) = self.find(s | u, out, size + 1, budget) {
                    return Some(r);
                }
                out |= u;
                cand &= cand - 1;
            }
            return None;
        }
        // everyone is dominated; an over-dominated vertex can only be fixed
        // by taking it
        match self.first_over(self.all & !s, s) {
            None => Some(s),
            Some(_) if size == budget => None,
            Some(w) => self.find(s | 1 << w, out, size + 1, budget),
        }
    }

    /// Calls `f` once for every feasible superset of `s` avoiding `out`
    /// with at most `max` members.
    fn each(&self, s: u64, out: u64, size: u32, max: u32, f: &mut dyn FnMut(u64)) {
        if self.first_over(out, s).is_some() {
            return;
        }
        if let Some(v) = self.first_undominated(s) {
            if size == max {
                return;
            }
            let mut cand = ((1u64 << v) | self.nb[v]) & !s & !out;
            let mut out = out;
            while cand != 0 {
                let u = 1u64 << cand.trailing_zeros();
                self.each(s | u, out, size + 1, max, f);
                out |= u;
                cand &= cand - 1;
            }
            return;
        }
        if let Some(w) = self.first_over(self.all & !s, s) {
            if size < max {
                self.each(s | 1 << w, out, size + 1, max, f);
            }
            return;
        }
        f(s);
        // strict supersets, split by their smallest extra member
        let mut free = self.all & !s & !out;
        let mut out = out;
        while free != 0 && size < max {
            let x = 1u64 << free.trailing_zeros();
            self.each(s | x, out, size + 1, max, f);
            out |= x;
            free &= free - 1;
        }
    }
}

fn mask_of(g: &Graph, vs: &[usize]) -> Result<u64, OracleError> {
    let mut m = 0u64;
    for &v in vs {
        if v == 0 || v > g.n() {
            return Err(OracleError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        m |= 1 << (v - 1);
    }
    Ok(m)
}

fn members(m: u64) -> Vec<usize> {
    (0..64).filter(|&b| m >> b & 1 == 1).map(|b| b + 1).collect()
}

fn prepare(
    g: &Graph,
    c: &MembershipConstraint,
    constrained: bool,
    cfg: &OracleConfig,
) -> Result<(u64, u64), OracleError> {
    let cap = if constrained { cfg.constrained_cap } else { cfg.unconstrained_cap }.min(MAX_VERTICES);
    if g.n() > cap {
        return Err(OracleError::CapExceeded { n: g.n(), cap });
    }
    let inc = mask_of(g, &c.must_include)?;
    let exc = mask_of(g, &c.must_exclude)?;
    if inc & exc != 0 {
        return Err(OracleError::Conflict(inc.trailing_zeros() as usize + 1));
    }
    Ok((inc, exc))
}

/// Exact minimum over [1,j]-dominating sets satisfying `c`.
pub fn min_dom(g: &Graph, j: Multiplicity, c: &MembershipConstraint) -> Result<OracleResult, OracleError> {
    min_dom_with(g, j, c, None, &OracleConfig::default())
}

/// [`min_dom`] with an optional budget and explicit caps.
pub fn min_dom_with(
    g: &Graph,
    j: Multiplicity,
    c: &MembershipConstraint,
    budget: Option<usize>,
    cfg: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    let (inc, exc) = prepare(g, c, !c.is_empty() || budget.is_some(), cfg)?;
    let search = Search::new(g, j);
    let start = inc.count_ones();
    let limit = budget.unwrap_or(g.n()).min(g.n()) as u32;
    for b in start..=limit.max(start) {
        if b > limit {
            break;
        }
        if let Some(s) = search.find(inc, exc, start, b) {
            return Ok(OracleResult { value: Some(b as usize), witness: Some(members(s)), exceeds_budget: false });
        }
    }
    let exceeds_budget = match budget {
        Some(k) if k < g.n() => search.find(inc, exc, start, g.n() as u32).is_some(),
        _ => false,
    };
    Ok(OracleResult { value: None, witness: None, exceeds_budget })
}

/// Minimum if it is at most `budget`, otherwise UNDEFINED flagged as
/// exceeding the budget.
pub fn min_dom_bounded(g: &Graph, j: Multiplicity, budget: usize) -> Result<OracleResult, OracleError> {
    min_dom_with(g, j, &MembershipConstraint::none(), Some(budget), &OracleConfig::default())
}

/// Ground truth of one table entry: the key becomes a prefix plus a
/// membership constraint, searched with `j = 2`.
pub fn gamma_oracle(g: &IntervalGraph, key: GammaKey) -> Result<OracleResult, OracleError> {
    key.validate(g.n())?;
    let kc = key.constraint();
    let prefix = g.graph().induced_prefix(kc.prefix).map_err(|_| OracleError::VertexOutOfRange {
        vertex: kc.prefix,
        n: g.n(),
    })?;
    let c = MembershipConstraint { must_include: kc.include, must_exclude: kc.exclude };
    min_dom_with(&prefix, Multiplicity::AtMost(2), &c, None, &OracleConfig::default())
}

/// Every [1,j]-dominating set with at most `max_size` members satisfying
/// `c`, each reported once as a sorted member list.
pub fn for_each_dominating_set(
    g: &Graph,
    j: Multiplicity,
    max_size: usize,
    c: &MembershipConstraint,
    cfg: &OracleConfig,
    mut f: impl FnMut(&[usize]),
) -> Result<(), OracleError> {
    let (inc, exc) = prepare(g, c, true, cfg)?;
    let search = Search::new(g, j);
    let max = max_size.min(g.n()) as u32;
    if inc.count_ones() > max {
        return Ok(());
    }
    search.each(inc, exc, inc.count_ones(), max, &mut |s| f(&members(s)));
    Ok(())
}
