//! Exact top-down walk over the members of `D`.
//!
//! The walk visits the members of `D ∩ [1, top]` in decreasing order.  A
//! state records the current member `s`, the three smallest `low` values
//! of the members above `s` (values `>= s` are dropped, they can no longer
//! matter) and two caps coming from vertices already passed:
//!
//! * `h1`: every later member is `< h1`,
//! * `h2`: at most two members lie in `[h2, s]`.
//!
//! Choosing the next member `nxt` turns every `v ∈ (nxt, s)` into a
//! non-member.  With `κ(v)` the number of members above `nxt` adjacent to
//! `v`, the RR property makes the neighbours of `v` among lower members
//! exactly those in `[low(v), nxt]`, which gives the four rules in
//! [`Peel::moves`].

use alloc::vec::Vec;
use hashbrown::HashMap;

const INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct State {
    s: u32,
    e: [u32; 3],
    h1: u32,
    h2: u32,
}

pub(crate) struct Peel {
    low: Vec<usize>,
    memo: HashMap<State, u32>,
}

impl Peel {
    pub(crate) fn new(low: Vec<usize>) -> Self {
        Peel { low, memo: HashMap::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.memo.len()
    }

    fn lows_with(&self, st: &State) -> [u32; 3] {
        let mut all = [st.e[0], st.e[1], st.e[2], self.low[st.s as usize] as u32];
        all.sort_unstable();
        [all[0], all[1], all[2]]
    }

    fn kappa(e: &[u32; 3], v: u32) -> u32 {
        e.iter().filter(|&&x| x <= v).count() as u32
    }

    /// One forced step to `nxt >= 1`, checked vertex by vertex.
    fn step(&self, st: &State, nxt: u32) -> Option<State> {
        if nxt == 0 || nxt >= st.s || nxt >= st.h1 {
            return None;
        }
        let e = self.lows_with(st);
        let mut h1 = if st.h2 <= nxt { st.h2 } else { INF };
        let mut h2 = INF;
        for v in nxt + 1..st.s {
            let a = self.low[v as usize] as u32;
            match Self::kappa(&e, v) {
                0 if a > nxt => return None,
                0 => h2 = h2.min(a),
                1 if a <= nxt => h1 = h1.min(a),
                1 => {}
                2 if a <= nxt => return None,
                2 => {}
                _ => return None,
            }
        }
        Some(State { s: nxt, e: e.map(|x| if x < nxt { x } else { INF }), h1, h2 })
    }

    /// Whether the walk may stop at `st`, and the states reachable by one
    /// more member, in decreasing order of that member.
    ///
    /// Rules for `v ∈ (nxt, s)`: `κ >= 3` fails; `κ = 0` needs
    /// `low(v) <= nxt` and caps the members in `[low(v), nxt]` at two;
    /// `κ = 1` caps them at one when `low(v) <= nxt`; `κ = 2` needs
    /// `low(v) > nxt`.  The running aggregates make each candidate O(1).
    fn moves(&self, st: &State) -> (bool, Vec<State>) {
        let e = self.lows_with(st);
        let (mut max0, mut min0, mut min1, mut min2) = (0u32, INF, INF, INF);
        let mut out = Vec::new();
        let mut stop = false;
        for nxt in (0..st.s).rev() {
            let v = nxt + 1;
            if v < st.s {
                let a = self.low[v as usize] as u32;
                match Self::kappa(&e, v) {
                    0 => {
                        max0 = max0.max(a);
                        min0 = min0.min(a);
                    }
                    1 => min1 = min1.min(a),
                    2 => min2 = min2.min(a),
                    _ => break,
                }
            }
            if max0 > nxt {
                break;
            }
            if nxt == 0 {
                stop = true;
                break;
            }
            if nxt >= st.h1 || min2 <= nxt {
                continue;
            }
            let mut h1 = INF;
            if st.h2 <= nxt {
                h1 = st.h2;
            }
            if min1 <= nxt {
                h1 = h1.min(min1);
            }
            out.push(State { s: nxt, e: e.map(|x| if x < nxt { x } else { INF }), h1, h2: min0 });
        }
        (stop, out)
    }

    /// Fewest members of `D ∩ [1, s]` given the state, counting `s`.
    fn best(&mut self, st: State) -> u32 {
        if let Some(&v) = self.memo.get(&st) {
            return v;
        }
        let (stop, next) = self.moves(&st);
        let mut best = if stop { 1 } else { INF };
        for nx in next {
            let v = self.best(nx);
            if v != INF && v + 1 < best {
                best = v + 1;
            }
        }
        self.memo.insert(st, best);
        best
    }

    fn start(&self, top: usize, forced: &[usize], cap: usize) -> Option<State> {
        let mut st = State { s: top as u32, e: [INF; 3], h1: INF, h2: INF };
        for &f in forced {
            st = self.step(&st, f as u32)?;
        }
        st.h1 = st.h1.min(cap as u32);
        Some(st)
    }

    /// Fewest members of a [1,2]-dominating set of `G[1, top]` whose
    /// members from the top down are `top`, then `forced` (decreasing),
    /// then only vertices `< cap`.
    pub(crate) fn chain(&mut self, top: usize, forced: &[usize], cap: usize) -> Option<u32> {
        let st = self.start(top, forced, cap)?;
        match self.best(st) {
            INF => None,
            v => Some(v + forced.len() as u32),
        }
    }

    /// Members of a set attaining [`Peel::chain`], appended to `out`.
    pub(crate) fn chain_witness(&mut self, top: usize, forced: &[usize], cap: usize, out: &mut Vec<usize>) -> bool {
        let Some(mut st) = self.start(top, forced, cap) else { return false };
        let mut target = self.best(st);
        if target == INF {
            return false;
        }
        out.push(top);
        out.extend_from_slice(forced);
        loop {
            let (stop, next) = self.moves(&st);
            if stop && target == 1 {
                return true;
            }
            let Some(nx) = next.into_iter().find(|nx| self.best(*nx) == target - 1) else {
                return false;
            };
            out.push(nx.s as usize);
            st = nx;
            target -= 1;
        }
    }
}
