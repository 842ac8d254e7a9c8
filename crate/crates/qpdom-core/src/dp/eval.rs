use alloc::vec::Vec;
use hashbrown::HashMap;

use super::peel::Peel;
use super::{DpError, Gamma, GammaKey, Recurrences};
use crate::graph::{IntervalGraph, NeighborhoodIndex};

/// Combined memo entries allowed before a run stops with [`DpError::MemoCap`].
///
/// [`DpError::MemoCap`]: super::DpError::MemoCap
pub const DEFAULT_MEMO_CAP: usize = 20_000_000;

const UNDEF: u32 = u32::MAX;
const DOM: u32 = u32::MAX - 1;

/// Where the rest of a minimizing set comes from.
#[derive(Clone, Copy, Debug)]
enum Link {
    Empty,
    Key(GammaKey),
    /// The better of the two prefix quantities at `p`.
    Best(usize),
    /// The peel walk answering this key exactly.
    Peel(GammaKey),
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    val: u32,
    /// Member contributed at this level, 0 for none.
    add: usize,
    link: Link,
}

#[derive(Clone, Copy)]
struct Cand {
    val: u32,
    link: Link,
}

struct Min(Cand);

impl Min {
    fn new() -> Self {
        Min(Cand { val: UNDEF, link: Link::Empty })
    }

    fn offer(&mut self, c: Cand) {
        if c.val < DOM && c.val < self.0.val {
            self.0 = c;
        }
    }

    fn same(self) -> Entry {
        Entry { val: self.0.val, add: 0, link: self.0.link }
    }

    fn plus(self, v: usize) -> Entry {
        plus(self.0, v)
    }
}

fn plus(c: Cand, v: usize) -> Entry {
    let val = if c.val >= DOM { UNDEF } else { c.val + 1 };
    Entry { val, add: v, link: c.link }
}

const fn undefined() -> Entry {
    Entry { val: UNDEF, add: 0, link: Link::Empty }
}

/// Memo statistics of one evaluator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MemoStats {
    /// Table entries computed.
    pub entries: usize,
    /// States of the peel walk computed.
    pub peel_states: usize,
    /// Largest combined memo size seen; entries are never evicted.
    pub peak: usize,
}

/// Memoized evaluator of the eight tables on one graph.
pub struct Evaluator {
    ix: NeighborhoodIndex,
    rec: Recurrences,
    memo: HashMap<GammaKey, Entry>,
    peel: Peel,
    cap: usize,
    fault: Option<DpError>,
}

impl Evaluator {
    pub fn new(g: &IntervalGraph) -> Result<Self, DpError> {
        Self::with_options(g, Recurrences::Corrected, DEFAULT_MEMO_CAP)
    }

    pub fn with_options(g: &IntervalGraph, rec: Recurrences, cap: usize) -> Result<Self, DpError> {
        let ix = NeighborhoodIndex::build(g.graph())?;
        let peel = Peel::new(ix.lows().to_vec());
        Ok(Evaluator { ix, rec, memo: HashMap::new(), peel, cap, fault: None })
    }

    pub fn index(&self) -> &NeighborhoodIndex {
        &self.ix
    }

    pub fn stats(&self) -> MemoStats {
        let entries = self.memo.len();
        let peel_states = self.peel.len();
        MemoStats { entries, peel_states, peak: entries + peel_states }
    }

    /// Value of one table entry.
    pub fn eval(&mut self, key: GammaKey) -> Result<Gamma, DpError> {
        key.validate(self.ix.n())?;
        let v = self.get(key);
        self.check()?;
        Ok(match v {
            UNDEF => Gamma::Undefined,
            DOM => Gamma::Dominated,
            v => Gamma::Value(v as usize),
        })
    }

    /// A set attaining the entry, or `None` when the entry has no value.
    pub fn witness(&mut self, key: GammaKey) -> Result<Option<Vec<usize>>, DpError> {
        key.validate(self.ix.n())?;
        let v = self.get(key);
        self.check()?;
        if v >= DOM {
            return Ok(None);
        }
        let mut out = Vec::new();
        self.collect(Link::Key(key), &mut out)?;
        out.sort_unstable();
        Ok(Some(out))
    }

    /// `γ[1,2](G[1, p])`.
    pub fn prefix_optimum(&mut self, p: usize) -> Result<usize, DpError> {
        GammaKey::G1Prefix(p).validate(self.ix.n())?;
        let c = self.best(p);
        self.check()?;
        if c.val >= DOM {
            return Err(DpError::Internal("prefix optimum is undefined"));
        }
        Ok(c.val as usize)
    }

    /// A minimum [1,2]-dominating set of `G[1, p]`.
    pub fn prefix_witness(&mut self, p: usize) -> Result<Vec<usize>, DpError> {
        self.prefix_optimum(p)?;
        let mut out = Vec::new();
        self.collect(Link::Best(p), &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    fn check(&mut self) -> Result<(), DpError> {
        match self.fault.take() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    fn collect(&mut self, mut link: Link, out: &mut Vec<usize>) -> Result<(), DpError> {
        loop {
            match link {
                Link::Empty => return Ok(()),
                Link::Best(p) => {
                    let z = self.get(GammaKey::G0Range(p, p));
                    let o = self.get(GammaKey::G1Prefix(p));
                    link = if z <= o { Link::Key(GammaKey::G0Range(p, p)) } else { Link::Key(GammaKey::G1Prefix(p)) };
                }
                Link::Key(k) => {
                    self.get(k);
                    let e = self.memo[&k];
                    if e.val >= DOM {
                        return Err(DpError::Internal("witness walk reached an undefined entry"));
                    }
                    if e.add != 0 {
                        out.push(e.add);
                    }
                    link = e.link;
                }
                Link::Peel(k) => {
                    let (top, forced, cap) = peel_args(k);
                    if !self.peel.chain_witness(top, &forced, cap, out) {
                        return Err(DpError::Internal("peel witness walk failed"));
                    }
                    return Ok(());
                }
            }
        }
    }

    fn get(&mut self, key: GammaKey) -> u32 {
        if let Some(e) = self.memo.get(&key) {
            return e.val;
        }
        debug_assert!(key.validate(self.ix.n()).is_ok(), "{key:?}");
        if self.memo.len() + self.peel.len() >= self.cap {
            self.fault.get_or_insert(DpError::MemoCap { cap: self.cap });
            return UNDEF;
        }
        let e = self.compute(key);
        self.memo.insert(key, e);
        e.val
    }

    fn key(&mut self, key: GammaKey) -> Cand {
        Cand { val: self.get(key), link: Link::Key(key) }
    }

    fn low(&self, a: usize) -> usize {
        self.ix.low(a)
    }

    fn lr(&self, a: usize, b: usize) -> usize {
        self.ix.low_range_or_inf(a, b)
    }

    /// `γ(p) = min{γ⁰(p), γ¹(p)}`, with `γ(0) = 0`.
    fn best(&mut self, p: usize) -> Cand {
        if p == 0 {
            return Cand { val: 0, link: Link::Empty };
        }
        let z = self.get(GammaKey::G0Range(p, p));
        let o = self.get(GammaKey::G1Prefix(p));
        Cand { val: z.min(o), link: Link::Best(p) }
    }

    /// G0 range with the conventions `y = 0` (empty prefix) and `x > y`
    /// (no exclusion left).
    fn zx(&mut self, x: usize, y: usize) -> Cand {
        if y == 0 {
            Cand { val: 0, link: Link::Empty }
        } else if x > y {
            self.best(y)
        } else {
            self.key(GammaKey::G0Range(x, y))
        }
    }

    /// G1 tail, read as the G1 prefix when the excluded range is empty.
    fn otc(&mut self, q: usize, p: usize) -> Cand {
        if q >= p {
            self.key(GammaKey::G1Prefix(p))
        } else {
            self.key(GammaKey::G1Tail(q, p))
        }
    }

    /// G1 pair as a candidate.  The published variant skips a dominated
    /// entry; the corrected one resolves it, since dropping `j` can leave
    /// `j` with three chosen neighbours.
    fn op_skip(&mut self, k: usize, i: usize, j: usize) -> Cand {
        if self.rec == Recurrences::Corrected {
            return self.opv(k, i, j);
        }
        let c = self.key(GammaKey::G1Pair(k, i, j));
        if c.val == DOM {
            Cand { val: UNDEF, ..c }
        } else {
            c
        }
    }

    /// G1 pair with a dominated entry resolved to its exact value.
    fn opv(&mut self, k: usize, i: usize, j: usize) -> Cand {
        let c = self.key(GammaKey::G1Pair(k, i, j));
        if c.val != DOM {
            return c;
        }
        self.peel_cand(GammaKey::G1Pair(k, i, j))
    }

    fn peel_cand(&mut self, key: GammaKey) -> Cand {
        let (top, forced, cap) = peel_args(key);
        let val = self.peel.chain(top, &forced, cap).unwrap_or(UNDEF);
        Cand { val, link: Link::Peel(key) }
    }

    fn compute(&mut self, key: GammaKey) -> Entry {
        match key {
            GammaKey::G0Prefix(i) => {
                let c = self.key(GammaKey::G0Range(i, i));
                Entry { val: c.val, add: 0, link: c.link }
            }
            GammaKey::G0Range(q, p) => self.g0_range(q, p),
            GammaKey::G0Single(q, p, m) => self.g0_single(q, p, m),
            GammaKey::G1Prefix(p) => self.g1_prefix(p),
            GammaKey::G1Tail(q, p) => self.g1_tail(q, p),
            GammaKey::G1Pair(k, i, j) => self.g1_pair(k, i, j),
            GammaKey::G1Triple(l, i, j, k) => self.g1_triple(l, i, j, k),
            GammaKey::G11Run(l, i, j, k) => self.g11_run(l, i, j, k),
        }
    }

    fn g0_range(&mut self, q: usize, p: usize) -> Entry {
        let ml = self.ix.maxlow(p);
        if ml >= q {
            return undefined();
        }
        let mut m = Min::new();
        for t in ml..q {
            let l = self.lr(t + 1, p);
            m.offer(self.otc(l, t));
            for k in l..t {
                m.offer(self.op_skip(l, t, k));
            }
        }
        m.same()
    }

    fn g0_single(&mut self, q: usize, p: usize, mm: usize) -> Entry {
        if self.ix.maxlow(p) > mm {
            return undefined();
        }
        let b = self.lr(mm + 1, p).min(q);
        let mut m = Min::new();
        m.offer(self.otc(b, mm));
        for l in b..q {
            m.offer(self.op_skip(b, mm, l));
        }
        m.same()
    }

    fn g1_prefix(&mut self, p: usize) -> Entry {
        let b = self.low(p);
        if b == p {
            return plus(self.best(p - 1), p);
        }
        let mut m = Min::new();
        m.offer(self.key(GammaKey::G1Tail(b, p)));
        for j in b..p {
            m.offer(self.op_skip(b, p, j));
            for k in b..j {
                m.offer(self.key(GammaKey::G1Triple(b, p, j, k)));
                m.offer(self.key(GammaKey::G11Run(b, p, j, k)));
            }
        }
        m.same()
    }

    fn g1_tail(&mut self, q: usize, p: usize) -> Entry {
        let b = self.low(p);
        if q > b {
            // members below q but at least b: the tail from b, or exactly one
            // member t in [b, q) taken as a pair
            let mut m = Min::new();
            m.offer(self.otc(b, p));
            for t in b..q {
                m.offer(self.op_skip(t, p, t));
            }
            return m.same();
        }
        if b == 1 {
            return Entry { val: 1, add: p, link: Link::Empty };
        }
        let mu = self.lr(b, p - 1);
        if mu >= q {
            return plus(self.zx(q, b - 1), p);
        }
        let mut m = Min::new();
        m.offer(self.zx(mu, b - 1));
        for mm in mu..q {
            let c = if mm < b - 1 { self.key(GammaKey::G0Single(mu, b - 1, mm)) } else { self.otc(mu, b - 1) };
            m.offer(c);
        }
        m.plus(p)
    }

    fn g1_pair(&mut self, k: usize, i: usize, j: usize) -> Entry {
        let b = self.low(i);
        let c = self.low(j);
        if j >= b && c < b && k > b {
            let mut m = Min::new();
            m.offer(self.op_skip(b, i, j));
            for t in b..k {
                m.offer(self.key(GammaKey::G1Triple(t, i, j, t)));
            }
            return m.same();
        }
        let d = self.lr(j + 1, i - 1);
        let dp = self.lr(b, j - 1);
        let dpp = self.lr(b, i - 1);
        let z = (j + 1..i).rev().find(|&x| self.low(x) == d);
        let kp = k.min(b).min(d).min(dp);
        let bc = b.min(c);
        if (j < b && (j + 1..b).any(|x| j < self.low(x))) || (k < bc && (k..bc).any(|x| k <= self.low(x))) {
            return undefined();
        }
        if j < b {
            let z_low = z.is_none_or(|z| z < b);
            if k == j && j <= d {
                return plus(self.key(GammaKey::G1Prefix(j)), i);
            }
            if z_low {
                let mm = k.min(dpp);
                if k < j && mm <= d {
                    return plus(self.otc(mm, j), i);
                }
                if d < mm {
                    let mut m = Min::new();
                    m.offer(self.otc(d, j));
                    for x in d..mm {
                        m.offer(self.op_skip(d, j, x));
                    }
                    return m.plus(i);
                }
            } else {
                if k < j && k <= d {
                    return plus(self.otc(k, j), i);
                }
                if d < k {
                    return plus(self.otc(d, j), i);
                }
            }
            self.fault.get_or_insert(DpError::Internal("pair recurrence reached an uncovered case"));
            return undefined();
        }
        if b == k && k == j && j <= d {
            return plus(self.key(GammaKey::G1Prefix(j)), i);
        }
        if b <= c {
            return Entry { val: DOM, add: 0, link: Link::Empty };
        }
        plus(self.otc(kp, j), i)
    }

    /// Shared guard of the triple and run recurrences.
    fn blocked(&self, i: usize, j: usize, k: usize) -> bool {
        let low = |a: usize| self.ix.low(a);
        let b = low(i);
        let bc = b.min(low(j));
        (j < b && (j + 1..b).any(|x| j < low(x))) || (k < bc && (k + 1..bc).any(|x| k < low(x)))
    }

    /// `(e, e', z below b)` for the triple and run recurrences.
    fn tail_marks(&self, i: usize, j: usize) -> (usize, usize, bool) {
        let b = self.low(i);
        let e = self.lr(j + 1, i - 1);
        let ep = self.lr(b, i - 1);
        let z = (j + 1..i).rev().find(|&x| self.low(x) == e);
        let z_low = match z {
            None => j < b,
            Some(z) => z < b,
        };
        (e, ep, z_low)
    }

    fn pair_in_triple(&mut self, k: usize, i: usize, j: usize) -> Cand {
        match self.rec {
            Recurrences::Corrected => self.opv(k, i, j),
            Recurrences::Published => self.op_skip(k, i, j),
        }
    }

    fn g1_triple(&mut self, l: usize, i: usize, j: usize, k: usize) -> Entry {
        let b = self.low(i);
        if self.rec == Recurrences::Corrected && j >= b {
            let key = GammaKey::G1Triple(l, i, j, k);
            let c = self.peel_cand(key);
            return Entry { val: c.val, add: 0, link: c.link };
        }
        let c = self.low(j);
        let d = self.low(k);
        let bcd = b.min(c).min(d);
        if self.blocked(i, j, k) || (l < bcd && (l..bcd).any(|x| l <= self.low(x))) {
            return undefined();
        }
        let (e, ep, z_low) = self.tail_marks(i, j);
        if j < b && z_low {
            if j <= e {
                return plus(self.pair_in_triple(l, j, k), i);
            }
            if ep <= k {
                return undefined();
            }
            return plus(self.pair_in_triple(l.min(e), j, k), i);
        }
        if e <= k {
            return undefined();
        }
        plus(self.pair_in_triple(l, j, k), i)
    }

    fn g11_run(&mut self, l: usize, i: usize, j: usize, k: usize) -> Entry {
        let b = self.low(i);
        if self.rec == Recurrences::Corrected && j >= b {
            let c = self.peel_cand(GammaKey::G11Run(l, i, j, k));
            return Entry { val: c.val, add: 0, link: c.link };
        }
        if k == l {
            let c = self.key(GammaKey::G1Triple(l, i, j, k));
            return Entry { val: c.val, add: 0, link: c.link };
        }
        if self.blocked(i, j, k) {
            return undefined();
        }
        let (e, ep, z_low) = self.tail_marks(i, j);
        let dead = if j < b && z_low { e < k || ep <= k } else { e <= k };
        if dead {
            return undefined();
        }
        let next = if k - l == 1 { GammaKey::G1Triple(l, j, k, l) } else { GammaKey::G11Run(l, j, k, k - 1) };
        plus(self.key(next), i)
    }
}

/// Top, forced members and cap of the peel walk answering `key`.
fn peel_args(key: GammaKey) -> (usize, Vec<usize>, usize) {
    match key {
        GammaKey::G1Pair(k, i, j) => (i, [j].into(), k),
        GammaKey::G1Triple(l, i, j, k) => (i, [j, k].into(), l),
        GammaKey::G11Run(l, i, j, k) => {
            let mut forced: Vec<usize> = [j].into();
            forced.extend((l..=k).rev());
            (i, forced, l)
        }
        _ => unreachable!("peel walks answer pair, triple and run keys only"),
    }
}
