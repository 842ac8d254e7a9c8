//! Differential testing of the DP against the brute-force oracle.
//!
//! Trial `i` draws everything from the `i+1`-th output of a SplitMix64
//! stream seeded with the run seed, so a run is reproducible from
//! `(seed, trials)` whatever the worker count.

use qpdom_core::dp::{solve_with, Evaluator, Gamma, GammaKey, Recurrences, DEFAULT_MEMO_CAP};
use qpdom_core::gen::{gen_intervals, gen_multiscale_intervals, gen_unit_intervals, GenSpec, SplitMix64};
use qpdom_core::graph::{is_1j_dominating, IntervalGraph};
use qpdom_core::oracle::{gamma_oracle, min_dom, MembershipConstraint};
use qpdom_core::Multiplicity::{self, AtMost, Unbounded};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Random,
    Unit,
    Multiscale,
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    pub kind: Kind,
    pub per_table: bool,
    pub recurrences: Recurrences,
    /// Also require oracle γ[1,3] = γ.
    pub j3: bool,
    /// Record instances with oracle γ < γ[1,2].
    pub find_strict: bool,
    pub threads: Option<usize>,
}

impl FuzzConfig {
    pub fn new(trials: usize, max_n: usize, seed: u64) -> Self {
        FuzzConfig {
            trials,
            min_n: 1,
            max_n,
            seed,
            kind: Kind::Random,
            per_table: false,
            recurrences: Recurrences::Corrected,
            j3: false,
            find_strict: false,
            threads: None,
        }
    }
}

/// A failing trial after shrinking.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub trial: usize,
    pub trial_seed: u64,
    pub original_n: usize,
    /// Shrunk instance in input order.
    pub intervals: Vec<(f64, f64)>,
    pub detail: String,
}

/// An instance separating γ from γ[1,2].
#[derive(Clone, Debug, PartialEq)]
pub struct Strict {
    pub trial: usize,
    pub original_n: usize,
    /// Minimal under single-interval deletion, in input order.
    pub intervals: Vec<(f64, f64)>,
    pub gamma: usize,
    pub gamma12: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct FuzzOutcome {
    pub trials: usize,
    pub mismatches: usize,
    pub first: Option<Mismatch>,
    pub solves: usize,
    /// Solves whose witness re-validated at the reported size.
    pub witnesses_ok: usize,
    pub keys_checked: usize,
    pub disconnected: usize,
    pub strict_count: usize,
    pub first_strict: Option<Strict>,
}

#[derive(Default)]
struct Trial {
    failure: Option<String>,
    solved: bool,
    witness_ok: bool,
    keys: usize,
    disconnected: bool,
    strict: Option<(usize, usize)>,
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of trial `i`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    SplitMix64::new(seed.wrapping_add((i as u64).wrapping_mul(GOLDEN))).next_u64()
}

/// The instance of one trial.
pub fn trial_instance(cfg: &FuzzConfig, i: usize) -> Vec<(f64, f64)> {
    let mut r = SplitMix64::new(trial_seed(cfg.seed, i));
    let lo = cfg.min_n.max(1);
    let n = lo + r.below((cfg.max_n.max(lo) - lo + 1) as u64) as usize;
    match cfg.kind {
        Kind::Random => {
            // short, medium and containment-heavy lengths
            let max_len = [5, 30, 90][r.below(3) as usize];
            gen_intervals(GenSpec { n, span: 100, max_len }, r.next_u64())
        }
        Kind::Unit => gen_unit_intervals(n, r.next_u64()),
        Kind::Multiscale => gen_multiscale_intervals(n, r.next_u64()),
    }
}

pub fn run(cfg: &FuzzConfig) -> FuzzOutcome {
    let threads = cfg
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .clamp(1, cfg.trials.max(1));
    let mut per: Vec<Option<Trial>> = Vec::new();
    per.resize_with(cfg.trials, || None);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(s, move || {
                        (w..cfg.trials)
                            .step_by(threads)
                            .map(|i| (i, check(&trial_instance(cfg, i), cfg)))
                            .collect::<Vec<_>>()
                    })
                    .expect("spawn fuzz worker")
            })
            .collect();
        for h in handles {
            for (i, t) in h.join().unwrap_or_else(|e| std::panic::resume_unwind(e)) {
                per[i] = Some(t);
            }
        }
    });

    let mut out = FuzzOutcome { trials: cfg.trials, ..Default::default() };
    for (i, t) in per.into_iter().enumerate() {
        let t = t.expect("every trial ran");
        out.solves += t.solved as usize;
        out.witnesses_ok += t.witness_ok as usize;
        out.keys_checked += t.keys;
        out.disconnected += t.disconnected as usize;
        if let Some((gamma, gamma12)) = t.strict {
            out.strict_count += 1;
            if out.first_strict.is_none() {
                out.first_strict = Some(shrink_strict(trial_instance(cfg, i), i, gamma, gamma12));
            }
        }
        if t.failure.is_some() {
            out.mismatches += 1;
            if out.first.is_none() {
                out.first = Some(shrink(cfg, i));
            }
        }
    }
    out
}

/// Deletes the highest-numbered interval while the trial still fails.
fn shrink(cfg: &FuzzConfig, i: usize) -> Mismatch {
    let mut iv = trial_instance(cfg, i);
    let original_n = iv.len();
    let mut detail = check(&iv, cfg).failure.expect("failing trial");
    while iv.len() > 1 {
        let g = IntervalGraph::from_intervals(&iv).expect("generated intervals are valid");
        let top = g.source().expect("built from intervals")[iv.len() - 1].input_index;
        let mut smaller = iv.clone();
        smaller.remove(top);
        match check(&smaller, cfg).failure {
            Some(d) => {
                iv = smaller;
                detail = d;
            }
            None => break,
        }
    }
    Mismatch { trial: i, trial_seed: trial_seed(cfg.seed, i), original_n, intervals: iv, detail }
}

/// Drops any interval whose removal keeps γ < γ[1,2], until none can go.
fn shrink_strict(mut iv: Vec<(f64, f64)>, trial: usize, mut gamma: usize, mut gamma12: usize) -> Strict {
    let original_n = iv.len();
    let mut x = 0;
    while x < iv.len() {
        let mut smaller = iv.clone();
        smaller.remove(x);
        match strictness(&smaller) {
            Some((a, b)) => {
                iv = smaller;
                (gamma, gamma12) = (a, b);
                x = 0;
            }
            None => x += 1,
        }
    }
    Strict { trial, original_n, intervals: iv, gamma, gamma12 }
}

/// `(γ, γ[1,2])` by oracle when they differ.
pub fn strictness(iv: &[(f64, f64)]) -> Option<(usize, usize)> {
    let g = IntervalGraph::from_intervals(iv).ok()?;
    let a = oracle_value(&g, Unbounded).ok()?;
    let b = oracle_value(&g, AtMost(2)).ok()?;
    (a < b).then_some((a, b))
}

fn oracle_value(g: &IntervalGraph, j: Multiplicity) -> Result<usize, String> {
    let r = min_dom(g.graph(), j, &MembershipConstraint::none()).map_err(|e| e.to_string())?;
    r.value.ok_or_else(|| "oracle found no dominating set".to_string())
}

fn check(iv: &[(f64, f64)], cfg: &FuzzConfig) -> Trial {
    let mut t = Trial::default();
    if let Err(e) = check_into(iv, cfg, &mut t) {
        t.failure = Some(e);
    }
    t
}

fn check_into(iv: &[(f64, f64)], cfg: &FuzzConfig, t: &mut Trial) -> Result<(), String> {
    let g = IntervalGraph::from_intervals(iv).map_err(|e| e.to_string())?;
    t.disconnected = !connected(&g);
    let s = solve_with(&g, cfg.recurrences, DEFAULT_MEMO_CAP).map_err(|e| format!("solve failed: {e}"))?;
    t.solved = true;
    let cert = is_1j_dominating(g.graph(), &s.witness, AtMost(2)).map_err(|e| e.to_string())?;
    t.witness_ok = cert.valid && s.witness.len() == s.value;
    if !t.witness_ok {
        return Err(format!("witness {:?} does not certify value {}", s.witness, s.value));
    }
    let g12 = oracle_value(&g, AtMost(2))?;
    if s.value != g12 {
        return Err(format!("gamma12: dp {}, oracle {g12}", s.value));
    }
    if cfg.kind == Kind::Unit || cfg.j3 || cfg.find_strict {
        let gamma = oracle_value(&g, Unbounded)?;
        if cfg.kind == Kind::Unit && gamma != g12 {
            return Err(format!("unit interval graph with gamma {gamma} below gamma12 {g12}"));
        }
        if cfg.j3 {
            let g13 = oracle_value(&g, AtMost(3))?;
            if g13 != gamma {
                return Err(format!("gamma13 {g13} differs from gamma {gamma}"));
            }
        }
        if gamma < g12 {
            t.strict = Some((gamma, g12));
        }
    }
    if cfg.per_table {
        let mut ev = Evaluator::with_options(&g, cfg.recurrences, DEFAULT_MEMO_CAP).map_err(|e| e.to_string())?;
        for key in GammaKey::all(g.n()) {
            key_agrees(&mut ev, &g, key)?;
            t.keys += 1;
        }
    }
    Ok(())
}

/// One table entry against the constrained oracle, witness included.  A
/// DOMINATED pair entry passes when the pair is infeasible or the tail
/// entry with the same left bound is no worse.
pub fn key_agrees(ev: &mut Evaluator, g: &IntervalGraph, key: GammaKey) -> Result<(), String> {
    let dp = ev.eval(key).map_err(|e| format!("{key:?}: {e}"))?;
    let or = gamma_oracle(g, key).map_err(|e| format!("{key:?}: {e}"))?.value;
    let ok = match dp {
        Gamma::Value(v) => Some(v) == or,
        Gamma::Undefined => or.is_none(),
        Gamma::Dominated => match (key, or) {
            (_, None) => true,
            (GammaKey::G1Pair(k, i, _), Some(o)) => {
                ev.eval(GammaKey::G1Tail(k, i)).map_err(|e| e.to_string())?.value().is_some_and(|t| t <= o)
            }
            _ => false,
        },
    };
    if !ok {
        let or = or.map_or("UNDEFINED".to_string(), |v| v.to_string());
        return Err(format!("{key:?}: dp {dp:?}, oracle {or}"));
    }
    if let Gamma::Value(v) = dp {
        let w = ev.witness(key).map_err(|e| e.to_string())?.ok_or(format!("{key:?}: value without witness"))?;
        let kc = key.constraint();
        let pg = g.graph().induced_prefix(kc.prefix).map_err(|e| e.to_string())?;
        let cert = is_1j_dominating(&pg, &w, AtMost(2)).map_err(|e| e.to_string())?;
        let fits = kc.include.iter().all(|x| w.contains(x)) && kc.exclude.iter().all(|x| !w.contains(x));
        if !cert.valid || w.len() != v || !fits {
            return Err(format!("{key:?}: witness {w:?} does not certify {v}"));
        }
    }
    Ok(())
}

fn connected(g: &IntervalGraph) -> bool {
    let g = g.graph();
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen[1..].iter().all(|&b| b)
}
