//! Scaling measurements of the solver.

use std::time::Instant;

use qpdom_core::dp::{solve_with, Recurrences};
use qpdom_core::gen::{gen_intervals, GenSpec};
use qpdom_core::graph::{is_1j_dominating, IntervalGraph};
use qpdom_core::Multiplicity::AtMost;

use crate::{CliError, ExitKind};

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub runs: usize,
    pub memo_cap: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SizeResult {
    pub n: usize,
    pub median_ms: f64,
    pub gamma12: usize,
    pub memo_peak: usize,
    /// The witness of the last run re-validated at the reported size.
    pub witness_ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchOutcome {
    pub sizes: Vec<SizeResult>,
    /// Least-squares slope of log time against log n; `None` below two
    /// sizes.
    pub slope: Option<f64>,
    /// Peak resident set from `/proc/self/status`, when available.
    pub vm_hwm_kb: Option<u64>,
}

/// Instance of size `n` used by the benchmark.
pub fn bench_instance(n: usize, seed: u64) -> Vec<(f64, f64)> {
    gen_intervals(GenSpec::new(n), seed.wrapping_add(n as u64))
}

pub fn run(cfg: &BenchConfig) -> Result<BenchOutcome, CliError> {
    if cfg.sizes.is_empty() || cfg.sizes.contains(&0) {
        return Err(CliError::new(ExitKind::Parse, "sizes must be positive"));
    }
    if cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::new(ExitKind::Parse, "sizes must be strictly ascending"));
    }
    let runs = cfg.runs.max(1);
    let mut sizes = Vec::new();
    for &n in &cfg.sizes {
        let g = IntervalGraph::from_intervals(&bench_instance(n, cfg.seed))?;
        let mut times = Vec::with_capacity(runs);
        let mut last = None;
        for _ in 0..runs {
            let t0 = Instant::now();
            let s = solve_with(&g, Recurrences::Corrected, cfg.memo_cap)?;
            times.push(t0.elapsed().as_secs_f64() * 1e3);
            last = Some(s);
        }
        times.sort_by(f64::total_cmp);
        let s = last.expect("at least one run");
        let witness_ok = s.witness.len() == s.value && is_1j_dominating(g.graph(), &s.witness, AtMost(2))?.valid;
        sizes.push(SizeResult { n, median_ms: times[runs / 2], gamma12: s.value, memo_peak: s.stats.peak, witness_ok });
    }
    let slope = fit_slope(&sizes);
    Ok(BenchOutcome { sizes, slope, vm_hwm_kb: vm_hwm_kb() })
}

fn fit_slope(r: &[SizeResult]) -> Option<f64> {
    if r.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = r.iter().map(|s| ((s.n as f64).ln(), s.median_ms.max(1e-6).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

pub fn vm_hwm_kb() -> Option<u64> {
    let s = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = s.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}
