//! Argument definitions and the body of each subcommand.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qpdom_core::dp::{solve_with, Recurrences, DEFAULT_MEMO_CAP};
use qpdom_core::gen::{gen_3sat, gen_intervals, gen_multiscale_intervals, gen_unit_intervals, GenSpec};
use qpdom_core::graph::{is_1j_dominating, Graph, IntervalGraph};
use qpdom_core::oracle::{min_dom_with, MembershipConstraint, OracleConfig, OracleError};
use qpdom_core::reduction::{build_gadget, check_contract, verify_reduction_with_budget, Assignment, ReductionError};
use qpdom_core::Multiplicity;

use crate::bench::{self, BenchConfig};
use crate::formats;
use crate::fuzz::{self, FuzzConfig, Kind};
use crate::report::join;
use crate::{CliError, ExitKind, RunReport};

#[derive(Parser, Debug)]
#[command(name = "qpdom", version, about = "Exact [1,2]-domination on interval graphs")]
pub struct Cli {
    /// Emit the report as one JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Edge list when the first line is a `p` header, intervals otherwise.
    Auto,
    Intervals,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecArg {
    Corrected,
    Published,
}

impl From<RecArg> for Recurrences {
    fn from(r: RecArg) -> Self {
        match r {
            RecArg::Corrected => Recurrences::Corrected,
            RecArg::Published => Recurrences::Published,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Intervals,
    Unit,
    Multiscale,
    #[value(name = "3sat")]
    Sat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum [1,2]-dominating set size by the interval DP.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Print a minimum set and re-check it.
        #[arg(long)]
        witness: bool,
        /// Memo entries before giving up with exit 4.
        #[arg(long, default_value_t = DEFAULT_MEMO_CAP)]
        memo_cap: usize,
    },
    /// Exact constrained [1,j] optimum by branch and bound.
    Oracle {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Upper bound on chosen neighbours, or `inf`.
        #[arg(long, default_value = "2")]
        j: String,
        /// Vertices forced into the set, comma separated.
        #[arg(long, value_delimiter = ',')]
        include: Vec<usize>,
        /// Vertices kept out of the set.
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<usize>,
        /// Only search sets of at most this size.
        #[arg(long)]
        budget: Option<usize>,
        /// Print an optimal set.
        #[arg(long)]
        witness: bool,
    },
    /// DP against oracle on seeded random instances.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Random)]
        kind: Kind,
        /// Also check every table entry.
        #[arg(long)]
        per_table: bool,
        #[arg(long, value_enum, default_value_t = RecArg::Corrected)]
        recurrences: RecArg,
        /// Also require γ[1,3] = γ.
        #[arg(long)]
        j3: bool,
        /// Report instances with γ < γ[1,2].
        #[arg(long)]
        find_strict: bool,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Build the circle-graph gadget of a 3-CNF formula.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        /// Chord file; the label map goes next to it with `.labels` appended.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare satisfiability with a size-k search on the gadget.
    VerifyReduction {
        #[arg(long)]
        cnf: PathBuf,
        /// Probe a budget other than k.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Median solve time per size and the fitted log-log slope.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = DEFAULT_MEMO_CAP)]
        memo_cap: usize,
    },
    /// Write a random instance.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::Intervals)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clause count for `3sat`; `--n` is the variable count.
        #[arg(long, default_value_t = 1)]
        clauses: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command hands back to `main`: a report, or raw file content.
pub enum Output {
    Report(Box<RunReport>),
    Raw(String),
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let t0 = Instant::now();
    let mut r = match &cli.cmd {
        Command::Solve { input, format, witness, memo_cap } => solve(input, *format, *witness, *memo_cap)?,
        Command::Oracle { input, format, j, include, exclude, budget, witness } => {
            oracle(input, *format, j, include, exclude, *budget, *witness)?
        }
        Command::Fuzz { trials, min_n, max_n, seed, kind, per_table, recurrences, j3, find_strict, threads } => {
            let cfg = FuzzConfig {
                trials: *trials,
                min_n: *min_n,
                max_n: *max_n,
                seed: *seed,
                kind: *kind,
                per_table: *per_table,
                recurrences: (*recurrences).into(),
                j3: *j3,
                find_strict: *find_strict,
                threads: *threads,
            };
            fuzz_cmd(&cfg, t0)?
        }
        Command::Reduce { cnf, out } => reduce(cnf, out.as_deref())?,
        Command::VerifyReduction { cnf, budget } => verify(cnf, *budget)?,
        Command::Bench { sizes, seed, runs, memo_cap } => {
            bench_cmd(&BenchConfig { sizes: sizes.clone(), seed: *seed, runs: *runs, memo_cap: *memo_cap })?
        }
        Command::Gen { kind, n, seed, clauses, out } => match gen(*kind, *n, *seed, *clauses, out.as_deref())? {
            Some(r) => r,
            None => return Ok(Output::Raw(gen_text(*kind, *n, *seed, *clauses)?)),
        },
    };
    r.time_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(Output::Report(Box::new(r)))
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::new(ExitKind::Parse, format!("{}: {e}", path.display())))
}

fn text(bytes: &[u8], path: &Path) -> Result<String, CliError> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| CliError::new(ExitKind::Parse, format!("{}: not UTF-8 text", path.display())))
}

enum Loaded {
    Intervals(IntervalGraph),
    Edges(Graph),
}

fn load(path: &Path, format: Format, r: &mut RunReport) -> Result<Loaded, CliError> {
    let bytes = read(path)?;
    r.digest(&bytes);
    let s = text(&bytes, path)?;
    let edges = match format {
        Format::Edges => true,
        Format::Intervals => false,
        Format::Auto => s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with('p')),
    };
    if edges {
        return Ok(Loaded::Edges(formats::parse_edges(&s)?));
    }
    let (iv, _) = formats::parse_intervals(&s)?;
    Ok(Loaded::Intervals(IntervalGraph::from_intervals(&iv)?))
}

/// 1-based interval positions of RR vertex ids.
fn input_positions(g: &IntervalGraph, w: &[usize]) -> Option<Vec<usize>> {
    let src = g.source()?;
    let mut v: Vec<usize> = w.iter().map(|&x| src[x - 1].input_index + 1).collect();
    v.sort_unstable();
    Some(v)
}

fn solve(input: &Path, format: Format, witness: bool, memo_cap: usize) -> Result<RunReport, CliError> {
    let mut r = RunReport::new("solve");
    let g = match load(input, format, &mut r)? {
        Loaded::Intervals(g) => g,
        Loaded::Edges(g) => IntervalGraph::from_graph(g)?,
    };
    let s = solve_with(&g, Recurrences::Corrected, memo_cap)?;
    let cert = is_1j_dominating(g.graph(), &s.witness, Multiplicity::AtMost(2))?;
    let valid = cert.valid && s.witness.len() == s.value;
    r.set("n", g.n());
    r.set("edges", g.graph().edge_count());
    r.set("gamma12", s.value);
    r.set("witness_valid", valid);
    if witness {
        if let Some(p) = input_positions(&g, &s.witness) {
            r.set("witness_intervals", p);
        }
        r.witness = Some(s.witness.clone());
    }
    r.memo = Some(s.stats.into());
    if !valid {
        return Err(violation(r, format!("witness {} does not certify {}", join(&s.witness), s.value)));
    }
    Ok(r)
}

fn violation(r: RunReport, msg: String) -> CliError {
    CliError { kind: ExitKind::Violation, msg, report: Some(Box::new(r)) }
}

fn parse_j(j: &str) -> Result<Multiplicity, CliError> {
    match j {
        "inf" | "unbounded" => Ok(Multiplicity::Unbounded),
        _ => match j.parse::<usize>() {
            Ok(0) | Err(_) => Err(CliError::new(ExitKind::Parse, format!("--j expects a positive integer or `inf`, got `{j}`"))),
            Ok(v) => Ok(Multiplicity::AtMost(v)),
        },
    }
}

fn oracle(
    input: &Path,
    format: Format,
    j: &str,
    include: &[usize],
    exclude: &[usize],
    budget: Option<usize>,
    witness: bool,
) -> Result<RunReport, CliError> {
    let mut r = RunReport::new("oracle");
    let mult = parse_j(j)?;
    let g = match load(input, format, &mut r)? {
        Loaded::Intervals(g) => g.graph().clone(),
        Loaded::Edges(g) => g,
    };
    let c = MembershipConstraint { must_include: include.to_vec(), must_exclude: exclude.to_vec() };
    let res = min_dom_with(&g, mult, &c, budget, &OracleConfig::default())?;
    r.set("n", g.n());
    r.set("j", j);
    r.set("value", res.value);
    if let Some(b) = budget {
        r.set("budget", b);
        r.set("exceeds_budget", res.exceeds_budget);
    }
    if witness {
        r.witness = res.witness;
    }
    Ok(r)
}

fn fuzz_cmd(cfg: &FuzzConfig, t0: Instant) -> Result<RunReport, CliError> {
    let out = fuzz::run(cfg);
    let mut r = RunReport::new("fuzz");
    r.seed = Some(cfg.seed);
    r.set("trials", out.trials);
    r.set("max_n", cfg.max_n);
    r.set("kind", format!("{:?}", cfg.kind).to_lowercase());
    r.set("recurrences", format!("{:?}", cfg.recurrences).to_lowercase());
    r.set("disconnected", out.disconnected);
    r.set("witnesses_ok", out.witnesses_ok);
    if cfg.per_table {
        r.set("keys_checked", out.keys_checked);
    }
    if cfg.find_strict || cfg.kind == Kind::Unit {
        r.set("strict_found", out.strict_count);
    }
    if let Some(s) = &out.first_strict {
        r.set("strict_trial", s.trial);
        r.set("strict_gamma", s.gamma);
        r.set("strict_gamma12", s.gamma12);
        r.set("strict_instance", intervals_value(&s.intervals));
    }
    r.set("mismatches", out.mismatches);
    if let Some(m) = &out.first {
        r.set("mismatch_trial", m.trial);
        r.set("mismatch_trial_seed", m.trial_seed);
        r.set("mismatch_original_n", m.original_n);
        r.set("mismatch_n", m.intervals.len());
        r.set("mismatch_instance", intervals_value(&m.intervals));
        r.set("mismatch_detail", m.detail.as_str());
        r.time_ms = t0.elapsed().as_secs_f64() * 1e3;
        return Err(violation(r, format!("{} mismatching trial(s); first: {}", out.mismatches, m.detail)));
    }
    Ok(r)
}

/// `"l r; l r; ..."` in input order.
fn intervals_value(iv: &[(f64, f64)]) -> Value {
    Value::String(iv.iter().map(|(l, r)| format!("{l} {r}")).collect::<Vec<_>>().join("; "))
}

fn read_cnf(path: &Path, r: &mut RunReport) -> Result<qpdom_core::reduction::CnfFormula, CliError> {
    let bytes = read(path)?;
    r.digest(&bytes);
    let f = formats::parse_dimacs(&text(&bytes, path)?)?;
    f.validate()?;
    Ok(f)
}

fn reduce(cnf: &Path, out: Option<&Path>) -> Result<RunReport, CliError> {
    let mut r = RunReport::new("reduce");
    let f = read_cnf(cnf, &mut r)?;
    let inst = build_gadget(&f)?;
    r.set("m", inst.m());
    r.set("t", inst.t);
    r.set("k", inst.k);
    r.set("chords", inst.diagram.len());
    if let Err(e) = check_contract(&inst) {
        return Err(violation(r, format!("adjacency contract fails: {}", e.0)));
    }
    if let Some(out) = out {
        let mut labels = out.as_os_str().to_owned();
        labels.push(".labels");
        let labels = PathBuf::from(labels);
        std::fs::write(out, formats::write_chords(&inst.diagram, Some(inst.k)))?;
        std::fs::write(&labels, formats::write_labels(&inst))?;
        r.set("out", out.display().to_string());
        r.set("labels", labels.display().to_string());
    }
    Ok(r)
}

fn assignment_value(a: &Assignment) -> Value {
    let lits: Vec<i64> = a.values.iter().enumerate().map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) }).collect();
    json!(lits)
}

fn verify(cnf: &Path, budget: Option<usize>) -> Result<RunReport, CliError> {
    let mut r = RunReport::new("verify-reduction");
    let f = read_cnf(cnf, &mut r)?;
    let rep = match verify_reduction_with_budget(&f, budget, &OracleConfig::default()) {
        Ok(rep) => rep,
        Err(ReductionError::Oracle(OracleError::CapExceeded { n, cap })) => {
            return Err(CliError::new(
                ExitKind::Resource,
                format!(
                    "gadget has {n} chords, above the oracle cap of {cap}; exact verification covers single-clause formulas"
                ),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    r.set("sat", rep.sat);
    r.set("k", rep.k);
    r.set("chords", rep.chords);
    r.set("budget", rep.budget);
    r.set("min_dom", rep.min_dom);
    r.set("exceeds_budget", rep.exceeds_budget);
    match &rep.decoded {
        Some(Ok(a)) => r.set("decoded", assignment_value(a)),
        Some(Err(e)) => r.set("decoded", format!("error: {e}")),
        None => r.set("decoded", Value::Null),
    }
    r.set("decoded_satisfies", rep.decoded_satisfies);
    r.set("agree", rep.agreement);
    r.witness = rep.witness.clone();
    if !rep.agreement {
        return Err(violation(r, "SAT verdict and dominating-set verdict disagree".into()));
    }
    Ok(r)
}

fn bench_cmd(cfg: &BenchConfig) -> Result<RunReport, CliError> {
    let out = bench::run(cfg)?;
    let mut r = RunReport::new("bench");
    r.seed = Some(cfg.seed);
    r.set("runs", cfg.runs);
    r.set("sizes", out.sizes.iter().map(|s| s.n).collect::<Vec<_>>());
    r.set("median_ms", out.sizes.iter().map(|s| (s.median_ms * 1e3).round() / 1e3).collect::<Vec<_>>());
    r.set("gamma12", out.sizes.iter().map(|s| s.gamma12).collect::<Vec<_>>());
    r.set("memo_peak", out.sizes.iter().map(|s| s.memo_peak).collect::<Vec<_>>());
    r.set("witnesses_ok", out.sizes.iter().all(|s| s.witness_ok));
    if let Some(s) = out.slope {
        r.set("slope", (s * 1e3).round() / 1e3);
    }
    if let Some(kb) = out.vm_hwm_kb {
        r.set("vm_hwm_kb", kb);
    }
    Ok(r)
}

fn gen_text(kind: GenKind, n: usize, seed: u64, clauses: usize) -> Result<String, CliError> {
    Ok(match kind {
        GenKind::Intervals => formats::write_intervals(&gen_intervals(GenSpec::new(n), seed)),
        GenKind::Unit => formats::write_intervals(&gen_unit_intervals(n, seed)),
        GenKind::Multiscale => formats::write_intervals(&gen_multiscale_intervals(n, seed)),
        GenKind::Sat => {
            if n < 3 {
                return Err(CliError::new(ExitKind::Domain, "3sat needs at least three variables (--n)"));
            }
            formats::write_dimacs(&gen_3sat(n, clauses, seed))
        }
    })
}

fn gen(kind: GenKind, n: usize, seed: u64, clauses: usize, out: Option<&Path>) -> Result<Option<RunReport>, CliError> {
    let Some(out) = out else { return Ok(None) };
    let body = gen_text(kind, n, seed, clauses)?;
    std::fs::write(out, &body)?;
    let mut r = RunReport::new("gen");
    r.digest(body.as_bytes());
    r.seed = Some(seed);
    r.set("kind", format!("{kind:?}").to_lowercase());
    r.set("n", n);
    if kind == GenKind::Sat {
        r.set("clauses", clauses);
    }
    r.set("out", out.display().to_string());
    Ok(Some(r))
}
