//! Text formats: interval lists, DIMACS-like edge lists, chord diagrams,
//! label sidecars and DIMACS cnf.

use std::fmt::Write as _;

use qpdom_core::graph::{Chord, ChordDiagram, Graph, GraphError};
use qpdom_core::reduction::{CnfFormula, GadgetInstance, Literal};

/// A syntax error on a 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

/// Non-blank lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

fn no_more<'a>(line: usize, mut it: impl Iterator<Item = &'a str>) -> Result<(), ParseError> {
    match it.next() {
        Some(t) => Err(err(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

/// Parsed intervals alongside the line each came from.
pub type Located = (Vec<(f64, f64)>, Vec<usize>);

/// Intervals with their line numbers, for error reports.
pub fn parse_intervals(text: &str) -> Result<Located, ParseError> {
    let mut out = Vec::new();
    let mut lines = Vec::new();
    for (line, l) in content_lines(text) {
        let mut it = l.split_whitespace();
        let left: f64 = num(line, it.next(), "left endpoint")?;
        let right: f64 = num(line, it.next(), "right endpoint")?;
        no_more(line, it)?;
        if !left.is_finite() || !right.is_finite() || left >= right {
            return Err(err(line, format!("degenerate interval {left} {right}: left must be below right")));
        }
        out.push((left, right));
        lines.push(line);
    }
    if out.is_empty() {
        return Err(err(0, "no intervals"));
    }
    Ok((out, lines))
}

pub fn write_intervals(iv: &[(f64, f64)]) -> String {
    let mut s = String::new();
    for (l, r) in iv {
        writeln!(s, "{l} {r}").unwrap();
    }
    s
}

/// `p edge <n> <m>` followed by `e <u> <v>` lines.
pub fn parse_edges(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (line, l) in content_lines(text) {
        last = line;
        let mut it = l.split_whitespace();
        match it.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second header"));
                }
                if it.next() != Some("edge") {
                    return Err(err(line, "header must read `p edge <n> <m>`"));
                }
                let n = num(line, it.next(), "vertex count")?;
                let m = num(line, it.next(), "edge count")?;
                no_more(line, it)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err(line, "edge before header"))?;
                let u: usize = num(line, it.next(), "vertex")?;
                let v: usize = num(line, it.next(), "vertex")?;
                no_more(line, it)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("self loop on {u}")));
                }
                edges.push((u, v));
            }
            Some(t) => return Err(err(line, format!("unknown line type `{t}`"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| err(last, "missing `p edge` header"))?;
    if edges.len() != m {
        return Err(err(last, format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(last, e.to_string()))
}

pub fn write_edges(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

/// `c <N>` followed by `h <label> <p> <q>` lines.
pub fn parse_chords(text: &str) -> Result<ChordDiagram, ParseError> {
    let mut count: Option<usize> = None;
    let mut chords = Vec::new();
    let mut last = 0;
    for (line, l) in content_lines(text) {
        last = line;
        let mut it = l.split_whitespace();
        match it.next() {
            Some("c") => {
                if count.is_some() {
                    return Err(err(line, "second header"));
                }
                count = Some(num(line, it.next(), "chord count")?);
                no_more(line, it)?;
            }
            Some("h") => {
                if count.is_none() {
                    return Err(err(line, "chord before header"));
                }
                let label = it.next().ok_or_else(|| err(line, "missing label"))?.to_string();
                let p = num(line, it.next(), "position")?;
                let q = num(line, it.next(), "position")?;
                no_more(line, it)?;
                chords.push(Chord { label, p, q });
            }
            Some(t) => return Err(err(line, format!("unknown line type `{t}`"))),
            None => unreachable!(),
        }
    }
    let n = count.ok_or_else(|| err(last, "missing `c` header"))?;
    if chords.len() != n {
        return Err(err(last, format!("header promises {n} chords, found {}", chords.len())));
    }
    ChordDiagram::new(chords).map_err(|e: GraphError| err(last, e.to_string()))
}

/// Chord file with `k` in a leading comment.
pub fn write_chords(d: &ChordDiagram, k: Option<usize>) -> String {
    let mut s = String::new();
    if let Some(k) = k {
        writeln!(s, "# k {k}").unwrap();
    }
    writeln!(s, "c {}", d.len()).unwrap();
    for c in d.chords() {
        writeln!(s, "h {} {} {}", c.label, c.p, c.q).unwrap();
    }
    s
}

/// Sidecar lines `label <chord-id> <role>`; chord ids are 1-based in
/// file order.
pub fn write_labels(inst: &GadgetInstance) -> String {
    let mut s = format!("# k {} m {} t {}\n", inst.k, inst.m(), inst.t);
    for v in 1..=inst.diagram.len() {
        writeln!(s, "label {v} {}", inst.label_of(v)).unwrap();
    }
    s
}

/// Reads a sidecar back as `(chord id, role)` pairs.
pub fn parse_labels(text: &str) -> Result<Vec<(usize, String)>, ParseError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        let mut it = l.split_whitespace();
        if it.next() != Some("label") {
            return Err(err(line, "expected `label <chord-id> <role>`"));
        }
        let id = num(line, it.next(), "chord id")?;
        let role = it.next().ok_or_else(|| err(line, "missing role"))?.to_string();
        no_more(line, it)?;
        out.push((id, role));
    }
    Ok(out)
}

/// Errors of [`parse_dimacs`]: syntax, or a clause breaking the
/// three-distinct-variables rule.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}: clause repeats variable {var}; every variable may appear at most once per clause")]
    RepeatedVariable { line: usize, var: usize },
}

/// DIMACS cnf with exactly three literals per clause.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut last = 0;
    for (line, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l.is_empty() || l.starts_with('c') || l.starts_with('%') {
            continue;
        }
        last = line;
        let mut it = l.split_whitespace();
        if l.starts_with('p') {
            it.next();
            if header.is_some() {
                return Err(err(line, "second header").into());
            }
            if it.next() != Some("cnf") {
                return Err(err(line, "header must read `p cnf <vars> <clauses>`").into());
            }
            let v = num(line, it.next(), "variable count")?;
            let c = num(line, it.next(), "clause count")?;
            no_more(line, it)?;
            header = Some((v, c));
            continue;
        }
        let (nv, _) = header.ok_or_else(|| err(line, "clause before header"))?;
        let lits: Vec<i64> = it.map(|t| num(line, Some(t), "literal")).collect::<Result<_, _>>()?;
        if lits.last() != Some(&0) {
            return Err(err(line, "clause must end with 0").into());
        }
        let lits = &lits[..lits.len() - 1];
        if lits.len() != 3 || lits.contains(&0) {
            return Err(err(line, format!("expected 3 nonzero literals, found {}", lits.len())).into());
        }
        let mut cl = [Literal::new(0, true); 3];
        for (a, &x) in lits.iter().enumerate() {
            let var = x.unsigned_abs() as usize;
            if var > nv {
                return Err(err(line, format!("variable {var} outside 1..={nv}")).into());
            }
            if cl[..a].iter().any(|o| o.var == var) {
                return Err(CnfError::RepeatedVariable { line, var });
            }
            cl[a] = Literal::new(var, x > 0);
        }
        clauses.push(cl);
    }
    let (nv, nc) = header.ok_or_else(|| err(last, "missing `p cnf` header"))?;
    if clauses.len() != nc {
        return Err(err(last, format!("header promises {nc} clauses, found {}", clauses.len())).into());
    }
    Ok(CnfFormula::new(nv, clauses))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for cl in &f.clauses {
        writeln!(s, "{} {} {} 0", cl[0].to_dimacs(), cl[1].to_dimacs(), cl[2].to_dimacs()).unwrap();
    }
    s
}
