//! The 3SAT to circle-graph reduction.
//!
//! Every clause owns a contiguous block of 68 circle positions laid out by
//! [`SECTION_LAYOUT`].  A variable occurring in several clauses links each
//! occurrence to the next one with two connection chords.  Each of those
//! chords is anchored by its own claw, placed next to its left endpoint.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{chords_to_graph, is_1j_dominating, Chord, ChordDiagram, Graph, GraphError, Multiplicity};
use crate::oracle::{self, MembershipConstraint, OracleConfig, OracleError};

/// Endpoint order of one clause section.  A trailing `'` marks the second
/// endpoint of a chord, `[..]` marks the slot where connection chords of
/// the named truth or false chord attach.
pub const SECTION_LAYOUT: &str = "f2 [F2] p2y p2x t2 f2' p2x' p2y' [T2] a2x a2y t2' g1 f1 [F1] p1y p1x t1 f1' \
p1x' p1y' [T1] a1y a1x t1' u13 u12 a1x' a1y' u23 l1b c1 l1b' g1' l1c l1a c1' l1a' l1c' w12 w23 u13' a2y' \
a2x' w13 w12' w23' c2 g2 l2c l2a l2b c2' l2b' l2a' l2c' u12' a3y a3x u23' w13' t3 a3x' a3y' [T3] p3y p3x f3 \
t3' p3x' p3y' [F3] f3' g2'";

/// Chords per clause section.
pub const CLAUSE_CHORDS: usize = 34;
/// Chords per repeated occurrence: two connection chords with a claw each.
pub const LINK_CHORDS: usize = 10;

/// Clause chords crossed by a connection chord ending in each slot.
pub const SLOT_CROSSINGS: [(&str, &[&str]); 6] = [
    ("T1", &["t1", "a2x", "a2y", "g1"]),
    ("F1", &["f1", "a2x", "a2y", "g1"]),
    ("T2", &["t2"]),
    ("F2", &["f2"]),
    ("T3", &["t3", "g2"]),
    ("F3", &["f3", "g2"]),
];

/// A variable (1-based) with its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    /// DIMACS form.
    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn eval(self, values: &[bool]) -> bool {
        values[self.var - 1] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// A 3-CNF formula.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

/// Truth values of variables `1..=n`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn get(&self, var: usize) -> bool {
        self.values[var - 1]
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReductionError {
    #[error("clause {clause} repeats variable {var}; every variable may appear at most once per clause")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause {clause} uses variable {var}, outside 1..={num_vars}")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },
    #[error("{num_vars} variables exceed the enumeration cap of {cap}")]
    TooManyVariables { num_vars: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Limit of [`sat_brute`].
pub const SAT_BRUTE_CAP: usize = 20;

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Self {
        CnfFormula { num_vars, clauses }
    }

    /// Checks variable ranges and the distinct-variables rule.
    pub fn validate(&self) -> Result<(), ReductionError> {
        for (c, cl) in self.clauses.iter().enumerate() {
            for (a, lit) in cl.iter().enumerate() {
                if lit.var == 0 || lit.var > self.num_vars {
                    return Err(ReductionError::VariableOutOfRange {
                        clause: c + 1,
                        var: lit.var,
                        num_vars: self.num_vars,
                    });
                }
                if cl[..a].iter().any(|o| o.var == lit.var) {
                    return Err(ReductionError::RepeatedVariable { clause: c + 1, var: lit.var });
                }
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|cl| cl.iter().any(|l| l.eval(&a.values)))
    }

    /// Occurrences of each variable as (clause, position, literal), in
    /// clause order.
    fn occurrences(&self) -> BTreeMap<usize, Vec<(usize, usize, Literal)>> {
        let mut occ: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for (c, cl) in self.clauses.iter().enumerate() {
            for (p, &lit) in cl.iter().enumerate() {
                occ.entry(lit.var).or_default().push((c, p, lit));
            }
        }
        occ
    }

    /// Number of links, `Σ max(0, occurrences − 1)`.
    pub fn repetitions(&self) -> usize {
        self.occurrences().values().map(|o| o.len() - 1).sum()
    }
}

/// `7m + 2t`.
pub fn target_k(f: &CnfFormula) -> usize {
    7 * f.clauses.len() + 2 * f.repetitions()
}

/// Exhaustive satisfiability check.
pub fn sat_brute(f: &CnfFormula) -> Result<Option<Assignment>, ReductionError> {
    f.validate()?;
    if f.num_vars > SAT_BRUTE_CAP {
        return Err(ReductionError::TooManyVariables { num_vars: f.num_vars, cap: SAT_BRUTE_CAP });
    }
    for mask in 0u32..1 << f.num_vars {
        let a = Assignment { values: (0..f.num_vars).map(|v| mask >> v & 1 == 1).collect() };
        if f.satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// The four connection chord kinds, named by the slots they join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnKind {
    TT,
    FF,
    TF,
    FT,
}

impl ConnKind {
    pub fn name(self) -> &'static str {
        match self {
            ConnKind::TT => "tt",
            ConnKind::FF => "ff",
            ConnKind::TF => "tf",
            ConnKind::FT => "ft",
        }
    }

    /// Whether the chord starts at a truth slot and ends at one.
    fn ends(self) -> (bool, bool) {
        match self {
            ConnKind::TT => (true, true),
            ConnKind::FF => (false, false),
            ConnKind::TF => (true, false),
            ConnKind::FT => (false, true),
        }
    }
}

/// What a chord is for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Truth,
    False,
    APair,
    PPair,
    U,
    W,
    Guard,
    ClawCenter,
    ClawLeaf,
    Connection(ConnKind),
    Anchor,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Truth => "t",
            Role::False => "f",
            Role::APair => "a",
            Role::PPair => "p",
            Role::U => "u",
            Role::W => "w",
            Role::Guard => "g",
            Role::ClawCenter => "c",
            Role::ClawLeaf => "leaf",
            Role::Connection(k) => k.name(),
            Role::Anchor => "s",
        }
    }

    fn of_local(name: &str) -> Role {
        match name.as_bytes()[0] {
            b't' => Role::Truth,
            b'f' => Role::False,
            b'a' => Role::APair,
            b'p' => Role::PPair,
            b'u' => Role::U,
            b'w' => Role::W,
            b'g' => Role::Guard,
            b'c' => Role::ClawCenter,
            _ => Role::ClawLeaf,
        }
    }
}

/// One connection chord with its claw, as vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub kind: ConnKind,
    pub var: usize,
    /// Clause indices (0-based) and literal positions (0-based) of the two
    /// linked occurrences.
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub chord: usize,
    pub anchor: usize,
    pub leaves: [usize; 3],
}

/// Output of [`build_gadget`].  Vertex `v` of the graph is chord `v - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GadgetInstance {
    pub formula: CnfFormula,
    pub diagram: ChordDiagram,
    pub k: usize,
    pub t: usize,
    pub labels: BTreeMap<String, usize>,
    pub roles: Vec<Role>,
    pub connections: Vec<Connection>,
}

impl GadgetInstance {
    pub fn m(&self) -> usize {
        self.formula.clauses.len()
    }

    /// Vertex id of a label.
    pub fn id(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    /// Vertex id of a clause-local chord, e.g. `clause_chord(0, "t1")`.
    pub fn clause_chord(&self, clause: usize, name: &str) -> usize {
        self.labels[&clause_label(clause, name)]
    }

    pub fn label_of(&self, v: usize) -> &str {
        &self.diagram.chords()[v - 1].label
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        chords_to_graph(&self.diagram)
    }

    /// The clause-local part of the recipe making literal `lit` (0-based)
    /// of `clause` the true one: its truth chord, the other two false
    /// chords, the matching `(u, w)` pair and both claw centers.
    pub fn recipe(&self, clause: usize, lit: usize) -> Vec<usize> {
        let pair = [("u23", "w23"), ("u13", "w13"), ("u12", "w12")][lit];
        let mut out = Vec::new();
        for l in 0..3 {
            let name = if l == lit { format!("t{}", l + 1) } else { format!("f{}", l + 1) };
            out.push(self.clause_chord(clause, &name));
        }
        for name in [pair.0, pair.1, "c1", "c2"] {
            out.push(self.clause_chord(clause, name));
        }
        out.sort_unstable();
        out
    }
}

fn clause_label(clause: usize, name: &str) -> String {
    format!("c{}.{}", clause + 1, name)
}

#[derive(Clone, Copy)]
enum Token<'a> {
    Open(&'a str),
    Close(&'a str),
    Slot(bool, usize),
}

fn layout_tokens() -> impl Iterator<Item = Token<'static>> {
    SECTION_LAYOUT.split_whitespace().map(|tok| {
        if let Some(s) = tok.strip_prefix('[') {
            let b = s.as_bytes();
            Token::Slot(b[0] == b'T', (b[1] - b'1') as usize)
        } else if let Some(s) = tok.strip_suffix('\'') {
            Token::Close(s)
        } else {
            Token::Open(tok)
        }
    })
}

struct Builder {
    chords: Vec<Chord>,
    roles: Vec<Role>,
    labels: BTreeMap<String, usize>,
    open: BTreeMap<String, usize>,
    pos: usize,
}

impl Builder {
    fn open(&mut self, label: String, role: Role) -> usize {
        self.chords.push(Chord { label: label.clone(), p: self.pos, q: usize::MAX });
        self.roles.push(role);
        let id = self.chords.len();
        self.labels.insert(label.clone(), id);
        self.open.insert(label, id);
        self.pos += 1;
        id
    }

    fn close(&mut self, label: &str) {
        let id = self.open.remove(label).expect("layout closes only open chords");
        self.chords[id - 1].q = self.pos;
        self.pos += 1;
    }
}

/// Builds the gadget of a valid formula.
pub fn build_gadget(f: &CnfFormula) -> Result<GadgetInstance, ReductionError> {
    f.validate()?;
    // links in clause order: (kind, var, link number, from, to)
    let mut links = Vec::new();
    for (&var, occ) in &f.occurrences() {
        for (q, w) in occ.windows(2).enumerate() {
            let kinds = if w[0].2.positive == w[1].2.positive {
                [ConnKind::TF, ConnKind::FT]
            } else {
                [ConnKind::TT, ConnKind::FF]
            };
            for kind in kinds {
                links.push((kind, var, q + 1, (w[0].0, w[0].1), (w[1].0, w[1].1)));
            }
        }
    }
    let mut b = Builder {
        chords: Vec::new(),
        roles: Vec::new(),
        labels: BTreeMap::new(),
        open: BTreeMap::new(),
        pos: 0,
    };
    let conn_label = |l: &(ConnKind, usize, usize, (usize, usize), (usize, usize))| {
        format!("x{}.{}.{}", l.1, l.2, l.0.name())
    };
    for c in 0..f.clauses.len() {
        for tok in layout_tokens() {
            match tok {
                Token::Open(name) => {
                    b.open(clause_label(c, name), Role::of_local(name));
                }
                Token::Close(name) => b.close(&clause_label(c, name)),
                Token::Slot(truth, lit) => {
                    for l in &links {
                        if l.4 == (c, lit) && l.0.ends().1 == truth {
                            b.close(&conn_label(l));
                        }
                    }
                    for l in &links {
                        if l.3 == (c, lit) && l.0.ends().0 == truth {
                            let x = conn_label(l);
                            let leaves = [format!("{x}.L1"), format!("{x}.L2"), format!("{x}.L3")];
                            for leaf in &leaves {
                                b.open(leaf.clone(), Role::ClawLeaf);
                            }
                            b.open(format!("{x}.s"), Role::Anchor);
                            for leaf in leaves.iter().rev() {
                                b.close(leaf);
                            }
                            b.open(x.clone(), Role::Connection(l.0));
                            b.close(&format!("{x}.s"));
                        }
                    }
                }
            }
        }
        debug_assert!(b.open.keys().all(|k| k.starts_with('x')));
    }
    let connections = links
        .iter()
        .map(|l| {
            let x = conn_label(l);
            Connection {
                kind: l.0,
                var: l.1,
                from: l.3,
                to: l.4,
                chord: b.labels[&x],
                anchor: b.labels[&format!("{x}.s")],
                leaves: [1, 2, 3].map(|i| b.labels[&format!("{x}.L{i}")]),
            }
        })
        .collect();
    let diagram = ChordDiagram::new(b.chords)?;
    let t = f.repetitions();
    Ok(GadgetInstance {
        formula: f.clone(),
        diagram,
        k: target_k(f),
        t,
        labels: b.labels,
        roles: b.roles,
        connections,
    })
}

/// A failed structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractViolation(pub String);

impl fmt::Display for ContractViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Checks chord count, `k` and the adjacency contract on the derived
/// graph, which is itself cross-checked against the interval model.
pub fn check_contract(inst: &GadgetInstance) -> Result<(), ContractViolation> {
    let fail = |s: String| Err(ContractViolation(s));
    let m = inst.m();
    if inst.diagram.len() != CLAUSE_CHORDS * m + LINK_CHORDS * inst.t {
        return fail(format!("{} chords, expected 34m+10t", inst.diagram.len()));
    }
    if inst.k != 7 * m + 2 * inst.t {
        return fail(format!("k = {}, expected 7m+2t", inst.k));
    }
    let g = match inst.graph() {
        Ok(g) => g,
        Err(e) => return fail(format!("{e}")),
    };
    let is_conn = |v: usize| matches!(inst.roles[v - 1], Role::Connection(_));
    // neighbours among non-connection chords, as sorted labels
    let local = |v: usize| -> Vec<&str> {
        let mut out: Vec<&str> = g.neighbors(v).iter().filter(|&&u| !is_conn(u)).map(|&u| inst.label_of(u)).collect();
        out.sort_unstable();
        out
    };
    let names = |c: usize, xs: &[&str]| -> Vec<String> {
        let mut out: Vec<String> = xs.iter().map(|x| clause_label(c, x)).collect();
        out.sort_unstable();
        out
    };
    let expect = |v: usize, want: Vec<String>| -> Result<(), ContractViolation> {
        let got = local(v);
        if got.iter().copied().eq(want.iter().map(String::as_str)) {
            Ok(())
        } else {
            Err(ContractViolation(format!("{} crosses {:?}, expected {:?}", inst.label_of(v), got, want)))
        }
    };
    for c in 0..m {
        let id = |x: &str| inst.clause_chord(c, x);
        for l in 1..=3 {
            for half in ["x", "y"] {
                expect(id(&format!("p{l}{half}")), names(c, &[&format!("t{l}"), &format!("f{l}")]))?;
            }
        }
        let a_of = |x: &str| -> Vec<usize> {
            (1..=3)
                .filter(|l| ["x", "y"].iter().any(|h| g.has_edge(id(x), id(&format!("a{l}{h}")))))
                .collect()
        };
        for (x, want) in
            [("u13", &[1][..]), ("w13", &[3]), ("u12", &[1, 2]), ("u23", &[2, 3]), ("w12", &[2]), ("w23", &[2])]
        {
            let got = a_of(x);
            if got != want {
                return fail(format!("{} crosses a-pairs {:?}, expected {:?}", clause_label(c, x), got, want));
            }
            // a pair is crossed as a whole
            for l in want {
                if !g.has_edge(id(x), id(&format!("a{l}x"))) || !g.has_edge(id(x), id(&format!("a{l}y"))) {
                    return fail(format!("{} crosses one half of a{l}", clause_label(c, x)));
                }
            }
        }
        for (a, bb) in [("w12", "w23"), ("w12", "u13"), ("w23", "u13"), ("w12", "w13"), ("w23", "w13")] {
            if !g.has_edge(id(a), id(bb)) {
                return fail(format!("{} misses {}", clause_label(c, a), clause_label(c, bb)));
            }
        }
        expect(id("g1"), names(c, &["c1", "u12", "u13", "u23"]))?;
        expect(id("g2"), names(c, &["c2", "u12", "u23", "w13"]))?;
        for (center, guard) in [("1", "g1"), ("2", "g2")] {
            let leaves = ["a", "b", "c"].map(|s| format!("l{center}{s}"));
            let mut want: Vec<&str> = leaves.iter().map(String::as_str).collect();
            want.push(guard);
            expect(id(&format!("c{center}")), names(c, &want))?;
            for leaf in &leaves {
                if g.neighbors(id(leaf)) != [id(&format!("c{center}"))] {
                    return fail(format!("{} is not a private leaf", clause_label(c, leaf)));
                }
            }
        }
    }
    for cn in &inst.connections {
        let x = inst.label_of(cn.chord);
        let mut want = vec![String::from(inst.label_of(cn.anchor))];
        let (ft, tt) = cn.kind.ends();
        for ((c, lit), truth) in [(cn.from, ft), (cn.to, tt)] {
            let slot = format!("{}{}", if truth { 'T' } else { 'F' }, lit + 1);
            let set = SLOT_CROSSINGS.iter().find(|s| s.0 == slot).expect("six slots").1;
            if !set.contains(&&slot.to_lowercase()[..]) {
                return fail(format!("slot {slot} misses its own chord"));
            }
            want.extend(set.iter().map(|s| clause_label(c, s)));
        }
        want.sort_unstable();
        if local(cn.chord).iter().copied().ne(want.iter().map(String::as_str)) {
            return fail(format!("{x} crosses {:?}, expected {:?}", local(cn.chord), want));
        }
        let mut claw: Vec<usize> = cn.leaves.to_vec();
        claw.push(cn.chord);
        claw.sort_unstable();
        if g.neighbors(cn.anchor) != &claw[..] {
            return fail(format!("anchor of {x} is not a claw center"));
        }
        for &leaf in &cn.leaves {
            if g.neighbors(leaf) != [cn.anchor] {
                return fail(format!("leaf {} is not private", inst.label_of(leaf)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("the set is not a [1,2]-dominating set of size at most k = {k}")]
    Precondition { k: usize },
    #[error("clause {clause} literal {lit}: both truth and false chords are in the set")]
    BothChords { clause: usize, lit: usize },
    #[error("clause {clause} literal {lit}: neither truth nor false chord is in the set")]
    NeitherChord { clause: usize, lit: usize },
    #[error("clause {clause} has no truth chord in the set")]
    NoTrueLiteral { clause: usize },
    #[error("variable {var} is read with both values")]
    Inconsistent { var: usize },
    #[error("vertex {0} is not a chord of the gadget")]
    BadVertex(usize),
}

/// Reads a truth assignment off a small dominating set.  Clause and
/// literal numbers in errors are 1-based.
pub fn decode_assignment(inst: &GadgetInstance, d: &[usize]) -> Result<Assignment, DecodeError> {
    let g = inst.graph().map_err(|_| DecodeError::Precondition { k: inst.k })?;
    let mut set = d.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v == 0 || v > g.n()) {
        return Err(DecodeError::BadVertex(v));
    }
    let cert = is_1j_dominating(&g, &set, Multiplicity::AtMost(2)).map_err(|_| DecodeError::Precondition { k: inst.k })?;
    if !cert.valid || set.len() > inst.k {
        return Err(DecodeError::Precondition { k: inst.k });
    }
    let mut values: Vec<Option<bool>> = vec![None; inst.formula.num_vars];
    for (c, cl) in inst.formula.clauses.iter().enumerate() {
        let mut any = false;
        for (l, lit) in cl.iter().enumerate() {
            let t = set.binary_search(&inst.clause_chord(c, &format!("t{}", l + 1))).is_ok();
            let f = set.binary_search(&inst.clause_chord(c, &format!("f{}", l + 1))).is_ok();
            match (t, f) {
                (true, true) => return Err(DecodeError::BothChords { clause: c + 1, lit: l + 1 }),
                (false, false) => return Err(DecodeError::NeitherChord { clause: c + 1, lit: l + 1 }),
                _ => {}
            }
            any |= t;
            let v = t == lit.positive;
            match values[lit.var - 1] {
                Some(old) if old != v => return Err(DecodeError::Inconsistent { var: lit.var }),
                _ => values[lit.var - 1] = Some(v),
            }
        }
        if !any {
            return Err(DecodeError::NoTrueLiteral { clause: c + 1 });
        }
    }
    Ok(Assignment { values: values.into_iter().map(|v| v.unwrap_or(false)).collect() })
}

/// Outcome of [`verify_reduction_small`].
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub sat: bool,
    pub k: usize,
    pub chords: usize,
    pub budget: usize,
    /// Minimum [1,2]-dominating set size when it is within the budget.
    pub min_dom: Option<usize>,
    pub exceeds_budget: bool,
    pub witness: Option<Vec<usize>>,
    pub decoded: Option<Result<Assignment, DecodeError>>,
    pub decoded_satisfies: Option<bool>,
    /// SAT verdict equals "a set of size at most k exists", and every
    /// decoded assignment satisfies the formula.
    pub agreement: bool,
}

/// Checks both directions of the reduction on one small formula with
/// budget `k`.
pub fn verify_reduction_small(f: &CnfFormula, cfg: &OracleConfig) -> Result<ReductionReport, ReductionError> {
    verify_reduction_with_budget(f, None, cfg)
}

/// [`verify_reduction_small`] with the budget overridden.
pub fn verify_reduction_with_budget(
    f: &CnfFormula,
    budget: Option<usize>,
    cfg: &OracleConfig,
) -> Result<ReductionReport, ReductionError> {
    let inst = build_gadget(f)?;
    let sat = sat_brute(f)?.is_some();
    let g = inst.graph()?;
    let budget = budget.unwrap_or(inst.k);
    let r = oracle::min_dom_with(&g, Multiplicity::AtMost(2), &MembershipConstraint::none(), Some(budget), cfg)?;
    let decoded = r.witness.as_ref().map(|w| decode_assignment(&inst, w));
    let decoded_satisfies = decoded.as_ref().map(|d| d.as_ref().is_ok_and(|a| f.satisfied_by(a)));
    let found = r.value.is_some_and(|v| v <= inst.k);
    let agreement = (budget != inst.k || sat == found) && decoded_satisfies != Some(false);
    Ok(ReductionReport {
        sat,
        k: inst.k,
        chords: inst.diagram.len(),
        budget,
        min_dom: r.value,
        exceeds_budget: r.exceeds_budget,
        witness: r.witness,
        decoded,
        decoded_satisfies,
        agreement,
    })
}

/// Every [1,2]-dominating set of size at most `k` of one gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    /// `by_size[s]` counts the sets of size `s`.
    pub by_size: Vec<usize>,
    /// Sets whose decoded assignment fails or does not satisfy the formula.
    pub bad_decodes: usize,
    /// Minimum sets missing a claw center.
    pub centers_missing: usize,
}

impl Census {
    pub fn minimum(&self) -> Option<usize> {
        self.by_size.iter().position(|&c| c > 0)
    }
}

/// Enumerates all sets of size at most `k`.
pub fn census(f: &CnfFormula, cfg: &OracleConfig) -> Result<Census, ReductionError> {
    let inst = build_gadget(f)?;
    let g = inst.graph()?;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    oracle::for_each_dominating_set(&g, Multiplicity::AtMost(2), inst.k, &MembershipConstraint::none(), cfg, |s| {
        sets.push(s.to_vec())
    })?;
    let mut by_size = vec![0; inst.k + 1];
    for s in &sets {
        by_size[s.len()] += 1;
    }
    let min = by_size.iter().position(|&c| c > 0);
    let mut centers: Vec<usize> = Vec::new();
    for c in 0..inst.m() {
        centers.push(inst.clause_chord(c, "c1"));
        centers.push(inst.clause_chord(c, "c2"));
    }
    centers.extend(inst.connections.iter().map(|c| c.anchor));
    let bad_decodes = sets
        .iter()
        .filter(|s| !decode_assignment(&inst, s).is_ok_and(|a| f.satisfied_by(&a)))
        .count();
    let centers_missing = sets
        .iter()
        .filter(|s| Some(s.len()) == min && !centers.iter().all(|c| s.binary_search(c).is_ok()))
        .count();
    Ok(Census { by_size, bad_decodes, centers_missing })
}
