use alloc::vec::Vec;

/// Identity of one table entry.  Every quantity is a minimum over
/// [1,2]-dominating sets `D` of the prefix `G[1, i]`; the comment on each
/// variant gives the side condition on `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaKey {
    /// `(i)`: `i ∉ D`.
    G0Prefix(usize),
    /// `(j, i)`: `D ∩ [j, i] = ∅`.
    G0Range(usize, usize),
    /// `(j, i, k)`: `D ∩ [j, i] = {k}`.
    G0Single(usize, usize, usize),
    /// `(i)`: `i ∈ D`.
    G1Prefix(usize),
    /// `(j, i)`: `i ∈ D`, `D ∩ [j, i) = ∅`.
    G1Tail(usize, usize),
    /// `(k, i, j)`: `i ∈ D`, `D ∩ [k, i) = {j}`.
    G1Pair(usize, usize, usize),
    /// `(l, i, j, k)`: `i ∈ D`, `D ∩ [l, i) = {j, k}`.
    G1Triple(usize, usize, usize, usize),
    /// `(l, i, j, k)`: `{i, j} ∪ [l, k] ⊆ D` and `D ∩ (k, i) = {j}`.
    G11Run(usize, usize, usize, usize),
}

/// The eight tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KeyKind {
    G0Prefix,
    G0Range,
    G0Single,
    G1Prefix,
    G1Tail,
    G1Pair,
    G1Triple,
    G11Run,
}

impl KeyKind {
    pub const ALL: [KeyKind; 8] = [
        KeyKind::G0Prefix,
        KeyKind::G0Range,
        KeyKind::G0Single,
        KeyKind::G1Prefix,
        KeyKind::G1Tail,
        KeyKind::G1Pair,
        KeyKind::G1Triple,
        KeyKind::G11Run,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KeyKind::G0Prefix => "G0_PREFIX",
            KeyKind::G0Range => "G0_RANGE",
            KeyKind::G0Single => "G0_SINGLE",
            KeyKind::G1Prefix => "G1_PREFIX",
            KeyKind::G1Tail => "G1_TAIL",
            KeyKind::G1Pair => "G1_PAIR",
            KeyKind::G1Triple => "G1_TRIPLE",
            KeyKind::G11Run => "G11_RUN",
        }
    }
}

/// Membership constraint of a key on the prefix it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyConstraint {
    pub prefix: usize,
    pub include: Vec<usize>,
    pub exclude: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("key {key:?} is outside its index range for n = {n}")]
pub struct KeyRangeError {
    pub key: GammaKey,
    pub n: usize,
}

impl GammaKey {
    pub fn kind(&self) -> KeyKind {
        match self {
            GammaKey::G0Prefix(..) => KeyKind::G0Prefix,
            GammaKey::G0Range(..) => KeyKind::G0Range,
            GammaKey::G0Single(..) => KeyKind::G0Single,
            GammaKey::G1Prefix(..) => KeyKind::G1Prefix,
            GammaKey::G1Tail(..) => KeyKind::G1Tail,
            GammaKey::G1Pair(..) => KeyKind::G1Pair,
            GammaKey::G1Triple(..) => KeyKind::G1Triple,
            GammaKey::G11Run(..) => KeyKind::G11Run,
        }
    }

    /// The prefix `i` of the key.
    pub fn top(&self) -> usize {
        match *self {
            GammaKey::G0Prefix(i) | GammaKey::G1Prefix(i) => i,
            GammaKey::G0Range(_, i)
            | GammaKey::G0Single(_, i, _)
            | GammaKey::G1Tail(_, i)
            | GammaKey::G1Pair(_, i, _)
            | GammaKey::G1Triple(_, i, _, _)
            | GammaKey::G11Run(_, i, _, _) => i,
        }
    }

    /// Checks the index ranges of the key for a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<(), KeyRangeError> {
        let ok = match *self {
            GammaKey::G0Prefix(i) | GammaKey::G1Prefix(i) => 1 <= i && i <= n,
            GammaKey::G0Range(j, i) => 1 <= j && j <= i && i <= n,
            GammaKey::G0Single(j, i, k) => 1 <= j && j <= k && k < i && i <= n,
            GammaKey::G1Tail(j, i) => 1 <= j && j < i && i <= n,
            GammaKey::G1Pair(k, i, j) => 1 <= k && k <= j && j < i && i <= n,
            GammaKey::G1Triple(l, i, j, k) | GammaKey::G11Run(l, i, j, k) => {
                1 <= l && l <= k && k < j && j < i && i <= n
            }
        };
        if ok {
            Ok(())
        } else {
            Err(KeyRangeError { key: *self, n })
        }
    }

    /// Translates the key into a prefix plus forced and forbidden members.
    pub fn constraint(&self) -> KeyConstraint {
        let (prefix, include, exclude): (usize, Vec<usize>, Vec<usize>) = match *self {
            GammaKey::G0Prefix(i) => (i, Vec::new(), [i].into()),
            GammaKey::G0Range(j, i) => (i, Vec::new(), (j..=i).collect()),
            GammaKey::G0Single(j, i, k) => (i, [k].into(), (j..=i).filter(|&x| x != k).collect()),
            GammaKey::G1Prefix(i) => (i, [i].into(), Vec::new()),
            GammaKey::G1Tail(j, i) => (i, [i].into(), (j..i).collect()),
            GammaKey::G1Pair(k, i, j) => (i, [i, j].into(), (k..i).filter(|&x| x != j).collect()),
            GammaKey::G1Triple(l, i, j, k) => {
                (i, [i, j, k].into(), (l..i).filter(|&x| x != j && x != k).collect())
            }
            GammaKey::G11Run(l, i, j, k) => {
                let mut inc: Vec<usize> = [i, j].into();
                inc.extend(l..=k);
                (i, inc, (k + 1..i).filter(|&x| x != j).collect())
            }
        };
        KeyConstraint { prefix, include, exclude }
    }

    /// Every valid key of a graph on `n` vertices, grouped by prefix.
    pub fn all(n: usize) -> Vec<GammaKey> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(GammaKey::G0Prefix(i));
            out.push(GammaKey::G1Prefix(i));
            for j in 1..=i {
                out.push(GammaKey::G0Range(j, i));
                for k in j..i {
                    out.push(GammaKey::G0Single(j, i, k));
                }
            }
            for j in 1..i {
                out.push(GammaKey::G1Tail(j, i));
                for k in 1..=j {
                    out.push(GammaKey::G1Pair(k, i, j));
                }
                for k in 1..j {
                    for l in 1..=k {
                        out.push(GammaKey::G1Triple(l, i, j, k));
                        out.push(GammaKey::G11Run(l, i, j, k));
                    }
                }
            }
        }
        out
    }
}
