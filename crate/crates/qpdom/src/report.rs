//! The structured output of every command.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use qpdom_core::dp::MemoStats;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemoReport {
    pub entries: usize,
    pub peel_states: usize,
    pub peak: usize,
}

impl From<MemoStats> for MemoReport {
    fn from(s: MemoStats) -> Self {
        MemoReport { entries: s.entries, peel_states: s.peel_states, peak: s.peak }
    }
}

/// One run: what was asked, on which input, and what came out.
///
/// `results` keeps insertion order, so both renderings have a stable
/// field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input_sha256: Option<String>,
    pub seed: Option<u64>,
    pub results: Map<String, Value>,
    pub witness: Option<Vec<usize>>,
    pub time_ms: f64,
    pub memo: Option<MemoReport>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            input_sha256: None,
            seed: None,
            results: Map::new(),
            witness: None,
            time_ms: 0.0,
            memo: None,
        }
    }

    pub fn digest(&mut self, bytes: &[u8]) {
        self.input_sha256 = Some(hex(&Sha256::digest(bytes)));
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.results.get(key)
    }

    /// `key: value` lines.  Arrays are space separated and null reads
    /// `UNDEFINED`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        if let Some(d) = &self.input_sha256 {
            writeln!(s, "input_sha256: {d}").unwrap();
        }
        if let Some(seed) = self.seed {
            writeln!(s, "seed: {seed}").unwrap();
        }
        for (k, v) in &self.results {
            writeln!(s, "{k}: {}", scalar(v)).unwrap();
        }
        if let Some(w) = &self.witness {
            writeln!(s, "witness: {}", join(w)).unwrap();
        }
        writeln!(s, "time_ms: {:.3}", self.time_ms).unwrap();
        if let Some(m) = &self.memo {
            writeln!(s, "memo_entries: {}", m.entries).unwrap();
            writeln!(s, "memo_peel_states: {}", m.peel_states).unwrap();
            writeln!(s, "memo_peak: {}", m.peak).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain data")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "UNDEFINED".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

pub(crate) fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::new(), |mut s, b| {
        write!(s, "{b:02x}").unwrap();
        s
    })
}
