#![allow(dead_code)]

use qpdom_core::dp::{Evaluator, Gamma, GammaKey, Recurrences};
use qpdom_core::graph::{is_1j_dominating, IntervalGraph};
use qpdom_core::oracle::gamma_oracle;
use qpdom_core::Multiplicity;

pub fn graph(iv: &[(f64, f64)]) -> IntervalGraph {
    IntervalGraph::from_intervals(iv).unwrap()
}

pub fn ints(iv: &[(i64, i64)]) -> IntervalGraph {
    let v: Vec<(f64, f64)> = iv.iter().map(|&(a, b)| (a as f64, b as f64)).collect();
    graph(&v)
}

/// Whether a DP entry agrees with brute force.  A DOMINATED pair entry is
/// acceptable when the pair is infeasible or the tail with the same left
/// bound is no worse.
pub fn agrees(ev: &mut Evaluator, g: &IntervalGraph, key: GammaKey) -> Result<(), String> {
    let dp = ev.eval(key).map_err(|e| format!("{key:?}: {e}"))?;
    let or = gamma_oracle(g, key).unwrap().value;
    let ok = match dp {
        Gamma::Value(v) => Some(v) == or,
        Gamma::Undefined => or.is_none(),
        Gamma::Dominated => match (key, or) {
            (_, None) => true,
            (GammaKey::G1Pair(k, i, _), Some(o)) => {
                ev.eval(GammaKey::G1Tail(k, i)).unwrap().value().is_some_and(|t| t <= o)
            }
            _ => false,
        },
    };
    if !ok {
        return Err(format!("{key:?}: dp {dp:?}, oracle {or:?}"));
    }
    if let Gamma::Value(v) = dp {
        let w = ev.witness(key).unwrap().expect("valued key has a witness");
        let kc = key.constraint();
        let pg = g.graph().induced_prefix(kc.prefix).unwrap();
        let cert = is_1j_dominating(&pg, &w, Multiplicity::AtMost(2)).unwrap();
        let fits = kc.include.iter().all(|x| w.contains(x)) && kc.exclude.iter().all(|x| !w.contains(x));
        if !cert.valid || w.len() != v || !fits {
            return Err(format!("{key:?}: bad witness {w:?} for value {v}"));
        }
    }
    Ok(())
}

/// Every key of `g`; returns the failures.
pub fn per_table(g: &IntervalGraph, rec: Recurrences) -> Vec<String> {
    let mut ev = Evaluator::with_options(g, rec, 1 << 24).unwrap();
    GammaKey::all(g.n()).into_iter().filter_map(|k| agrees(&mut ev, g, k).err()).collect()
}
