mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qpdom_core::dp::GammaKey;
use qpdom_core::graph::{is_1j_dominating, Graph};
use qpdom_core::oracle::{
    for_each_dominating_set, gamma_oracle, min_dom, min_dom_bounded, min_dom_with, MembershipConstraint,
    OracleConfig, OracleError,
};
use qpdom_core::Multiplicity::{self, AtMost, Unbounded};

fn none() -> MembershipConstraint {
    MembershipConstraint::none()
}

fn p3() -> Graph {
    Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap()
}

fn k4() -> Graph {
    Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
}

#[test]
fn min_dom_examples() {
    let r = min_dom(&p3(), AtMost(2), &none()).unwrap();
    assert_eq!((r.value, r.witness), (Some(1), Some(vec![2])));

    let r = min_dom(&Graph::empty(4), AtMost(2), &none()).unwrap();
    assert_eq!((r.value, r.witness), (Some(4), Some(vec![1, 2, 3, 4])));

    let c = MembershipConstraint { must_include: vec![], must_exclude: vec![1, 2, 3] };
    let r = min_dom(&p3(), AtMost(2), &c).unwrap();
    assert_eq!((r.value, r.witness, r.exceeds_budget), (None, None, false));
}

#[test]
fn exclusion_example() {
    let c = MembershipConstraint { must_include: vec![], must_exclude: vec![2] };
    let r = min_dom(&p3(), AtMost(2), &c).unwrap();
    assert_eq!((r.value, r.witness), (Some(2), Some(vec![1, 3])));
}

#[test]
fn bounded_examples() {
    assert_eq!(min_dom_bounded(&p3(), AtMost(2), 1).unwrap().value, Some(1));
    let r = min_dom_bounded(&p3(), AtMost(2), 0).unwrap();
    assert_eq!((r.value, r.exceeds_budget), (None, true));
    assert_eq!(min_dom_bounded(&k4(), AtMost(1), 1).unwrap().value, Some(1));
}

#[test]
fn caps() {
    let big = Graph::empty(30);
    assert_eq!(min_dom(&big, AtMost(2), &none()).unwrap_err(), OracleError::CapExceeded { n: 30, cap: 25 });
    // a budget selects the constrained cap
    assert!(min_dom_bounded(&big, AtMost(2), 30).is_ok());
    let cfg = OracleConfig { unconstrained_cap: 40, constrained_cap: 40 };
    assert_eq!(min_dom_with(&big, AtMost(2), &none(), None, &cfg).unwrap().value, Some(30));
    let c = MembershipConstraint { must_include: vec![1], must_exclude: vec![1] };
    assert_eq!(min_dom(&p3(), AtMost(2), &c).unwrap_err(), OracleError::Conflict(1));
    let c = MembershipConstraint { must_include: vec![4], must_exclude: vec![] };
    assert!(matches!(min_dom(&p3(), AtMost(2), &c), Err(OracleError::VertexOutOfRange { vertex: 4, n: 3 })));
}

#[test]
fn gamma_oracle_examples() {
    let g = common::ints(&[(1, 3), (2, 5), (4, 6)]);
    assert_eq!(gamma_oracle(&g, GammaKey::G0Range(3, 3)).unwrap().value, Some(1));
    let r = gamma_oracle(&g, GammaKey::G1Tail(2, 3)).unwrap();
    assert_eq!((r.value, r.witness), (Some(2), Some(vec![1, 3])));
    let one = common::ints(&[(0, 1)]);
    assert_eq!(gamma_oracle(&one, GammaKey::G0Prefix(1)).unwrap().value, None);
    assert!(matches!(gamma_oracle(&g, GammaKey::G1Tail(3, 3)), Err(OracleError::Key(_))));
}

fn naive_sets(g: &Graph, j: Multiplicity, max: usize) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.len() <= max && is_1j_dominating(g, s, j).unwrap().valid)
        .collect()
}

#[test]
fn enumeration_matches_subsets_on_a_spider() {
    let g = Graph::from_edges(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
    let mut got = Vec::new();
    for_each_dominating_set(&g, AtMost(2), 5, &none(), &OracleConfig::default(), |s| got.push(s.to_vec())).unwrap();
    let set: BTreeSet<_> = got.iter().cloned().collect();
    assert_eq!(set.len(), got.len(), "reported twice");
    assert_eq!(set, naive_sets(&g, AtMost(2), 5));
}

fn graphs() -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut it = bits.into_iter();
            for a in 1..=n {
                for b in a + 1..=n {
                    if it.next().unwrap() {
                        e.push((a, b));
                    }
                }
            }
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

fn value(g: &Graph, j: Multiplicity) -> usize {
    min_dom(g, j, &none()).unwrap().value.unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_subset_enumeration(g in graphs(), j in 1usize..=3) {
        let all = naive_sets(&g, AtMost(j), g.n());
        let best = all.iter().map(Vec::len).min().unwrap();
        let r = min_dom(&g, AtMost(j), &none()).unwrap();
        prop_assert_eq!(r.value, Some(best));
        prop_assert!(all.contains(r.witness.as_ref().unwrap()));
        let mut got = BTreeSet::new();
        for_each_dominating_set(&g, AtMost(j), g.n(), &none(), &OracleConfig::default(), |s| {
            assert!(got.insert(s.to_vec()), "reported twice");
        }).unwrap();
        prop_assert_eq!(got, all);
    }

    #[test]
    fn multiplicity_is_monotone(g in graphs()) {
        let n = g.n();
        prop_assert_eq!(value(&g, Unbounded), value(&g, AtMost(n)));
        let vals: Vec<usize> = (1..=3).map(|j| value(&g, AtMost(j))).collect();
        prop_assert!(vals[0] >= vals[1] && vals[1] >= vals[2] && vals[2] >= value(&g, Unbounded));
        prop_assert!(vals[0] <= n);
    }

    #[test]
    fn exclusion_never_helps(g in graphs(), pick in any::<prop::sample::Index>(), j in 1usize..=2) {
        let v = pick.index(g.n()) + 1;
        let base = min_dom(&g, AtMost(j), &none()).unwrap();
        let c = MembershipConstraint { must_include: vec![], must_exclude: vec![v] };
        let r = min_dom(&g, AtMost(j), &c).unwrap();
        if let Some(x) = r.value {
            prop_assert!(x >= base.value.unwrap());
            let w = r.witness.unwrap();
            prop_assert!(!w.contains(&v));
            prop_assert!(is_1j_dominating(&g, &w, AtMost(j)).unwrap().valid);
            prop_assert_eq!(w.len(), x);
        }
    }

    #[test]
    fn budget_agrees_with_minimum(g in graphs(), b in 0usize..10) {
        let m = value(&g, AtMost(2));
        let r = min_dom_bounded(&g, AtMost(2), b).unwrap();
        if m <= b {
            prop_assert_eq!(r.value, Some(m));
        } else {
            prop_assert_eq!((r.value, r.exceeds_budget), (None, true));
        }
    }
}
