mod common;

use proptest::prelude::*;
use qpdom_core::dp::{solve_gamma12, solve_with, DpError, Evaluator, Gamma, GammaKey, KeyKind, Recurrences};
use qpdom_core::gen::gen_multiscale_intervals;
use qpdom_core::graph::{is_1j_dominating, Graph, IntervalGraph};
use qpdom_core::oracle::{gamma_oracle, min_dom, MembershipConstraint};
use qpdom_core::Multiplicity;

use Gamma::{Dominated, Undefined, Value};
use GammaKey::*;

const P3: &[(i64, i64)] = &[(1, 3), (2, 5), (4, 6)];
const P4: &[(i64, i64)] = &[(0, 2), (1, 4), (3, 6), (5, 8)];
const P5: &[(i64, i64)] = &[(0, 2), (1, 4), (3, 6), (5, 8), (7, 10)];
const PAIR: &[(i64, i64)] = &[(0, 2), (1, 3)];
const APART: &[(i64, i64)] = &[(0, 1), (2, 3)];
const EDGE_AND_ISOLATED: &[(i64, i64)] = &[(0, 2), (1, 3), (5, 6)];
const TRIANGLE: &[(i64, i64)] = &[(0, 3), (1, 4), (2, 5)];
const K5: &[(i64, i64)] = &[(0, 20), (1, 21), (2, 22), (3, 23), (4, 24)];

fn eval(iv: &[(i64, i64)], key: GammaKey) -> Gamma {
    Evaluator::new(&common::ints(iv)).unwrap().eval(key).unwrap()
}

fn published(iv: &[(i64, i64)], key: GammaKey) -> Gamma {
    let g = common::ints(iv);
    Evaluator::with_options(&g, Recurrences::Published, 1 << 20).unwrap().eval(key).unwrap()
}

fn oracle(iv: &[(i64, i64)], key: GammaKey) -> Option<usize> {
    gamma_oracle(&common::ints(iv), key).unwrap().value
}

#[test]
fn prefix_tables() {
    assert_eq!(eval(&[(0, 1)], G0Prefix(1)), Undefined);
    assert_eq!(eval(PAIR, G0Prefix(2)), Value(1));
    assert_eq!(eval(P3, G0Prefix(3)), Value(1));
    assert_eq!(eval(&[(0, 1)], G1Prefix(1)), Value(1));
    assert_eq!(eval(EDGE_AND_ISOLATED, G1Prefix(3)), Value(2));
    assert_eq!(eval(P3, G1Prefix(3)), Value(2));
}

#[test]
fn exclusion_tables() {
    assert_eq!(eval(P3, G0Range(3, 3)), Value(1));
    assert_eq!(eval(PAIR, G0Range(1, 2)), Undefined);
    // maxlow(3) = 2 on P3, so any range starting at or below 2 is empty
    assert_eq!(eval(P3, G0Range(2, 3)), Undefined);
    assert_eq!(eval(PAIR, G0Single(1, 2, 1)), Value(1));
    assert_eq!(eval(P3, G0Single(2, 3, 2)), Value(1));
    // k' = 1 < maxlow(3) = 2
    assert_eq!(eval(P3, G0Single(1, 3, 1)), Undefined);
}

#[test]
fn tail_and_pair_tables() {
    assert_eq!(eval(PAIR, G1Tail(1, 2)), Value(1));
    assert_eq!(eval(P3, G1Tail(2, 3)), Value(2));
    assert_eq!(eval(APART, G1Tail(1, 2)), Undefined);
    assert_eq!(eval(TRIANGLE, G1Pair(1, 3, 2)), Dominated);
    assert_eq!(oracle(TRIANGLE, G1Pair(1, 3, 2)), Some(2));
    assert_eq!(eval(TRIANGLE, G1Tail(1, 3)), Value(1));
    assert_eq!(eval(P4, G1Pair(1, 4, 1)), Value(2));
    // the algorithm's base case stores infinity here as a shortcut; the
    // tail entry beside it is smaller
    assert_eq!(oracle(PAIR, G1Pair(1, 2, 1)), Some(2));
    assert_eq!(eval(PAIR, G1Pair(1, 2, 1)), Value(2));
    assert_eq!(eval(PAIR, G1Tail(1, 2)), Value(1));
}

#[test]
fn triple_and_run_tables() {
    assert_eq!(oracle(P5, G1Triple(1, 5, 3, 2)), Some(3));
    assert_eq!(eval(P5, G1Triple(1, 5, 3, 2)), Value(3));
    for iv in [P3, TRIANGLE, EDGE_AND_ISOLATED, &[(0, 1), (2, 3), (4, 5)][..]] {
        assert_eq!(eval(iv, G11Run(1, 3, 2, 1)), Value(3));
    }
    // vertex 3 would see four members
    assert_eq!(oracle(K5, G11Run(1, 5, 4, 2)), None);
    assert_eq!(eval(K5, G11Run(1, 5, 4, 2)), Undefined);
}

#[test]
fn solve_examples() {
    let s = solve_gamma12(&common::ints(P3)).unwrap();
    assert_eq!((s.value, s.witness), (1, vec![2]));
    let s = solve_gamma12(&common::ints(&[(0, 1)])).unwrap();
    assert_eq!((s.value, s.witness), (1, vec![1]));
    let apart: Vec<(i64, i64)> = (0..5).map(|i| (3 * i, 3 * i + 1)).collect();
    let s = solve_gamma12(&common::ints(&apart)).unwrap();
    assert_eq!((s.value, s.witness), (5, vec![1, 2, 3, 4, 5]));
}

#[test]
fn errors() {
    let g = IntervalGraph::from_graph(Graph::empty(0)).unwrap();
    assert_eq!(solve_gamma12(&g).unwrap_err(), DpError::EmptyGraph);
    let mut ev = Evaluator::new(&common::ints(P3)).unwrap();
    assert!(matches!(ev.eval(G1Pair(2, 3, 1)), Err(DpError::Key(_))));
    assert!(matches!(ev.eval(G0Prefix(4)), Err(DpError::Key(_))));
    let big: Vec<(i64, i64)> = (0..60).map(|i| (i, i + 10)).collect();
    assert_eq!(solve_with(&common::ints(&big), Recurrences::Corrected, 100).unwrap_err(), DpError::MemoCap { cap: 100 });
}

/// Minimized counterexamples to the original triple/run rules, with brute-force
/// values: (intervals, key, true value, published value).
type Case = (&'static [(i64, i64)], GammaKey, Option<usize>, Gamma);

const COUNTEREXAMPLES: &[Case] = &[
    (&[(21, 43), (32, 49), (34, 55)], G1Tail(2, 3), Some(1), Value(1)),
    (&[(6, 35), (23, 53), (65, 66), (55, 69), (53, 83), (67, 86), (74, 93)], G1Pair(6, 7, 6), Some(4), Value(4)),
    (&[(36, 51), (49, 56), (30, 57), (70, 89)], G1Triple(1, 4, 3, 2), Some(3), Undefined),
    (&[(17, 46), (48, 61), (66, 79), (58, 86)], G1Triple(1, 4, 3, 1), Some(3), Undefined),
    (&[(44, 61), (64, 67), (64, 81), (58, 85)], G1Triple(2, 4, 3, 2), Some(3), Value(4)),
    (&[(19, 27), (66, 79), (81, 86), (94, 95), (81, 109)], G11Run(1, 5, 4, 2), Some(4), Undefined),
    (&[(31, 34), (55, 61), (57, 69), (49, 77), (69, 97)], G11Run(1, 5, 4, 2), None, Value(4)),
];

#[test]
fn counterexamples_are_fixed() {
    for &(iv, key, truth, _) in COUNTEREXAMPLES {
        assert_eq!(oracle(iv, key), truth, "{key:?}");
        assert_eq!(eval(iv, key).value(), truth, "{key:?}");
    }
}

#[test]
fn published_triple_and_run_recurrences_fail() {
    // the first two rows are fixed in both variants
    for &(iv, key, truth, old) in &COUNTEREXAMPLES[2..] {
        assert_eq!(published(iv, key), old, "{key:?}");
        assert_ne!(old.value(), truth);
    }
}

/// Dropping vertex 9 from the optimum {3, 6, 7, 9, 10} would leave it
/// next to 6, 7 and 10.
const SKIPPED_PAIR: &[(i64, i64)] = &[
    (70, 110), (44, 45), (10, 40), (88, 89), (70, 140), (50, 65), (26, 28), (30, 70), (40, 70), (90, 140), (19, 21),
];

#[test]
fn dominated_pairs_are_resolved_when_consumed() {
    assert_eq!(oracle(SKIPPED_PAIR, G0Prefix(11)), Some(5));
    assert_eq!(eval(SKIPPED_PAIR, G1Pair(8, 10, 9)), Dominated);
    assert_eq!(oracle(SKIPPED_PAIR, G1Pair(8, 10, 9)), Some(5));
    assert_eq!(oracle(SKIPPED_PAIR, G1Tail(8, 10)), None);
    assert_eq!(eval(SKIPPED_PAIR, G0Prefix(11)), Value(5));
    let s = solve_gamma12(&common::ints(SKIPPED_PAIR)).unwrap();
    assert_eq!((s.value, s.witness), (5, vec![3, 6, 7, 9, 10]));
    assert_eq!(published(SKIPPED_PAIR, G0Prefix(11)), Undefined);
}

/// γ = 3 < γ[1,2] = 4: the near-twin hubs 5 and 6 see the members 3 and
/// 7 forced by the leaves, plus whatever dominates 4.
const STRICT: &[(i64, i64)] = &[(1, 2), (3, 4), (0, 28), (26, 126), (27, 125), (66, 86), (124, 152), (146, 147), (149, 150)];

#[test]
fn gamma12_can_exceed_gamma() {
    let g = common::ints(STRICT);
    let none = MembershipConstraint::none();
    assert_eq!(min_dom(g.graph(), Multiplicity::Unbounded, &none).unwrap().value, Some(3));
    assert_eq!(min_dom(g.graph(), Multiplicity::AtMost(3), &none).unwrap().value, Some(3));
    assert_eq!(solve_gamma12(&g).unwrap().value, 4);
    assert_eq!(oracle_gamma12(&g), 4);
}

#[test]
fn every_key_small_paths_and_cliques() {
    for iv in [P3, P4, P5, TRIANGLE, K5, EDGE_AND_ISOLATED] {
        let g = common::ints(iv);
        assert_eq!(common::per_table(&g, Recurrences::Corrected), Vec::<String>::new());
    }
}

#[test]
fn key_kinds_are_all_enumerated() {
    let keys = GammaKey::all(6);
    for kind in KeyKind::ALL {
        assert!(keys.iter().any(|k| k.kind() == kind), "{}", kind.name());
    }
    assert!(keys.iter().all(|k| k.validate(6).is_ok()));
}

fn intervals(max_n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0u32..100, 1u32..=30), 1..=max_n)
        .prop_map(|v| v.into_iter().map(|(l, d)| (l as f64, (l + d) as f64)).collect())
}

fn oracle_gamma12(g: &IntervalGraph) -> usize {
    min_dom(g.graph(), Multiplicity::AtMost(2), &MembershipConstraint::none()).unwrap().value.unwrap()
}

#[test]
fn multiscale_instances_match_oracle() {
    for seed in 0..3000 {
        let g = common::graph(&gen_multiscale_intervals(10 + (seed % 5) as usize, seed));
        let s = solve_gamma12(&g).unwrap();
        assert_eq!(s.value, oracle_gamma12(&g), "seed {seed}");
        assert!(is_1j_dominating(g.graph(), &s.witness, Multiplicity::AtMost(2)).unwrap().valid);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn per_table_matches_oracle(iv in intervals(10)) {
        let g = common::graph(&iv);
        prop_assert_eq!(common::per_table(&g, Recurrences::Corrected), Vec::<String>::new());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn solve_matches_oracle(iv in intervals(16)) {
        let g = common::graph(&iv);
        let s = solve_gamma12(&g).unwrap();
        prop_assert_eq!(s.value, oracle_gamma12(&g));
        prop_assert!(is_1j_dominating(g.graph(), &s.witness, Multiplicity::AtMost(2)).unwrap().valid);
        prop_assert_eq!(s.witness.len(), s.value);
    }

    #[test]
    fn affine_maps_change_nothing(iv in intervals(14), a in 1u32..50, b in -100i32..100) {
        let g = common::graph(&iv);
        let moved: Vec<(f64, f64)> =
            iv.iter().map(|&(l, r)| (a as f64 * l + b as f64, a as f64 * r + b as f64)).collect();
        let h = common::graph(&moved);
        prop_assert_eq!(g.graph(), h.graph());
        prop_assert_eq!(solve_gamma12(&g).unwrap(), solve_gamma12(&h).unwrap());
    }

    #[test]
    fn prefix_optima_are_bounded_and_stable(iv in intervals(16)) {
        let g = common::graph(&iv);
        let mut ev = Evaluator::new(&g).unwrap();
        for p in 1..=g.n() {
            let v = ev.prefix_optimum(p).unwrap();
            prop_assert!(v <= p);
            prop_assert_eq!(ev.prefix_optimum(p).unwrap(), v);
        }
        let keys = GammaKey::all(g.n().min(8));
        let first: Vec<Gamma> = keys.iter().map(|&k| ev.eval(k).unwrap()).collect();
        let again: Vec<Gamma> = keys.iter().map(|&k| ev.eval(k).unwrap()).collect();
        prop_assert_eq!(first, again);
    }
}
