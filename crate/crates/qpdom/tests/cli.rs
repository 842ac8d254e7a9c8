use std::path::Path;
use std::process::{Command, Output};

use qpdom::formats::{parse_chords, parse_labels};
use qpdom::RunReport;

const P3: &str = "1 3\n2 5\n4 6\n";

fn qpdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpdom")).args(args).output().expect("run qpdom")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let o = qpdom(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    qpdom(args).status.code().unwrap()
}

fn file(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn field(out: &str, key: &str) -> Option<String> {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: ")).map(str::to_string))
}

#[test]
fn solve_path() {
    let d = tempfile::tempdir().unwrap();
    let p = file(d.path(), "p3.txt", P3);
    let out = run_ok(&["solve", &p]);
    assert_eq!(field(&out, "gamma12").as_deref(), Some("1"));
    assert_eq!(field(&out, "witness"), None);
    let out = run_ok(&["solve", &p, "--witness"]);
    assert_eq!(field(&out, "witness").as_deref(), Some("2"));
    assert_eq!(field(&out, "witness_valid").as_deref(), Some("true"));
}

#[test]
fn solve_edge_list() {
    let d = tempfile::tempdir().unwrap();
    let p = file(d.path(), "p3.edges", "c comment-free header follows\n");
    assert_eq!(code(&["solve", &p]), 2);
    let p = file(d.path(), "p3.edges", "p edge 3 2\ne 1 2\ne 2 3\n");
    assert_eq!(field(&run_ok(&["solve", &p]), "gamma12").as_deref(), Some("1"));
    // 1-3 without 2-3 breaks the numbering
    let p = file(d.path(), "bad.edges", "p edge 3 2\ne 1 3\ne 1 2\n");
    assert_eq!(code(&["solve", &p]), 3);
}

#[test]
fn parse_errors_exit_2() {
    let d = tempfile::tempdir().unwrap();
    let p = file(d.path(), "bad.txt", "1 3\n# fine\n2 five\n");
    let o = qpdom(&["solve", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let p = file(d.path(), "flat.txt", "4 4\n");
    assert_eq!(code(&["solve", &p]), 2);
    assert_eq!(code(&["solve", "/nonexistent/file"]), 2);
}

#[test]
fn oracle_examples() {
    let d = tempfile::tempdir().unwrap();
    let p = file(d.path(), "p3.txt", P3);
    assert_eq!(field(&run_ok(&["oracle", &p, "--j", "2"]), "value").as_deref(), Some("1"));
    let out = run_ok(&["oracle", &p, "--exclude", "2", "--witness"]);
    assert_eq!(field(&out, "value").as_deref(), Some("2"));
    assert_eq!(field(&out, "witness").as_deref(), Some("1 3"));
    let out = run_ok(&["oracle", &p, "--budget", "0"]);
    assert_eq!(field(&out, "value").as_deref(), Some("UNDEFINED"));
    assert_eq!(field(&out, "exceeds_budget").as_deref(), Some("true"));
    let big: String = (0..30).map(|i| format!("{} {}\n", 3 * i, 3 * i + 1)).collect();
    let p = file(d.path(), "big.txt", &big);
    assert_eq!(code(&["oracle", &p]), 4);
    assert_eq!(code(&["oracle", &p, "--j", "zero"]), 2);
}

#[test]
fn strict_fixture_separates_gamma_from_gamma12() {
    let p = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/strict.intervals");
    assert_eq!(field(&run_ok(&["solve", p]), "gamma12").as_deref(), Some("4"));
    assert_eq!(field(&run_ok(&["oracle", p, "--j", "inf"]), "value").as_deref(), Some("3"));
    assert_eq!(field(&run_ok(&["oracle", p, "--j", "3"]), "value").as_deref(), Some("3"));
}

#[test]
fn fuzz_clean_and_negative_control() {
    let out = run_ok(&["fuzz", "--trials", "500", "--max-n", "16"]);
    assert_eq!(field(&out, "mismatches").as_deref(), Some("0"));
    let out = run_ok(&["fuzz", "--trials", "100", "--max-n", "16", "--kind", "unit"]);
    assert_eq!(field(&out, "strict_found").as_deref(), Some("0"));
    let o = qpdom(&["fuzz", "--trials", "60", "--min-n", "3", "--max-n", "10", "--per-table", "--recurrences", "published"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_ne!(field(&out, "mismatches").as_deref(), Some("0"));
    assert!(field(&out, "mismatch_instance").is_some());
    assert!(field(&out, "mismatch_trial_seed").is_some());
    assert!(String::from_utf8_lossy(&o.stderr).contains("mismatching"));
}

#[test]
fn fuzz_is_deterministic_across_workers() {
    let a = run_ok(&["fuzz", "--trials", "300", "--kind", "multiscale", "--threads", "1", "--find-strict", "--json"]);
    let b = run_ok(&["fuzz", "--trials", "300", "--kind", "multiscale", "--threads", "3", "--find-strict", "--json"]);
    let (a, b) = (RunReport::from_json(&a).unwrap(), RunReport::from_json(&b).unwrap());
    assert_eq!(a.results, b.results);
}

#[test]
fn reduce_examples() {
    let d = tempfile::tempdir().unwrap();
    let one = file(d.path(), "one.cnf", "c single clause\np cnf 3 1\n1 2 3 0\n");
    let out_path = d.path().join("one.chords");
    let out = run_ok(&["reduce", "--cnf", &one, "--out", out_path.to_str().unwrap()]);
    assert_eq!((field(&out, "k").as_deref(), field(&out, "chords").as_deref()), (Some("7"), Some("34")));
    let chords = std::fs::read_to_string(&out_path).unwrap();
    assert!(chords.starts_with("# k 7\n"));
    assert_eq!(parse_chords(&chords).unwrap().len(), 34);
    let golden = include_str!("../../qpdom-core/tests/data/single_clause.chords");
    assert_eq!(chords, golden);
    let labels = parse_labels(&std::fs::read_to_string(d.path().join("one.chords.labels")).unwrap()).unwrap();
    assert_eq!(labels.len(), 34);
    assert_eq!(labels[0].0, 1);

    let two = file(d.path(), "two.cnf", "p cnf 4 2\n-1 2 3 0\n1 2 4 0\n");
    let out = run_ok(&["reduce", "--cnf", &two]);
    assert_eq!((field(&out, "k").as_deref(), field(&out, "chords").as_deref()), (Some("18"), Some("88")));
    let empty = file(d.path(), "empty.cnf", "p cnf 0 0\n");
    let out = run_ok(&["reduce", "--cnf", &empty]);
    assert_eq!((field(&out, "k").as_deref(), field(&out, "chords").as_deref()), (Some("0"), Some("0")));

    let rep = file(d.path(), "rep.cnf", "p cnf 2 1\n1 -1 2 0\n");
    assert_eq!(code(&["reduce", "--cnf", &rep]), 5);
    let short = file(d.path(), "short.cnf", "p cnf 3 1\n1 2 0\n");
    assert_eq!(code(&["reduce", "--cnf", &short]), 2);
    let unterminated = file(d.path(), "unterminated.cnf", "p cnf 3 1\n1 2 3\n");
    assert_eq!(code(&["reduce", "--cnf", &unterminated]), 2);
}

#[test]
fn verify_reduction_examples() {
    let d = tempfile::tempdir().unwrap();
    let one = file(d.path(), "one.cnf", "p cnf 3 1\n1 2 3 0\n");
    let out = run_ok(&["verify-reduction", "--cnf", &one]);
    assert_eq!(field(&out, "agree").as_deref(), Some("true"));
    assert_eq!(field(&out, "min_dom").as_deref(), Some("7"));
    assert_eq!(field(&out, "decoded_satisfies").as_deref(), Some("true"));
    let out = run_ok(&["verify-reduction", "--cnf", &one, "--budget", "6"]);
    assert_eq!(field(&out, "exceeds_budget").as_deref(), Some("true"));
    let empty = file(d.path(), "empty.cnf", "p cnf 0 0\n");
    let out = run_ok(&["verify-reduction", "--cnf", &empty]);
    assert_eq!((field(&out, "sat").as_deref(), field(&out, "k").as_deref()), (Some("true"), Some("0")));
    let two = file(d.path(), "two.cnf", "p cnf 4 2\n-1 2 3 0\n1 2 4 0\n");
    let o = qpdom(&["verify-reduction", "--cnf", &two]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("88 chords"));
}

#[test]
fn bench_examples() {
    let out = run_ok(&["bench", "--sizes", "10,20,30", "--runs", "1"]);
    assert_eq!(field(&out, "sizes").as_deref(), Some("10 20 30"));
    assert_eq!(field(&out, "median_ms").unwrap().split(' ').count(), 3);
    assert!(field(&out, "slope").is_some());
    let out = run_ok(&["bench", "--sizes", "10", "--runs", "1"]);
    assert_eq!(field(&out, "slope"), None);
    assert_eq!(code(&["bench", "--sizes", "20,10"]), 2);
}

#[test]
fn gen_round_trips_through_solve() {
    let d = tempfile::tempdir().unwrap();
    let a = run_ok(&["gen", "--n", "12", "--seed", "4"]);
    assert_eq!(a, run_ok(&["gen", "--n", "12", "--seed", "4"]));
    assert_eq!(a.lines().count(), 12);
    let p = file(d.path(), "g.txt", &a);
    assert!(field(&run_ok(&["solve", &p]), "gamma12").is_some());
    let cnf = run_ok(&["gen", "--kind", "3sat", "--n", "5", "--clauses", "3"]);
    let c = file(d.path(), "g.cnf", &cnf);
    assert_eq!(field(&run_ok(&["reduce", "--cnf", &c]), "m").as_deref(), Some("3"));
    let out_path = d.path().join("u.txt");
    let rep = run_ok(&["gen", "--kind", "unit", "--n", "6", "--out", out_path.to_str().unwrap()]);
    assert_eq!(field(&rep, "command").as_deref(), Some("gen"));
    assert_eq!(std::fs::read_to_string(out_path).unwrap().lines().count(), 6);
}

#[test]
fn json_round_trips() {
    let d = tempfile::tempdir().unwrap();
    let p = file(d.path(), "p3.txt", P3);
    for args in [
        vec!["solve", p.as_str(), "--witness", "--json"],
        vec!["oracle", p.as_str(), "--budget", "1", "--json"],
        vec!["fuzz", "--trials", "20", "--json"],
        vec!["bench", "--sizes", "5,10", "--runs", "1", "--json"],
    ] {
        let s = run_ok(&args);
        let r = RunReport::from_json(&s).unwrap();
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.to_json().trim_end(), s.trim_end());
    }
    let r = RunReport::from_json(&run_ok(&["solve", &p, "--json"])).unwrap();
    assert_eq!(r.get("gamma12"), Some(&serde_json::json!(1)));
    assert_eq!(r.input_sha256.as_ref().map(String::len), Some(64));
}
