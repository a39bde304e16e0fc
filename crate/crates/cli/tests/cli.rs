use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use agw_core::{enumerate_naive, parse_table, parse_table_stream, CayleyTable, EnumSpec};
use tempfile::TempDir;

const Z3SUB: &str = "3\n0 1 2\n2 0 1\n1 2 0\n";
const LEFT_ZERO: &str = "2\n0 0\n1 1\n";
/// AG-groupoid of order 2 with no left identity.
const CONSTANT: &str = "2\n0 0\n0 0\n";

fn agw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agw"))
        .args(args)
        .env_remove("AGW_JOBS")
        .output()
        .expect("agw runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_order_one() {
    let o = agw(&["enumerate", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let stream = parse_table_stream(&stdout(&o)).unwrap();
    assert_eq!(stream.tables, vec![CayleyTable::trivial()]);
    assert_eq!(stream.summary.unwrap().count_labeled, 1);
}

#[test]
fn enumerate_two_matches_naive_count() {
    let o = agw(&["enumerate", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let stream = parse_table_stream(&stdout(&o)).unwrap();
    let naive = enumerate_naive(&EnumSpec::new(2)).unwrap();
    assert_eq!(stream.summary.unwrap().count_labeled, naive.count_labeled);
    assert_eq!(stream.tables, naive.tables);
}

#[test]
fn enumerate_left_identity_up_to_iso_is_canonical() {
    let o = agw(&["enumerate", "3", "--left-identity", "--up-to-iso"]);
    assert_eq!(o.status.code(), Some(0));
    let stream = parse_table_stream(&stdout(&o)).unwrap();
    assert!(!stream.tables.is_empty());
    for t in &stream.tables {
        assert_eq!(&agw_core::canonical_form(t).unwrap(), t);
        assert!(!agw_core::left_identities(t).is_empty());
    }
    assert_eq!(stream.summary.unwrap().count_iso, Some(stream.tables.len() as u64));
}

#[test]
fn enumerate_over_bound_exits_two() {
    let o = agw(&["enumerate", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds bound 5"), "{}", stderr(&o));
    let o = agw(&["enumerate", "4", "--max-order", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_out_round_trips() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("three.txt");
    let o = agw(&["enumerate", "3", "--up-to-iso", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let stream = parse_table_stream(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for t in &stream.tables {
        assert_eq!(&parse_table(&t.to_string()).unwrap(), t);
    }
    let limited = agw(&["enumerate", "3", "--limit", "2"]);
    let stream = parse_table_stream(&stdout(&limited)).unwrap();
    assert_eq!(stream.tables.len(), 2);
    assert!(!stream.summary.unwrap().exhausted);
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.txt", Z3SUB);
    let lz = write(&dir, "lz.txt", LEFT_ZERO);
    let bad = write(&dir, "bad.txt", "2\n0 1\n1 x\n");

    let o = agw(&["check", s(&z3)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));

    let o = agw(&["check", s(&lz), "--identity", "left-invertive"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(0,0,1)"), "{}", stdout(&o));

    let o = agw(&["check", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 3"), "{}", stderr(&o));

    let o = agw(&["check", s(&z3), "--identity", "no-such-law"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_outputs() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.txt", Z3SUB);
    let run = |f: &str, g: &str| agw(&["product", s(&z3), f, g]);

    let o = run("k=1; 0 1 0", "k=1; 0 0 1");
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "k=1; 0 1 0"));
    let o = run("k=2; 1 2 0", "k=2; 0 0 0");
    assert_eq!(stdout(&o).trim(), "k=2; 0 0 0");
    let o = run("k=2; 2 2 2", "k=2; 2 2 2");
    assert_eq!(stdout(&o).trim(), "k=2; 2 2 2");

    assert_eq!(run("k=1; 0 1", "k=1; 0 0 1").status.code(), Some(2));
    assert_eq!(run("k=1; 0 1 0", "k=2; 0 0 1").status.code(), Some(2));
    assert_eq!(run("k=1; 0 3 0", "k=1; 0 0 1").status.code(), Some(2));
}

#[test]
fn gen_ideal_modes() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.txt", Z3SUB);
    let c2 = write(&dir, "c2.txt", CONSTANT);

    let o = agw(&["gen-ideal", s(&z3), "1", "2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "k=2; 2 2 2"));
    let o = agw(&["gen-ideal", s(&z3), "1", "1", "--k", "1"]);
    assert_eq!(stdout(&o).trim(), "k=1; 1 1 1");

    let o = agw(&["gen-ideal", s(&z3), "2", "1", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last() == Some("agree"), "{}", stdout(&o));

    let o = agw(&["gen-ideal", s(&c2), "1", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("left identity"), "{}", stderr(&o));

    let o = agw(&["gen-ideal", s(&c2), "1", "2", "--oracle"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "k=2; 2 2"));

    assert_eq!(agw(&["gen-ideal", s(&z3), "3", "1"]).status.code(), Some(2));
    assert_eq!(agw(&["gen-ideal", s(&z3), "0", "3"]).status.code(), Some(2));
}

#[test]
fn ideals_json() {
    let dir = TempDir::new().unwrap();
    let c2 = write(&dir, "c2.txt", CONSTANT);
    let o = agw(&["ideals", s(&c2), "--kind", "left"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["members"], serde_json::json!([[0], [0, 1]]));

    let o = agw(&["ideals", s(&c2), "--kind", "two-sided", "--fuzzy", "--k", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["members"], serde_json::json!(["k=1; 0 0", "k=1; 1 0", "k=1; 1 1"]));
}

#[test]
fn verify_reports_falsification_on_explicit_tables() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.txt", Z3SUB);
    let o = agw(&["verify", s(&z3), "--k", "1,2", "--ids", "P1,T3,T7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);

    let counter = write(&dir, "l6.txt", "4\n0 0 0 0\n0 0 0 2\n0 0 0 1\n0 1 2 3\n");
    let o = agw(&["verify", s(&counter), "--k", "1", "--ids", "L6"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["verdict"], "falsified");
}

#[test]
fn suite_single_statement_and_exit_codes() {
    let o = agw(&["suite", "--ids", "T7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["statement"], "T7");
    assert!(stderr(&o).contains("verified=1 falsified=0"));

    let o = agw(&["suite", "--orders", "4", "--k", "1", "--ids", "T4ii"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(agw(&["suite", "--ids", "T99"]).status.code(), Some(2));
    assert_eq!(agw(&["suite", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn suite_output_is_independent_of_jobs() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = [
        "suite",
        "--orders",
        "2,3",
        "--k",
        "2",
        "--ids",
        "C1,T1b,P3",
        "--samples",
        "200",
    ];
    let one = agw(&[&args[..], &["--jobs", "1", "--out", s(&a)]].concat());
    let four = agw(&[&args[..], &["--jobs", "4", "--out", s(&b)]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
