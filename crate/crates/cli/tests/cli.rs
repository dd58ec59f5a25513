use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::io::Write;

use semigrowth_cli::instance::Instance;
use semigrowth_cli::report::{AnalysisReport, Degree, SequenceReport};

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semigrowth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze(name: &str, extra: &[&str]) -> (i32, AnalysisReport) {
    let path = instance(name);
    let mut args = vec!["analyze", path.as_str(), "--reproducible"];
    args.extend_from_slice(extra);
    let o = run(&args);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn analyze_examples() {
    let (code, r) = analyze("unipotent.json", &[]);
    assert_eq!(code, 0);
    assert_eq!((r.verdict.as_str(), r.degree), ("Polynomial", Some(Degree::Finite(1))));
    assert_eq!(r.certificates.filtration.unwrap().dims, vec![2, 1, 0]);
    assert!(r.timestamp.is_none());

    let (_, r) = analyze("scalar-two.json", &[]);
    assert_eq!(r.verdict, "Exponential");
    assert_eq!(r.certificates.witness.unwrap().word, "1");

    let (_, r) = analyze("nilpotent.json", &[]);
    assert_eq!(r.verdict, "Degenerate");
}

#[test]
fn reports_round_trip() {
    for name in ["unipotent.json", "heisenberg.json", "fibonacci.json", "nilpotent.json"] {
        let (_, r) = analyze(name, &["--max-n", "10"]);
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn timestamp_present_by_default() {
    let o = run(&["analyze", &instance("swap.json")]);
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.timestamp.is_some());
}

#[test]
fn mn_tables() {
    let o = run(&["mn", &instance("unipotent.json"), "--max-n", "5"]);
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(stdout(&o).lines().next(), Some("n,m_n,frontier,truncated"));
    let pairs: Vec<(String, String)> = rows.iter().map(|r| (r[0].clone(), r[1].clone())).collect();
    let expected: Vec<(String, String)> = (0..=5).map(|n| (n.to_string(), (n + 1).to_string())).collect();
    assert_eq!(pairs, expected);

    let o = run(&["mn", &instance("scalar-two.json"), "--max-n", "3"]);
    let vals: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(vals, ["1", "2", "4", "8"]);

    let o = run(&["mn", &instance("heisenberg.json"), "--max-n", "8"]);
    assert!(stdout(&o).lines().last().unwrap().starts_with("8,21,"));
}

#[test]
fn mn_truncation_comment_and_submultiplicativity() {
    let o = run(&["mn", &instance("heisenberg.json"), "--max-n", "12", "--frontier-budget", "20"]);
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with('#'));
    let vals: Vec<i64> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#') && l.ends_with("false"))
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    for i in 0..vals.len() {
        for j in 0..vals.len() - i {
            assert!(vals[i + j] <= vals[i] * vals[j]);
        }
    }
}

#[test]
fn regseq_commands() {
    let o = run(&["regseq", "eval", &instance("s2.json"), "11", "--digits"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["regseq", "eval", &instance("thue-morse.dfao.json"), "112"]);
    assert_eq!(stdout(&o).trim(), "1");

    let dir = tempfile::tempdir().unwrap();
    let conv = dir.path().join("conv.json");
    let o = run(&["regseq", "conv", &instance("one.json"), &instance("one.json"), "--out", conv.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["regseq", "eval", conv.to_str().unwrap(), "1111"]);
    assert_eq!(stdout(&o).trim(), "5");

    let o = run(&["regseq", "add", &instance("s2.json"), &instance("s2.json"), "--scale", "-1/2"]);
    let inst = Instance::parse(&stdout(&o)).unwrap();
    assert_eq!(inst.kind(), "linrep");

    let o = run(&["regseq", "minimize", &instance("thue-morse.dfao.json")]);
    assert!(o.status.success());
    assert!(Instance::parse(&stdout(&o)).unwrap().to_linrep().is_ok());

    let o = run(&["regseq", "growth", &instance("thue-morse.dfao.json"), "--reproducible"]);
    let r: SequenceReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.verdict.as_str(), r.degree, r.in_r0.as_str()), ("FiniteDegree", Some(Degree::Finite(0)), "yes"));
}

#[test]
fn import_dfao() {
    let o = run(&["import-dfao", &instance("thue-morse.dfao.json")]);
    let rep = Instance::parse(&stdout(&o)).unwrap().to_linrep().unwrap();
    assert_eq!(rep.dim(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"matrix_set\",\n  \"dim\": 2\n  \"matrices\": []\n}").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let three = dir.path().join("three.json");
    std::fs::write(&three, r#"{"kind": "linrep", "alphabet": 3, "dim": 1, "row": [1], "matrices": [[[1]], [[1]], [[1]]], "col": [1]}"#).unwrap();
    let o = run(&["regseq", "add", &instance("one.json"), three.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains('2') && err.contains('3'), "{err}");

    let o = run(&["analyze", &instance("swap.json"), "--closure-cap", "1"]);
    assert_eq!(o.status.code(), Some(4));

    let o = run(&["analyze", &instance("s2.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semigrowth"))
        .args(["analyze", "-", "--reproducible"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(std::fs::read(instance("swap.json")).unwrap().as_slice())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.degree, Some(Degree::Finite(0)));
}
