use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lie-cideal"));
    c.env_remove("LIE_CIDEAL_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(dir: &Path, name: &str, field: &str) -> String {
    let o = run(&["catalog", "emit", name, "--field", field]);
    assert!(o.status.success());
    let path = dir.join(format!("{}-{field}.json", name.replace(['(', ')', '+'], "_")));
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn emit_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "heisenberg(3)", "gf2");
    let o = run(&["validate", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok"));
}

#[test]
fn param_matches_inline_parameter() {
    let a = run(&["catalog", "emit", "abelian", "--param", "3"]);
    let b = run(&["catalog", "emit", "abelian(3)"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn jacobi_violation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"field": {"type": "Q"}, "dim": 3, "names": ["a", "b", "c"], "brackets": [
            {"i": 0, "j": 1, "coeffs": ["1", "0", "0"]},
            {"i": 1, "j": 2, "coeffs": ["0", "1", "0"]},
            {"i": 0, "j": 2, "coeffs": ["0", "0", "1"]}]}"#,
    )
    .unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(run(&["validate", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "emit", "nosuch"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "sl2", "gf5");
    let o = run(&["--budget", "3", "enumerate", &f, "--what", "ideals"]);
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .args(["enumerate", &f, "--what", "ideals"])
        .env("LIE_CIDEAL_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn borel_of_sl2_is_not_a_cideal() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "sl2", "gf5");
    let o = run(&["cideal", &f, "--sub", "1 0 0; 0 0 1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["answer"], "No");
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn heisenberg_profile_and_classifier() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "heisenberg(3)", "gf2");
    let o = run(&["analyze", &f, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lower_central_dims"], serde_json::json!([3, 1, 0]));
    assert_eq!(v["frattini_ideal"], serde_json::json!([["0", "0", "1"]]));
    let o = run(&["classify", &f, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "CaseI_Lcubed_zero");
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "heisenberg(3)", "gf2");
    let o = run(&["enumerate", &f, "--what", "maximal"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = run(&["enumerate", &f, "--what", "lines"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().all(|l| l.ends_with("Yes")));
    let o = run(&["enumerate", &f, "--what", "subspaces"]);
    assert_eq!(stdout(&o).lines().count(), 16);
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "nonabelian2+abelian(1)", "gf3");
    let strip = |o: Output| -> Vec<serde_json::Value> {
        let mut v: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
        for r in &mut v {
            r.as_object_mut().unwrap().remove("timing");
        }
        v
    };
    let a = run(&["verify", &f, "--suite", "all", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["verify", &f, "--suite", "all", "--json"]);
    let (a, b) = (strip(a), strip(b));
    assert_eq!(a, b);
    assert_eq!(a.len(), 11);
    assert!(a.iter().all(|r| r["status"] != "fail"));
}

#[test]
fn verify_over_rationals_skips_enumeration_suites() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "heisenberg(3)", "q");
    let o = run(&["verify", &f, "--suite", "T1,T8", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert_eq!(v[1]["status"], "pass");
}

#[test]
fn fuzz_runs_clean() {
    let o = run(&["fuzz", "--seed", "1", "--count", "30", "--field", "gf2", "--ambient", "3", "--suite", "T1,T7,T8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fail=0"));
    let o = run(&["fuzz", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("algebras=0"));
}

#[test]
fn catalog_list_names_every_entry() {
    let out = stdout(&run(&["catalog", "list"]));
    assert!(out.contains("heisenberg(3)+abelian(1)"));
    assert!(out.contains("sl2"));
}
