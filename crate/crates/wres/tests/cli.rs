use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use wres::problem_file::ProblemFile;
use wres::report::Report;

fn wres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wres")).args(args).output().unwrap()
}

fn problem(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

#[test]
fn cusp_resolves_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = problem(dir.path(), "cusp.toml", "vars = x, y\nideal = x^2 - y^3\n");
    let json = dir.path().join("out.json");
    let dot = dir.path().join("out.dot");
    let out = wres(&[
        "--input",
        input.to_str().unwrap(),
        "--mode",
        "resolve",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("loginv* (2, 3), center (x^2, y^3), l=6 w=(3, 2)"), "{stdout}");
    let rep: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(rep.outcome, "complete");
    assert_eq!(rep.mode, "resolve");
    assert_eq!(rep.nodes[0].invariant.as_deref(), Some("(2, 3)"));
    assert!(rep.nodes.iter().filter(|n| n.children.is_empty()).all(|n| n.status == "resolved"));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
}

#[test]
fn input_echo_matches_effective_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = problem(dir.path(), "p.wres", "vars = x, y\ndivisor = y\nideal = x^2 - y^3\nstep_budget = 5\n");
    let json = dir.path().join("p.json");
    let log = dir.path().join("p.log");
    let out = wres(&[
        "--input",
        input.to_str().unwrap(),
        "--max-steps",
        "7",
        "--point",
        "root=0:0",
        "--json",
        json.to_str().unwrap(),
        "--log",
        log.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&log).unwrap().ends_with("complete\n"));
    let rep: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let mut want = ProblemFile::parse(&std::fs::read_to_string(&input).unwrap()).unwrap();
    want.step_budget = 7;
    want.points.push("root=0:0".into());
    want.json = Some(json.display().to_string());
    want.log = Some(log.display().to_string());
    assert_eq!(rep.input, want);
    assert_eq!(ProblemFile::parse(&rep.input.render()).unwrap(), rep.input);
}

#[test]
fn budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let input = problem(dir.path(), "a4.wres", "vars = x, y\nideal = x^2 - y^5\n");
    let out = wres(&["--input", input.to_str().unwrap(), "--max-steps", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("budget\n"));
}

#[test]
fn no_rational_witness_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let input = problem(dir.path(), "conic.wres", "vars = x\nideal = x^2 + 1\n");
    let out = wres(&["--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn errors_exit_one() {
    let out = wres(&["--input", "/nonexistent/p.wres"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error: cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let bad = problem(dir.path(), "bad.wres", "vars = x\nideal = x\nspeed = 3\n");
    let out = wres(&["--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3: unknown key `speed`"));

    assert_eq!(wres(&[]).status.code(), Some(1));
    assert_ne!(wres(&["--mode", "fast"]).status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let out = wres(&["--selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(!String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}

#[test]
fn sample_problems_complete() {
    for entry in std::fs::read_dir(problems_dir()).unwrap() {
        let path = entry.unwrap().path();
        let out = wres(&["--input", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", path.display());
    }
}
