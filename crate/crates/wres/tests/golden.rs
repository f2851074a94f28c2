//! Byte-for-byte report snapshots. Set `WRES_BLESS=1` to rewrite them.

use std::path::PathBuf;

use wres::corpus;
use wres::report::{self, Report};
use wres_core::driver::run;

fn report_for(name: &str, mode: &str) -> Report {
    let input = corpus::get(name).unwrap().file(mode);
    let tree = run(&input.to_problem().unwrap()).unwrap();
    report::build(&tree, &input)
}

fn check(file: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file);
    if std::env::var_os("WRES_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{file} differs from the snapshot");
}

#[test]
fn cusp_resolve_json() {
    check("cusp_resolve.json", &report::to_json(&report_for("cusp", "resolve")));
}

#[test]
fn cusp_resolve_dot() {
    check("cusp_resolve.dot", &report::to_dot(&report_for("cusp", "resolve")));
}

#[test]
fn umbrella_text() {
    check("umbrella_resolve.txt", &report::to_text(&report_for("umbrella", "resolve")));
}

#[test]
fn log_cusp_text() {
    check("log_cusp_principalize.txt", &report::to_text(&report_for("log-cusp", "principalize")));
}

#[test]
fn reports_are_deterministic() {
    for e in corpus::CORPUS {
        for mode in ["principalize", "resolve"] {
            let a = report::to_json(&report_for(e.name, mode));
            let b = report::to_json(&report_for(e.name, mode));
            assert_eq!(a, b, "{} {mode}", e.name);
        }
    }
}

#[test]
fn json_round_trips() {
    let r = report_for("umbrella", "resolve");
    let back: Report = serde_json::from_str(&report::to_json(&r)).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.schema, report::SCHEMA);
}
