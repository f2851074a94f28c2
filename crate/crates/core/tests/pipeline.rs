use wres_core::chart::LogChart;
use wres_core::driver::{run, Mode, Problem, Status};
use wres_core::invariants::{inv_at, loginv_star_at};
use wres_core::{parse_poly, Ideal};

fn problem(mode: Mode, vars: &[&str], divisor: &[&str], gens: &[&str]) -> Problem {
    let chart = LogChart::new("root", vars, divisor).unwrap();
    let ideal = Ideal::new(&chart.ring, gens.iter().map(|g| parse_poly(g, &chart.ring).unwrap()).collect());
    Problem::new(mode, chart, ideal)
}

#[test]
fn cusp_one_blowup_resolves() {
    let t = run(&problem(Mode::Resolve, &["x", "y"], &[], &["x^2 - y^3"])).unwrap();
    assert_eq!(t.failure(), None);
    assert_eq!(t.blowups, 1);
    assert_eq!(t.root().invariant.as_ref().unwrap().to_string(), "(2, 3)");
    assert!(t.leaves().all(|n| n.status == Status::Resolved));
}

#[test]
fn invariants_from_the_public_api() {
    let p = problem(Mode::Principalize, &["x", "y"], &["y"], &["x^2 - y^3"]);
    assert_eq!(loginv_star_at(&p.ideal, &p.chart).unwrap().vector.to_string(), "(2, w+3)");
    assert_eq!(inv_at(&p.ideal, &p.chart).unwrap().vector.to_string(), "(2, 3)");
}

#[test]
fn budget_is_a_status_not_an_error() {
    let mut p = problem(Mode::Principalize, &["x", "y"], &[], &["x^2 - y^5"]);
    p.step_budget = 1;
    assert_eq!(run(&p).unwrap().failure(), Some(Status::Budget));
}
