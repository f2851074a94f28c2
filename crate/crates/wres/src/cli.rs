//! Command-line entry point.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::Parser;
use wres_core::driver::{run, Status};

use crate::problem_file::{parse_point, ProblemFile};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "wres", version, about = "Weighted blow-up principalization and resolution on affine log charts")]
pub struct Args {
    /// Problem file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Overrides the file's mode.
    #[arg(long, value_parser = ["principalize", "resolve"])]
    pub mode: Option<String>,
    /// Blow-up budget.
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Write the step log here instead of stdout.
    #[arg(long)]
    pub log: Option<PathBuf>,
    #[arg(long, default_value = "warn")]
    pub log_level: log::LevelFilter,
    /// Witness hint `chart=c1:c2:…`; may repeat.
    #[arg(long = "point")]
    pub points: Vec<String>,
    /// Run the built-in property suites and exit.
    #[arg(long)]
    pub selftest: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_NO_WITNESS: i32 = 3;

pub fn exit_code(failure: Option<Status>) -> i32 {
    match failure {
        None => EXIT_OK,
        Some(Status::Budget) => EXIT_BUDGET,
        Some(Status::NoRationalWitness) => EXIT_NO_WITNESS,
        Some(_) => EXIT_ERROR,
    }
}

/// The problem file with command-line overrides applied.
pub fn effective_input(args: &Args) -> anyhow::Result<ProblemFile> {
    let Some(path) = &args.input else { bail!("no --input given") };
    let mut f = ProblemFile::read(path)?;
    if let Some(m) = &args.mode {
        f.mode = m.clone();
    }
    if let Some(n) = args.max_steps {
        f.step_budget = n;
    }
    for p in &args.points {
        parse_point(p).map_err(anyhow::Error::msg)?;
        f.points.push(p.clone());
    }
    let path_str = |p: &Option<PathBuf>| p.as_ref().map(|p| p.display().to_string());
    f.json = path_str(&args.json).or(f.json);
    f.dot = path_str(&args.dot).or(f.dot);
    f.log = path_str(&args.log).or(f.log);
    Ok(f)
}

fn write(path: &str, text: &str) -> anyhow::Result<()> {
    std::fs::write(Path::new(path), text).with_context(|| format!("cannot write {path}"))
}

fn resolve(args: &Args) -> anyhow::Result<i32> {
    let input = effective_input(args)?;
    let problem = input.to_problem()?;
    let tree = run(&problem)?;
    let rep = report::build(&tree, &input);
    if let Some(p) = &input.json {
        write(p, &report::to_json(&rep))?;
    }
    if let Some(p) = &input.dot {
        write(p, &report::to_dot(&rep))?;
    }
    let text = report::to_text(&rep);
    match &input.log {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(exit_code(tree.failure()))
}

pub fn selftest() -> i32 {
    let mut failed = 0;
    for o in crate::selftest::run_all(0) {
        match o.result {
            Ok(()) => println!("PASS {}", o.name),
            Err(e) => {
                failed += 1;
                println!("FAIL {}: {e}", o.name);
            }
        }
    }
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_ERROR
    }
}

pub fn main_with(args: &Args) -> i32 {
    if args.selftest {
        return selftest();
    }
    match resolve(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}
