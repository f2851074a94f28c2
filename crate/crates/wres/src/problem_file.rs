//! The key-value problem file.
//!
//! ```text
//! file    := line*
//! line    := blank | comment | key '=' value
//! comment := '#' anything
//! key     := vars | divisor | ideal | mode | step_budget | jet_bound
//!          | point | json | dot | log
//! ```
//!
//! `vars` and `divisor` take comma-separated names. `ideal` takes one or
//! more comma-separated polynomials and may repeat. `point` takes
//! `chart=c1:c2:…` and may repeat. Every other key appears at most once.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use wres_core::chart::LogChart;
use wres_core::driver::{Mode, Problem, DEFAULT_STEP_BUDGET};
use wres_core::{parse_poly, Ideal, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub divisor: Vec<String>,
    pub ideal: Vec<String>,
    pub mode: String,
    pub step_budget: usize,
    pub jet_bound: Option<u64>,
    /// `chart=c1:c2:…`
    pub points: Vec<String>,
    pub json: Option<String>,
    pub dot: Option<String>,
    pub log: Option<String>,
}

impl Default for ProblemFile {
    fn default() -> Self {
        ProblemFile {
            vars: Vec::new(),
            divisor: Vec::new(),
            ideal: Vec::new(),
            mode: Mode::Principalize.as_str().to_string(),
            step_budget: DEFAULT_STEP_BUDGET,
            jet_bound: None,
            points: Vec::new(),
            json: None,
            dot: None,
            log: None,
        }
    }
}

const KEYS: [&str; 10] = ["vars", "divisor", "ideal", "mode", "step_budget", "jet_bound", "point", "json", "dot", "log"];

fn list(v: &str) -> Vec<String> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

/// Parse `chart=c1:c2:…`.
pub fn parse_point(s: &str) -> Result<(String, Vec<Rat>), String> {
    let (chart, coords) = s.split_once('=').ok_or_else(|| format!("point `{s}` is not chart=c1:c2:…"))?;
    let chart = chart.trim();
    if chart.is_empty() {
        return Err(format!("point `{s}` has no chart name"));
    }
    let mut out = Vec::new();
    for c in coords.split(':') {
        out.push(parse_rat(c.trim()).ok_or_else(|| format!("bad coordinate `{c}` in `{s}`"))?);
    }
    Ok((chart.to_string(), out))
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    s.parse().ok()
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self, FileError> {
        let mut f = ProblemFile::default();
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let text = raw.split('#').next().unwrap().trim();
            if text.is_empty() {
                continue;
            }
            let err = |message: String| FileError::Syntax { line, message };
            let (key, value) = text.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
            let key = key.trim();
            let value = value.trim();
            let repeatable = matches!(key, "ideal" | "point");
            let key_static = *KEYS.iter().find(|k| **k == key).ok_or_else(|| err(format!("unknown key `{key}`")))?;
            if !repeatable {
                if let Some(prev) = seen.insert(key_static, line) {
                    return Err(err(format!("`{key}` already set on line {prev}")));
                }
            }
            match key_static {
                "vars" => f.vars = list(value),
                "divisor" => f.divisor = list(value),
                "ideal" => f.ideal.extend(list(value)),
                "mode" => {
                    Mode::parse(value).ok_or_else(|| err(format!("unknown mode `{value}`")))?;
                    f.mode = value.to_string();
                }
                "step_budget" => f.step_budget = value.parse().map_err(|_| err(format!("bad step budget `{value}`")))?,
                "jet_bound" => f.jet_bound = Some(value.parse().map_err(|_| err(format!("bad jet bound `{value}`")))?),
                "point" => {
                    parse_point(value).map_err(err)?;
                    f.points.push(value.to_string());
                }
                "json" => f.json = Some(value.to_string()),
                "dot" => f.dot = Some(value.to_string()),
                _ => f.log = Some(value.to_string()),
            }
        }
        if f.vars.is_empty() {
            return Err(FileError::Missing("vars"));
        }
        if f.ideal.is_empty() {
            return Err(FileError::Missing("ideal"));
        }
        Ok(f)
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let src = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
        Ok(ProblemFile::parse(&src)?)
    }

    /// Canonical text; `parse(render())` returns `self`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("vars = {}\n", self.vars.join(", ")));
        if !self.divisor.is_empty() {
            s.push_str(&format!("divisor = {}\n", self.divisor.join(", ")));
        }
        for g in &self.ideal {
            s.push_str(&format!("ideal = {g}\n"));
        }
        s.push_str(&format!("mode = {}\n", self.mode));
        s.push_str(&format!("step_budget = {}\n", self.step_budget));
        if let Some(j) = self.jet_bound {
            s.push_str(&format!("jet_bound = {j}\n"));
        }
        for p in &self.points {
            s.push_str(&format!("point = {p}\n"));
        }
        for (k, v) in [("json", &self.json), ("dot", &self.dot), ("log", &self.log)] {
            if let Some(v) = v {
                s.push_str(&format!("{k} = {v}\n"));
            }
        }
        s
    }

    pub fn mode(&self) -> Mode {
        Mode::parse(&self.mode).unwrap_or(Mode::Principalize)
    }

    pub fn to_problem(&self) -> Result<Problem, FileError> {
        let chart = LogChart::new("root", &self.vars, &self.divisor).map_err(|e| FileError::Invalid(format!("divisor: {e}")))?;
        let mut gens = Vec::new();
        for g in &self.ideal {
            gens.push(parse_poly(g, &chart.ring).map_err(|e| FileError::Invalid(format!("`{g}`: {e}")))?);
        }
        let ideal = Ideal::new(&chart.ring, gens);
        if ideal.is_zero() {
            return Err(FileError::Invalid("the ideal is zero".into()));
        }
        let mut chart = chart;
        chart.jet_bound = self.jet_bound;
        let mut p = Problem::new(self.mode(), chart, ideal);
        p.step_budget = self.step_budget;
        for s in &self.points {
            let (c, coords) = parse_point(s).map_err(FileError::Invalid)?;
            p.point_hints.entry(c).or_default().push(coords);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUSP: &str = "# cusp\nvars = x, y\nideal = x^2 - y^3\nmode = resolve\n";

    #[test]
    fn parses_and_renders() {
        let f = ProblemFile::parse(CUSP).unwrap();
        assert_eq!(f.vars, vec!["x", "y"]);
        assert_eq!(f.mode(), Mode::Resolve);
        assert_eq!(f.step_budget, 32);
        assert_eq!(ProblemFile::parse(&f.render()).unwrap(), f);
        let p = f.to_problem().unwrap();
        assert_eq!(p.ideal.generators()[0].to_string(), "-y^3 + x^2");
    }

    #[test]
    fn points_and_lists() {
        let f = ProblemFile::parse("vars = x,y\ndivisor = y\nideal = x, y^2\npoint = root=1:-1/2\npoint = root.x=0:1\n").unwrap();
        assert_eq!(f.ideal, vec!["x", "y^2"]);
        let p = f.to_problem().unwrap();
        assert_eq!(p.point_hints["root"], vec![vec![Rat::one(), Rat::new(-1, 2)]]);
        assert_eq!(p.point_hints["root.x"].len(), 1);
        assert_eq!(ProblemFile::parse(&f.render()).unwrap(), f);
    }

    #[test]
    fn errors() {
        let e = |s: &str| ProblemFile::parse(s).unwrap_err();
        assert_eq!(e("vars = x\nfoo = 1\n"), FileError::Syntax { line: 2, message: "unknown key `foo`".into() });
        assert!(matches!(e("vars = x\nmode = fast\nideal = x\n"), FileError::Syntax { line: 2, .. }));
        assert!(matches!(e("vars = x\nvars = y\n"), FileError::Syntax { line: 2, .. }));
        assert_eq!(e("ideal = x\n"), FileError::Missing("vars"));
        assert!(matches!(e("vars = x\nideal = x\npoint = 1:2\n"), FileError::Syntax { line: 3, .. }));
        let f = ProblemFile::parse("vars = x\ndivisor = z\nideal = x\n").unwrap();
        assert!(matches!(f.to_problem(), Err(FileError::Invalid(_))));
        let f = ProblemFile::parse("vars = x\nideal = x**2\n").unwrap();
        assert!(f.to_problem().is_err());
    }
}
