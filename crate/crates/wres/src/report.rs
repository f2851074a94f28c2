//! JSON, DOT and plain-text renderings of a resolution tree.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use wres_core::driver::{Node, ResolutionTree};
use wres_core::invariants::Center;
use wres_core::Rat;

use crate::problem_file::ProblemFile;

pub const SCHEMA: &str = "wres-tree/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub input: ProblemFile,
    pub mode: String,
    pub outcome: String,
    pub codimension: usize,
    pub blowups: usize,
    pub nodes: Vec<NodeReport>,
    pub atlas: Vec<AtlasEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartReport {
    pub name: String,
    pub vars: Vec<String>,
    pub divisor_vars: Vec<String>,
    pub parent: Option<String>,
    /// Parent variable and its image in this chart.
    pub substitution: Vec<(String, String)>,
    pub exceptional: Option<String>,
    pub cyclic_weight: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameter {
    pub function: String,
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialReport {
    pub ideal: Vec<String>,
    pub d: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterReport {
    pub description: String,
    pub parameters: Vec<Parameter>,
    pub monomial_part: Option<MonomialReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlowupReport {
    pub ell: u64,
    pub weights: Vec<u64>,
    /// Center parameters as variables of the straightened frame.
    pub frame_vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndpointReport {
    pub jacobian_rank: usize,
    pub codimension: usize,
    pub smooth: bool,
    pub failed_subsets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeReport {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub chart: ChartReport,
    pub ideal: Vec<String>,
    pub witnessed_at: Option<Vec<String>>,
    pub local_divisor: Option<Vec<String>>,
    pub invariant: Option<String>,
    pub center: Option<CenterReport>,
    pub blowup: Option<BlowupReport>,
    pub giraud: Option<bool>,
    pub factorization: Option<bool>,
    pub endpoint: Option<EndpointReport>,
    pub status: String,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub chart: String,
    pub parent: String,
    pub substitution: Vec<(String, String)>,
    pub exceptional: String,
    pub cyclic_weight: u64,
    pub ell: u64,
}

fn point(p: &[Rat]) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

fn names(ring_names: &[String], mask: &[bool]) -> Vec<String> {
    ring_names.iter().zip(mask).filter(|(_, d)| **d).map(|(n, _)| n.clone()).collect()
}

fn center_report(c: &Center) -> CenterReport {
    CenterReport {
        description: c.describe(),
        parameters: c.parameters.iter().map(|(f, e)| Parameter { function: f.to_string(), exponent: e.to_string() }).collect(),
        monomial_part: c.monomial_part.as_ref().map(|m| MonomialReport {
            ideal: m.ideal.generators().iter().map(|g| g.to_string()).collect(),
            d: m.d.to_string(),
        }),
    }
}

fn chart_report(n: &Node, tree: &ResolutionTree) -> ChartReport {
    let c = &n.chart;
    let parent_names: Option<&[String]> = n.parent.map(|p| tree.nodes[p].chart.ring.names());
    let substitution = match (&c.parent, parent_names) {
        (Some(link), Some(pn)) => pn.iter().cloned().zip(link.map.iter().map(|f| f.to_string())).collect(),
        _ => Vec::new(),
    };
    ChartReport {
        name: c.name.clone(),
        vars: c.ring.names().to_vec(),
        divisor_vars: c.divisor_names(),
        parent: c.parent.as_ref().map(|l| l.parent.clone()),
        substitution,
        exceptional: c.parent.as_ref().map(|l| l.exceptional.clone()),
        cyclic_weight: c.parent.as_ref().map(|l| l.cyclic_weight),
    }
}

fn node_report(n: &Node, tree: &ResolutionTree) -> NodeReport {
    let rn = n.chart.ring.names();
    NodeReport {
        id: n.id,
        parent: n.parent,
        depth: n.depth,
        chart: chart_report(n, tree),
        ideal: n.ideal.generators().iter().map(|g| g.to_string()).collect(),
        witnessed_at: n.witness.as_deref().map(point),
        local_divisor: n.local_divisor.as_deref().map(|m| names(rn, m)),
        invariant: n.invariant.as_ref().map(|v| v.to_string()),
        center: n.center.as_ref().map(center_report),
        blowup: n.blowup.as_ref().map(|b| BlowupReport {
            ell: b.ell,
            weights: b.weights.clone(),
            frame_vars: b.vars.iter().map(|&v| rn[v].clone()).collect(),
        }),
        giraud: n.giraud,
        factorization: n.factorization,
        endpoint: n.endpoint.as_ref().map(|e| EndpointReport {
            jacobian_rank: e.jacobian_rank,
            codimension: e.codimension,
            smooth: e.smooth,
            failed_subsets: e.failed_subsets.iter().map(|s| s.iter().map(|&v| rn[v].clone()).collect()).collect(),
        }),
        status: n.status.as_str().to_string(),
        children: n.children.clone(),
    }
}

pub fn outcome(tree: &ResolutionTree) -> &'static str {
    tree.failure().map_or("complete", |s| s.as_str())
}

pub fn build(tree: &ResolutionTree, input: &ProblemFile) -> Report {
    let nodes: Vec<NodeReport> = tree.nodes.iter().map(|n| node_report(n, tree)).collect();
    let atlas = nodes
        .iter()
        .filter_map(|n| {
            let p = n.parent?;
            Some(AtlasEntry {
                chart: n.chart.name.clone(),
                parent: nodes[p].chart.name.clone(),
                substitution: n.chart.substitution.clone(),
                exceptional: n.chart.exceptional.clone()?,
                cyclic_weight: n.chart.cyclic_weight?,
                ell: nodes[p].blowup.as_ref()?.ell,
            })
        })
        .collect();
    Report {
        schema: SCHEMA.to_string(),
        input: input.clone(),
        mode: tree.mode.as_str().to_string(),
        outcome: outcome(tree).to_string(),
        codimension: tree.codimension,
        blowups: tree.blowups,
        nodes,
        atlas,
    }
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(report: &Report) -> String {
    let mut s = String::from("digraph wres {\n  node [shape=box, fontname=\"monospace\"];\n");
    for n in &report.nodes {
        let mut parts = vec![n.chart.name.clone()];
        parts.extend(n.invariant.clone());
        if let (Some(c), Some(_)) = (&n.center, &n.blowup) {
            parts.push(format!("center {}", c.description));
        }
        parts.push(n.status.clone());
        let label: Vec<String> = parts.iter().map(|p| escape(p)).collect();
        let _ = writeln!(s, "  n{} [label=\"{}\"];", n.id, label.join("\\n"));
    }
    for n in &report.nodes {
        if let (Some(p), Some(e), Some(w)) = (n.parent, &n.chart.exceptional, n.chart.cyclic_weight) {
            let _ = writeln!(s, "  n{p} -> n{} [label=\"{} w={w}\"];", n.id, escape(e));
        }
    }
    s.push_str("}\n");
    s
}

/// One line per node, in breadth-first order.
pub fn to_text(report: &Report) -> String {
    let mut s = String::new();
    for n in &report.nodes {
        let _ = write!(s, "[{}] {} ({})", n.id, n.chart.name, n.ideal.join(", "));
        if let Some(p) = &n.witnessed_at {
            let _ = write!(s, " witnessed at ({})", p.join(", "));
        }
        if let Some(inv) = &n.invariant {
            let _ = write!(s, ": loginv* {inv}");
        }
        if let (Some(c), Some(b)) = (&n.center, &n.blowup) {
            let w: Vec<String> = b.weights.iter().map(|w| w.to_string()).collect();
            let _ = write!(s, ", center {}, l={} w=({}), {} charts", c.description, b.ell, w.join(", "), n.children.len());
        }
        let _ = writeln!(s, " -> {}", n.status);
    }
    let _ = writeln!(s, "{} blow-ups, {}", report.blowups, report.outcome);
    s
}
