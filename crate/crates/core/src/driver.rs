//! The blow-up loop: locate a witness, compute `loginv*` and its center,
//! blow up, transform, and recurse over the charts.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::blowup::{blowup_charts, giraud_holds, weak_transform, BlowupData};
use crate::chart::{ChartParent, LogChart};
use crate::derivations::{derivative_step, order_at, DerivationKind, Order};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::{compare, loginv_star_at_with, Center, InvOptions, Invariant, InvariantVector};
use crate::linalg;
use crate::poly::{Monomial, Polynomial};
use crate::rat::Rat;

pub const DEFAULT_STEP_BUDGET: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Principalize,
    Resolve,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Principalize => "principalize",
            Mode::Resolve => "resolve",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "principalize" => Some(Mode::Principalize),
            "resolve" => Some(Mode::Resolve),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Blown up at the witness; the children carry on.
    Blown,
    Principalized,
    PrincipalMonomial,
    Resolved,
    /// The transform does not meet the fibre over the parent's witness.
    Empty,
    NoRationalWitness,
    Budget,
    TransformMismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Blown => "blown up",
            Status::Principalized => "principalized",
            Status::PrincipalMonomial => "principal monomial",
            Status::Resolved => "resolved",
            Status::Empty => "empty",
            Status::NoRationalWitness => "no rational witness",
            Status::Budget => "budget",
            Status::TransformMismatch => "transform mismatch",
        }
    }

    pub fn is_done(self) -> bool {
        matches!(self, Status::Principalized | Status::PrincipalMonomial | Status::Resolved | Status::Empty)
    }
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub mode: Mode,
    pub chart: LogChart,
    pub ideal: Ideal,
    pub step_budget: usize,
    /// Extra candidate witnesses, keyed by chart name.
    pub point_hints: BTreeMap<String, Vec<Vec<Rat>>>,
}

impl Problem {
    pub fn new(mode: Mode, chart: LogChart, ideal: Ideal) -> Self {
        Problem { mode, chart, ideal, step_budget: DEFAULT_STEP_BUDGET, point_hints: BTreeMap::new() }
    }
}

/// Smoothness and transversality at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointCheck {
    pub jacobian_rank: usize,
    pub codimension: usize,
    pub smooth: bool,
    /// Divisor subsets (as variable lists) whose intersection with the
    /// locus fails to be smooth of the expected codimension.
    pub failed_subsets: Vec<Vec<usize>>,
}

impl EndpointCheck {
    pub fn passes(&self) -> bool {
        self.smooth && self.failed_subsets.is_empty()
    }
}

fn jacobian_rows(gens: &[Polynomial], p: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    let n = p.len();
    gens.iter().map(|g| (0..n).map(|v| g.derivative(v).evaluate(p)).collect()).collect()
}

pub fn jacobian_rank(gens: &[Polynomial], p: &[Rat]) -> Result<usize> {
    Ok(linalg::rank(&jacobian_rows(gens, p)?))
}

/// Jacobian criterion for `I` and for `I + (x_S)` over every nonempty set
/// `S` of divisor variables through `p`.
pub fn endpoint_check(i: &Ideal, divisor: &[bool], p: &[Rat], codim: usize) -> Result<EndpointCheck> {
    let rows = jacobian_rows(i.generators(), p)?;
    let jr = linalg::rank(&rows);
    let through: Vec<usize> = (0..p.len()).filter(|&v| divisor[v] && p[v].is_zero()).collect();
    let mut failed = Vec::new();
    for mask in 1u64..(1u64 << through.len()) {
        let s: Vec<usize> = through.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v).collect();
        let mut m = rows.clone();
        for &v in &s {
            let mut e = vec![Rat::zero(); p.len()];
            e[v] = Rat::one();
            m.push(e);
        }
        if linalg::rank(&m) != codim + s.len() {
            failed.push(s);
        }
    }
    Ok(EndpointCheck { jacobian_rank: jr, codimension: codim, smooth: jr == codim, failed_subsets: failed })
}

/// Whether `I` is generated near `p` by one monomial in the divisor
/// variables through `p`.
pub fn is_principal_monomial_at(i: &Ideal, divisor: &[bool], p: &[Rat]) -> Result<bool> {
    let moved = i.translate(p)?;
    let mask: Vec<bool> = (0..p.len()).map(|v| divisor[v] && p[v].is_zero()).collect();
    let mut g: Option<Monomial> = None;
    for f in moved.generators() {
        for (m, _) in f.terms() {
            let d = Monomial(m.exps().iter().zip(&mask).map(|(e, k)| if *k { *e } else { 0 }).collect());
            g = Some(match g {
                None => d,
                Some(x) => x.gcd(&d),
            });
        }
    }
    let Some(g) = g else { return Ok(false) };
    if g.is_one() {
        return Ok(false);
    }
    Ok(moved.generators().iter().any(|f| f.div_monomial(&g).is_some_and(|q| !q.constant_term().is_zero())))
}

/// Terminal status at a witness, if any.
pub fn is_done(mode: Mode, i: &Ideal, divisor: &[bool], p: &[Rat], codim: usize) -> Result<Option<Status>> {
    if !i.vanishes_at(p)? {
        return Ok(Some(match mode {
            Mode::Principalize => Status::Principalized,
            Mode::Resolve => Status::Empty,
        }));
    }
    Ok(match mode {
        Mode::Principalize => is_principal_monomial_at(i, divisor, p)?.then_some(Status::PrincipalMonomial),
        Mode::Resolve => endpoint_check(i, divisor, p, codim)?.passes().then_some(Status::Resolved),
    })
}

fn linear_solution(s: &Ideal) -> Option<Vec<Rat>> {
    let n = s.ring().nvars();
    let lin: Vec<&Polynomial> = s.generators().iter().filter(|g| g.total_degree() <= 1).collect();
    if lin.is_empty() {
        return None;
    }
    let a: Vec<Vec<Rat>> = lin.iter().map(|g| (0..n).map(|v| g.linear_coefficient(v)).collect()).collect();
    let b: Vec<Rat> = lin.iter().map(|g| -g.constant_term()).collect();
    linalg::solve(&a, &b)
}

fn grid_values(free: usize) -> Vec<Rat> {
    let all = [Rat::zero(), Rat::one(), Rat::from_int(-1), Rat::from_int(2), Rat::from_int(-2), Rat::new(1, 2), Rat::new(-1, 2)];
    let k = match free {
        0..=3 => 7,
        4..=6 => 3,
        _ => 2,
    };
    all[..k].to_vec()
}

/// Rational points of `V(I)` on the fibre `x_v = 0 (v ∈ fibre)`, in the
/// order they were proposed: origin, hints, solutions of the linear parts
/// of the derivative chain (deepest first), then a small grid.
pub fn locate_candidates(chart: &LogChart, i: &Ideal, fibre: &[usize], hints: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = chart.nvars();
    let ring = &chart.ring;
    let mut proposed: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]];
    proposed.extend(hints.iter().filter(|h| h.len() == n).cloned());
    let fib = Ideal::of_vars(ring, fibre);
    let flags = vec![false; n];
    let mut cur = i.standard();
    let mut linear = Vec::new();
    for _ in 0..64 {
        let s = cur.sum(&fib)?.standard();
        if s.is_trivial() {
            break;
        }
        if let Some(p) = linear_solution(&s) {
            linear.push(p);
        }
        cur = derivative_step(&cur, &flags);
    }
    proposed.extend(linear.into_iter().rev());
    let free: Vec<usize> = (0..n).filter(|v| !fibre.contains(v)).collect();
    let vals = grid_values(free.len());
    let total = vals.len().pow(free.len() as u32);
    for mut idx in 0..total {
        let mut p = vec![Rat::zero(); n];
        for &v in &free {
            p[v] = vals[idx % vals.len()].clone();
            idx /= vals.len();
        }
        proposed.push(p);
    }
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for p in proposed {
        if out.contains(&p) || fibre.iter().any(|&v| !p[v].is_zero()) {
            continue;
        }
        if i.vanishes_at(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// A witness of maximal order among the candidates.
pub fn locate_point(chart: &LogChart, i: &Ideal, fibre: &[usize], hints: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>> {
    let cands = locate_candidates(chart, i, fibre, hints)?;
    let mut best: Option<(Order, Vec<Rat>)> = None;
    for p in cands {
        let o = order_at(i, &chart.with_base_point(p.clone()), DerivationKind::Plain)?;
        if best.as_ref().is_none_or(|(b, _)| o > *b) {
            best = Some((o, p));
        }
    }
    Ok(best.map(|b| b.1))
}

/// The chart seen from `p`: base point `p`, divisor components through `p`.
pub fn localize(chart: &LogChart, p: &[Rat]) -> LogChart {
    let mask: Vec<bool> = chart.divisor_mask().iter().zip(p).map(|(d, c)| *d && c.is_zero()).collect();
    chart.with_divisor(mask).with_base_point(p.to_vec())
}

/// One child chart of a blow-up.
#[derive(Clone, Debug)]
pub struct ChildTransform {
    /// Parent map composed back to the parent chart's own coordinates.
    pub chart: LogChart,
    pub weak: Ideal,
    pub total: Ideal,
    /// Variables vanishing on the fibre over the witness.
    pub fibre: Vec<usize>,
    pub giraud: bool,
    pub factorization: bool,
    /// Resolve mode: whether the weak transform equals the saturation.
    pub proper: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct StepOutcome {
    pub invariant: Invariant,
    pub blowup: BlowupData,
    pub children: Vec<ChildTransform>,
}

/// Blow up the `loginv*` center at `chart`'s base point, which must already
/// be localized (see [`localize`]).
pub fn step(chart: &LogChart, i: &Ideal, mode: Mode, exceptional: &str) -> Result<StepOutcome> {
    let opts = InvOptions { jet_bound: chart.jet_bound, ..InvOptions::default() };
    let invariant = loginv_star_at_with(i, chart, &opts)?;
    let center: &Center = &invariant.center;
    let bd = BlowupData::from_center(center)?;
    let mut frame_chart = LogChart::from_parts(&chart.name, chart.ring.clone(), chart.divisor_mask().to_vec());
    frame_chart.jet_bound = chart.jet_bound;
    let i_frame = center.frame.pull(i)?;
    let forward = &center.frame.change.forward;
    let mut children = Vec::new();
    for mut c in blowup_charts(&frame_chart, &bd, exceptional)? {
        let b = weak_transform(&i_frame, &c, bd.ell)?;
        let giraud = giraud_holds(&i_frame, &frame_chart, &bd, &c, &b.weak)?;
        let mut ue = Monomial::one(c.nvars());
        ue.0[b.exceptional_var] = bd.ell as u32;
        let factorization = b.total.equals(&b.weak.product(&Ideal::principal(Polynomial::term(&c.ring, ue, Rat::one())))?);
        let proper = match mode {
            Mode::Resolve => Some(b.total.saturate_var(b.exceptional_var).equals(&b.weak)),
            Mode::Principalize => None,
        };
        let link = c.parent.take().ok_or_else(|| Error::Internal("chart without parent map".into()))?;
        let mut map = Vec::with_capacity(forward.len());
        for (j, f) in forward.iter().enumerate() {
            let img = f.substitute(&link.map, &c.ring)?;
            map.push(img.add(&Polynomial::constant(&c.ring, chart.base_point[j].clone())));
        }
        c.parent = Some(ChartParent { map, ..link });
        c.jet_bound = chart.jet_bound;
        let fibre: Vec<usize> = (0..c.nvars()).filter(|v| *v == b.exceptional_var || !bd.vars.contains(v)).collect();
        children.push(ChildTransform { chart: c, weak: b.weak, total: b.total, fibre, giraud, factorization, proper });
    }
    Ok(StepOutcome { invariant: invariant.clone(), blowup: bd, children })
}

#[derive(Clone, Debug)]
pub struct Node {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub chart: LogChart,
    pub ideal: Ideal,
    pub fibre: Vec<usize>,
    pub witness: Option<Vec<Rat>>,
    /// Divisor after dropping components that miss the witness.
    pub local_divisor: Option<Vec<bool>>,
    pub invariant: Option<InvariantVector>,
    pub center: Option<Center>,
    pub blowup: Option<BlowupData>,
    /// Checks recorded when this chart was produced.
    pub giraud: Option<bool>,
    pub factorization: Option<bool>,
    pub endpoint: Option<EndpointCheck>,
    pub status: Status,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ResolutionTree {
    pub mode: Mode,
    pub codimension: usize,
    pub blowups: usize,
    pub nodes: Vec<Node>,
}

impl ResolutionTree {
    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    /// Witnessed invariants along each root-to-leaf path.
    pub fn paths(&self) -> Vec<Vec<InvariantVector>> {
        self.leaves()
            .map(|leaf| {
                let mut v = Vec::new();
                let mut cur = Some(leaf.id);
                while let Some(id) = cur {
                    if let Some(inv) = &self.nodes[id].invariant {
                        v.push(inv.clone());
                    }
                    cur = self.nodes[id].parent;
                }
                v.reverse();
                v
            })
            .collect()
    }

    /// The most severe unfinished status among the nodes; `None` when
    /// every leaf is done.
    pub fn failure(&self) -> Option<Status> {
        [Status::TransformMismatch, Status::Budget, Status::NoRationalWitness]
            .into_iter()
            .find(|s| self.nodes.iter().any(|n| n.status == *s))
    }
}

struct Runner<'a> {
    problem: &'a Problem,
    codim: usize,
    nodes: Vec<Node>,
    blowups: usize,
    queue: VecDeque<usize>,
}

impl Runner<'_> {
    fn hints(&self, chart: &str) -> &[Vec<Rat>] {
        self.problem.point_hints.get(chart).map_or(&[], |v| v.as_slice())
    }

    fn check_descent(&self, id: usize, inv: &InvariantVector) -> Result<()> {
        let Some(pid) = self.nodes[id].parent else { return Ok(()) };
        if let Some(pv) = &self.nodes[pid].invariant {
            if compare(inv, pv) != Ordering::Less {
                return Err(Error::DescentViolated {
                    node: self.nodes[id].chart.name.clone(),
                    parent: format!("{pv}"),
                    child: format!("{inv}"),
                });
            }
        }
        Ok(())
    }

    fn invariant_at(&self, chart: &LogChart, i: &Ideal, p: &[Rat]) -> Result<Invariant> {
        let local = localize(chart, p);
        let opts = InvOptions { jet_bound: chart.jet_bound, ..InvOptions::default() };
        loginv_star_at_with(i, &local, &opts)
    }

    fn process(&mut self, id: usize) -> Result<()> {
        let mode = self.problem.mode;
        let chart = self.nodes[id].chart.clone();
        let ideal = self.nodes[id].ideal.clone();
        let fibre = self.nodes[id].fibre.clone();
        let quiet = match mode {
            Mode::Principalize => Status::Principalized,
            Mode::Resolve => Status::Empty,
        };
        if ideal.is_trivial() || ideal.sum(&Ideal::of_vars(&chart.ring, &fibre))?.is_trivial() {
            self.nodes[id].status = quiet;
            return Ok(());
        }
        let cands = locate_candidates(&chart, &ideal, &fibre, self.hints(&chart.name))?;
        if cands.is_empty() {
            self.nodes[id].status = Status::NoRationalWitness;
            return Ok(());
        }
        let mut active = Vec::new();
        let mut first_done = None;
        for p in &cands {
            match is_done(mode, &ideal, chart.divisor_mask(), p, self.codim)? {
                None => active.push(p.clone()),
                Some(s) => {
                    if first_done.is_none() {
                        first_done = Some((s, p.clone()));
                    }
                }
            }
        }
        if active.is_empty() {
            let (s, p) = first_done.unwrap();
            let inv = self.invariant_at(&chart, &ideal, &p)?;
            self.check_descent(id, &inv.vector)?;
            let node = &mut self.nodes[id];
            if mode == Mode::Resolve {
                node.endpoint = Some(endpoint_check(&ideal, chart.divisor_mask(), &p, self.codim)?);
            }
            node.local_divisor = Some(localize(&chart, &p).divisor_mask().to_vec());
            node.witness = Some(p);
            node.invariant = Some(inv.vector);
            node.center = Some(inv.center);
            node.status = s;
            return Ok(());
        }
        let mut orders = Vec::with_capacity(active.len());
        for p in &active {
            orders.push(order_at(&ideal, &chart.with_base_point(p.clone()), DerivationKind::Plain)?);
        }
        let top = *orders.iter().max().unwrap();
        let mut best: Option<(Invariant, Vec<Rat>)> = None;
        for (p, _) in active.iter().zip(&orders).filter(|(_, o)| **o == top).take(6) {
            let inv = self.invariant_at(&chart, &ideal, p)?;
            if best.as_ref().is_none_or(|(b, _)| compare(&inv.vector, &b.vector) == Ordering::Greater) {
                best = Some((inv, p.clone()));
            }
        }
        let (inv, p) = best.unwrap();
        self.check_descent(id, &inv.vector)?;
        let local = localize(&chart, &p);
        {
            let node = &mut self.nodes[id];
            node.local_divisor = Some(local.divisor_mask().to_vec());
            node.witness = Some(p.clone());
            node.invariant = Some(inv.vector.clone());
            node.center = Some(inv.center.clone());
        }
        if self.blowups >= self.problem.step_budget {
            self.nodes[id].status = Status::Budget;
            return Ok(());
        }
        self.blowups += 1;
        let name = format!("e{}", self.blowups);
        let out = step(&local, &ideal, mode, &name)?;
        log::debug!("{}: {} at {:?}, center {}", chart.name, out.invariant.vector, p, out.invariant.center);
        self.nodes[id].blowup = Some(out.blowup.clone());
        self.nodes[id].status = Status::Blown;
        let depth = self.nodes[id].depth + 1;
        for c in out.children {
            let cid = self.nodes.len();
            let status = if c.proper == Some(false) {
                log::warn!("{}: weak transform differs from the proper transform", c.chart.name);
                Status::TransformMismatch
            } else {
                self.queue.push_back(cid);
                Status::Blown
            };
            self.nodes.push(Node {
                id: cid,
                parent: Some(id),
                depth,
                chart: c.chart,
                ideal: c.weak,
                fibre: c.fibre,
                witness: None,
                local_divisor: None,
                invariant: None,
                center: None,
                blowup: None,
                giraud: Some(c.giraud),
                factorization: Some(c.factorization),
                endpoint: None,
                status,
                children: Vec::new(),
            });
            self.nodes[id].children.push(cid);
        }
        Ok(())
    }
}

/// Breadth-first expansion of every chart until each leaf is done or the
/// blow-up budget runs out.
pub fn run(problem: &Problem) -> Result<ResolutionTree> {
    if problem.ideal.is_zero() {
        return Err(Error::Precondition("zero ideal".into()));
    }
    if problem.step_budget == 0 {
        return Err(Error::Precondition("step budget must be positive".into()));
    }
    let n = problem.chart.nvars();
    let codim = n - problem.ideal.dimension().unwrap_or(0).min(n);
    let root = Node {
        id: 0,
        parent: None,
        depth: 0,
        chart: problem.chart.with_base_point(vec![Rat::zero(); n]),
        ideal: problem.ideal.clone(),
        fibre: Vec::new(),
        witness: None,
        local_divisor: None,
        invariant: None,
        center: None,
        blowup: None,
        giraud: None,
        factorization: None,
        endpoint: None,
        status: Status::Blown,
        children: Vec::new(),
    };
    let mut r = Runner { problem, codim, nodes: vec![root], blowups: 0, queue: VecDeque::from([0]) };
    while let Some(id) = r.queue.pop_front() {
        r.process(id)?;
    }
    Ok(ResolutionTree { mode: problem.mode, codimension: codim, blowups: r.blowups, nodes: r.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use alloc::string::ToString;

    fn problem(mode: Mode, vars: &[&str], div: &[&str], gens: &[&str]) -> Problem {
        let c = LogChart::new("root", vars, div).unwrap();
        let i = Ideal::new(&c.ring, gens.iter().map(|s| parse_poly(s, &c.ring).unwrap()).collect());
        Problem::new(mode, c, i)
    }

    #[test]
    fn locate_examples() {
        let p = problem(Mode::Principalize, &["x", "y"], &[], &["x^2 - y^3"]);
        assert_eq!(locate_point(&p.chart, &p.ideal, &[], &[]).unwrap(), Some(vec![Rat::zero(), Rat::zero()]));
        let q = problem(Mode::Principalize, &["x", "y"], &[], &["(x - 1)^2 - y^3"]);
        let hint = vec![Rat::one(), Rat::zero()];
        assert_eq!(locate_point(&q.chart, &q.ideal, &[], &[hint.clone()]).unwrap(), Some(hint));
        let r = problem(Mode::Principalize, &["e1", "y"], &[], &["1 - y^3"]);
        assert_eq!(locate_point(&r.chart, &r.ideal, &[0], &[]).unwrap(), Some(vec![Rat::zero(), Rat::one()]));
        let s = problem(Mode::Principalize, &["x", "y"], &[], &["x^2 + 1"]);
        assert_eq!(locate_point(&s.chart, &s.ideal, &[], &[]).unwrap(), None);
    }

    #[test]
    fn done_examples() {
        let r = problem(Mode::Resolve, &["e1", "y"], &["e1"], &["1 - y^3"]);
        let p = vec![Rat::zero(), Rat::one()];
        assert_eq!(is_done(Mode::Resolve, &r.ideal, r.chart.divisor_mask(), &p, 1).unwrap(), Some(Status::Resolved));
        let c = problem(Mode::Resolve, &["x", "y"], &[], &["x^2 - y^3"]);
        let o = vec![Rat::zero(), Rat::zero()];
        assert_eq!(is_done(Mode::Resolve, &c.ideal, c.chart.divisor_mask(), &o, 1).unwrap(), None);
        assert_eq!(
            is_done(Mode::Principalize, &Ideal::unit(&c.chart.ring), c.chart.divisor_mask(), &o, 1).unwrap(),
            Some(Status::Principalized)
        );
        // tangent to the divisor
        let t = problem(Mode::Resolve, &["x", "y"], &["y"], &["y - x^2"]);
        let e = endpoint_check(&t.ideal, t.chart.divisor_mask(), &o, 1).unwrap();
        assert!(e.smooth && e.failed_subsets == vec![vec![1]]);
    }

    #[test]
    fn cusp_resolve() {
        let t = run(&problem(Mode::Resolve, &["x", "y"], &[], &["x^2 - y^3"])).unwrap();
        assert_eq!(t.blowups, 1);
        assert_eq!(t.root().invariant.as_ref().unwrap().to_string(), "(2, 3)");
        assert_eq!(t.root().center.as_ref().unwrap().describe(), "(x^2, y^3)");
        assert_eq!(t.root().children.len(), 2);
        for leaf in t.leaves() {
            assert_eq!(leaf.status, Status::Resolved);
            assert!(leaf.endpoint.as_ref().unwrap().passes());
            assert_eq!(leaf.giraud, Some(true));
            assert_eq!(leaf.factorization, Some(true));
        }
        let y = &t.nodes[2];
        let m: Vec<String> = y.chart.parent.as_ref().unwrap().map.iter().map(|p| p.to_string()).collect();
        assert_eq!(m, vec!["x*e1^3".to_string(), "e1^2".to_string()]);
    }

    #[test]
    fn monomial_stops() {
        let t = run(&problem(Mode::Principalize, &["u"], &["u"], &["u^3"])).unwrap();
        assert_eq!(t.blowups, 0);
        assert_eq!(t.root().status, Status::PrincipalMonomial);
    }

    #[test]
    fn xy_forced_steps() {
        let p = problem(Mode::Principalize, &["x", "y"], &["x", "y"], &["x*y"]);
        let out = step(&p.chart, &p.ideal, Mode::Principalize, "e1").unwrap();
        assert_eq!(out.invariant.vector.to_string(), "(w+2, w+2)");
        assert_eq!(out.invariant.center.describe(), "(x^2, y^2)");
        assert_eq!(out.blowup.weights, vec![1, 1]);
        let weak: Vec<String> = out.children.iter().map(|c| c.weak.generators()[0].to_string()).collect();
        assert_eq!(weak, vec!["y".to_string(), "x".to_string()]);
        for c in &out.children {
            let again = step(&c.chart.with_base_point(vec![Rat::zero(); 2]), &c.weak, Mode::Principalize, "e2").unwrap();
            assert!(compare(&again.invariant.vector, &out.invariant.vector) == Ordering::Less);
            assert!(again.children.iter().all(|g| g.weak.is_trivial()));
        }
    }

    #[test]
    fn umbrella_and_log_cusp() {
        let t = run(&problem(Mode::Resolve, &["x", "y", "z"], &[], &["x^2 - y^2*z"])).unwrap();
        assert_eq!(t.root().invariant.as_ref().unwrap().to_string(), "(2, 3, 3)");
        assert_eq!(t.root().blowup.as_ref().unwrap().weights, vec![3, 2, 2]);
        assert!(t.leaves().all(|l| l.status.is_done()));
        let l = run(&problem(Mode::Principalize, &["x", "y"], &["y"], &["x^2 - y^3"])).unwrap();
        assert_eq!(l.root().invariant.as_ref().unwrap().to_string(), "(2, w+3)");
        assert_eq!(l.root().center.as_ref().unwrap().describe(), "(x^2, y^3)");
        assert!(l.leaves().all(|n| n.status.is_done()));
    }

    #[test]
    fn budget_is_reported() {
        let mut p = problem(Mode::Principalize, &["x", "y"], &[], &["x^2 - y^5"]);
        p.step_budget = 1;
        let t = run(&p).unwrap();
        assert_eq!(t.blowups, 1);
        assert_eq!(t.failure(), Some(Status::Budget));
    }
}
