//! The invariants `inv`, `loginv`, `loginv*` and their centers.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::chart::{default_jet_bound, recenter, straighten, CoordinateChange, LogChart};
use crate::contact::{contact_candidates, one_variable_scaled_exponent, restricted_coefficient_ideal, DEFAULT_ORDER_CAP};
use crate::derivations::{log_flags, monomial_saturation, order_at_origin, DerivationKind, Order};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Polynomial};
use crate::rat::{factorial, Rat};

/// A nonnegative rational, or `ω` plus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantEntry {
    pub value: Rat,
    pub omega: bool,
}

impl InvariantEntry {
    pub fn finite(value: Rat) -> Self {
        InvariantEntry { value, omega: false }
    }

    pub fn omega(value: Rat) -> Self {
        InvariantEntry { value, omega: true }
    }
}

impl fmt::Display for InvariantEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.omega {
            write!(f, "w+{}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A finite sequence of entries, possibly ending in `∞`.
///
/// Ordered lexicographically with `ω`-entries above every rational, `∞`
/// above everything, and a proper prefix above its extensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub entries: Vec<InvariantEntry>,
    pub trailing_infinity: bool,
}

impl InvariantVector {
    pub fn from_rats(v: &[Rat]) -> Self {
        InvariantVector { entries: v.iter().cloned().map(InvariantEntry::finite).collect(), trailing_infinity: false }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        InvariantVector::from_rats(&v.iter().map(|&k| Rat::from_int(k)).collect::<Vec<_>>())
    }

    fn ranked(&self) -> Vec<(u8, Option<&Rat>)> {
        let mut r: Vec<(u8, Option<&Rat>)> = self.entries.iter().map(|e| (e.omega as u8, Some(&e.value))).collect();
        if self.trailing_infinity {
            r.push((2, None));
        }
        r
    }

    /// The raw `loginv` a `loginv*` vector refines: `ω`-entries become `∞`.
    pub fn erase_omega(&self) -> InvariantVector {
        let entries: Vec<InvariantEntry> = self.entries.iter().filter(|e| !e.omega).cloned().collect();
        let trailing_infinity = self.trailing_infinity || self.entries.iter().any(|e| e.omega);
        InvariantVector { entries, trailing_infinity }
    }

    pub fn scaled(&self, k: &Rat) -> InvariantVector {
        InvariantVector {
            entries: self.entries.iter().map(|e| InvariantEntry { value: &e.value * k, omega: e.omega }).collect(),
            trailing_infinity: self.trailing_infinity,
        }
    }

    /// Parse the canonical rendering, e.g. `(2, w+3/2, inf)`.
    pub fn parse(s: &str) -> Option<InvariantVector> {
        let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        let mut out = InvariantVector { entries: Vec::new(), trailing_infinity: false };
        if inner.trim().is_empty() {
            return Some(out);
        }
        let parts: Vec<&str> = inner.split(',').map(|p| p.trim()).collect();
        for (k, p) in parts.iter().enumerate() {
            if *p == "inf" {
                if k + 1 != parts.len() {
                    return None;
                }
                out.trailing_infinity = true;
            } else if let Some(v) = p.strip_prefix("w+") {
                out.entries.push(InvariantEntry::omega(parse_rat(v)?));
            } else {
                out.entries.push(InvariantEntry::finite(parse_rat(p)?));
            }
        }
        Some(out)
    }
}

fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::from_ratio(n, d))
}

impl Ord for InvariantVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.ranked();
        let b = other.ranked();
        for (x, y) in a.iter().zip(&b) {
            match x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        // a truncation is larger
        b.len().cmp(&a.len())
    }
}

impl PartialOrd for InvariantVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Three-way comparison of invariant vectors.
pub fn compare(u: &InvariantVector, v: &InvariantVector) -> Ordering {
    u.cmp(v)
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        if self.trailing_infinity {
            if !self.entries.is_empty() {
                f.write_str(", ")?;
            }
            f.write_str("inf")?;
        }
        f.write_str(")")
    }
}

/// `Q^{1/d}` with `Q` generated by divisor monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialPart {
    pub ideal: Ideal,
    pub d: BigInt,
}

/// Reduced form `a_i = ℓ / w_i` with `gcd(w) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCenter {
    pub ell: u64,
    pub weights: Vec<u64>,
}

/// The coordinates in which the center's parameters are chart variables.
///
/// An ideal `I` of the chart becomes `change.pull(I.translate(origin))`;
/// parameter `k` is then the variable `vars[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub origin: Vec<Rat>,
    pub change: CoordinateChange,
    pub vars: Vec<usize>,
}

impl Frame {
    pub fn pull(&self, i: &Ideal) -> Result<Ideal> {
        self.change.pull(&i.translate(&self.origin)?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Center {
    /// Parameters in the chart's own coordinates with their exponents.
    pub parameters: Vec<(Polynomial, Rat)>,
    pub monomial_part: Option<MonomialPart>,
    pub reduced: Option<ReducedCenter>,
    pub frame: Frame,
}

impl Center {
    pub fn exponents(&self) -> Vec<Rat> {
        self.parameters.iter().map(|p| p.1.clone()).collect()
    }

    /// Fill in `reduced`.
    pub fn reduce(&self) -> Result<Center> {
        let r = reduce_exponents(&self.exponents())?;
        Ok(Center { reduced: Some(r), ..self.clone() })
    }

    /// The ideal generated by the parameters' integer powers `x_i^{ℓ/w_i·…}`
    /// after clearing denominators; two centers agree iff these agree.
    pub fn cleared_ideal(&self) -> Result<Ideal> {
        let ring = self.frame.change.forward[0].ring().clone();
        let mut den = BigInt::one();
        for (_, e) in &self.parameters {
            den = den.lcm(e.denom());
        }
        let mut gens = Vec::new();
        for (p, e) in &self.parameters {
            let k = (e * &Rat::from_big(den.clone())).to_u64().ok_or_else(|| Error::Internal("exponent".into()))?;
            gens.push(p.pow(k as u32));
        }
        Ok(Ideal::new(&ring, gens))
    }

    pub fn describe(&self) -> String {
        let mut s = String::from("(");
        for (k, (p, e)) in self.parameters.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            let base = if p.nterms() == 1 { p.to_string() } else { format!("({p})") };
            s.push_str(&format!("{base}^{e}"));
        }
        s.push(')');
        s
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// `(a_1, …, a_k) = ℓ (1/w_1, …, 1/w_k)`.
pub fn reduce_exponents(a: &[Rat]) -> Result<ReducedCenter> {
    if a.is_empty() || a.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition("center exponents must be positive".into()));
    }
    let mut l = BigInt::one();
    for x in a {
        l = l.lcm(x.numer());
    }
    let wp: Vec<BigInt> = a.iter().map(|x| x.denom() * &l / x.numer()).collect();
    let mut g = BigInt::zero();
    for w in &wp {
        g = g.gcd(w);
    }
    let ell = Rat::from_ratio(l, g.clone());
    if !ell.is_integer() {
        return Err(Error::Precondition(format!("non-integral multiplicity {ell}")));
    }
    let weights = wp
        .iter()
        .map(|w| (w / &g).to_u64().ok_or_else(|| Error::Internal("weight overflow".into())))
        .collect::<Result<Vec<_>>>()?;
    let ell = ell.to_u64().ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
    Ok(ReducedCenter { ell, weights })
}

/// Knobs for the recursion. `contact_choice[k]` picks the candidate index
/// at recursion depth `k` (default 0, the deterministic tie-break).
#[derive(Clone, Debug, Default)]
pub struct InvOptions {
    pub contact_choice: Vec<usize>,
    pub order_cap: Option<u32>,
    pub jet_bound: Option<u64>,
}

struct Level {
    entries: Vec<Rat>,
    tail: Option<(Ideal, BigInt)>,
    /// (variable in this level's ring, exponent)
    params: Vec<(usize, Rat)>,
    change: CoordinateChange,
}

fn recurse(i: &Ideal, flags: &[bool], kind: DerivationKind, depth: usize, opts: &InvOptions) -> Result<Level> {
    let ring = i.ring().clone();
    let n = ring.nvars();
    if depth > 64 || n == 0 {
        return Err(Error::Internal("invariant recursion exhausted the variables".into()));
    }
    if i.is_zero() {
        return Err(Error::Precondition("zero ideal".into()));
    }
    let a = match order_at_origin(i, flags) {
        Order::Finite(0) => return Err(Error::Precondition("ideal does not vanish at the base point".into())),
        Order::Finite(a) => a,
        Order::Infinite => {
            let chart = LogChart::from_parts("", ring.clone(), flags.to_vec());
            return Ok(Level {
                entries: Vec::new(),
                tail: Some((monomial_saturation(i, &chart), BigInt::one())),
                params: Vec::new(),
                change: CoordinateChange::identity(&ring),
            });
        }
    };
    let divisor: Vec<bool> = if kind == DerivationKind::Log { flags.to_vec() } else { vec![false; n] };
    let cands = contact_candidates(i, a, &divisor);
    if cands.is_empty() {
        return Err(Error::ContactCollidesWithDivisor);
    }
    let pick = opts.contact_choice.get(depth).copied().unwrap_or(0).min(cands.len() - 1);
    let contact = &cands[pick];
    let chart = LogChart::from_parts("", ring.clone(), divisor.clone());
    let deg = i.generators().iter().map(|g| g.total_degree()).max().unwrap_or(0);
    let bound = opts.jet_bound.unwrap_or_else(|| default_jet_bound(a, deg));
    let (_, change, j) = straighten(&chart, &contact.element, bound)?;
    let i2 = change.pull(i)?.minimized();

    let xj = Monomial::var(n, j);
    let xja = Monomial(xj.exps().iter().map(|e| e * a).collect());
    let all_div = i2.generators().iter().all(|g| g.div_monomial(&xja).is_some());
    if all_div
        && i2.generators().iter().any(|g| !g.div_monomial(&xja).unwrap().constant_term().is_zero())
    {
        return Ok(Level { entries: vec![Rat::from_int(a as i64)], tail: None, params: vec![(j, Rat::from_int(a as i64))], change });
    }

    let scale = Rat::from_big(factorial(a as u64 - 1)).recip();
    let sub_ring = ring.without(j);
    let mut sub_flags = flags.to_vec();
    sub_flags.remove(j);
    let lift = |k: usize| if k < j { k } else { k + 1 };
    let a_rat = Rat::from_int(a as i64);

    if sub_ring.nvars() == 1 {
        let z = lift(0);
        let log_z = kind == DerivationKind::Log && sub_flags[0];
        let s = one_variable_scaled_exponent(&i2, a, j, log_z)
            .ok_or_else(|| Error::Internal("restricted coefficient ideal vanished".into()))?;
        if log_z {
            let p: u32 = s.numer().to_u32().ok_or_else(|| Error::Internal("exponent overflow".into()))?;
            let zp = Polynomial::term(&ring, Monomial(Monomial::var(n, z).exps().iter().map(|e| e * p).collect()), Rat::one());
            return Ok(Level {
                entries: vec![a_rat.clone()],
                tail: Some((Ideal::principal(zp), s.denom().clone())),
                params: vec![(j, a_rat)],
                change,
            });
        }
        return Ok(Level { entries: vec![a_rat.clone(), s.clone()], tail: None, params: vec![(j, a_rat), (z, s)], change });
    }

    let cap = opts.order_cap.unwrap_or(DEFAULT_ORDER_CAP);
    let c = restricted_coefficient_ideal(&i2, a, j, flags, &sub_ring, cap)?;
    let child = recurse(&c, &sub_flags, kind, depth + 1, opts)?;

    let map: Vec<usize> = (0..sub_ring.nvars()).map(lift).collect();
    let ext = child.change.extend_to(&ring, &map)?;
    let total = change.then(&ext)?;
    let mut entries = vec![a_rat.clone()];
    entries.extend(child.entries.iter().map(|e| e * &scale));
    let mut params = vec![(j, a_rat)];
    params.extend(child.params.iter().map(|(k, e)| (lift(*k), e * &scale)));
    let tail = match child.tail {
        Some((q, d)) => Some((q.embed(&ring)?, d * factorial(a as u64 - 1))),
        None => None,
    };
    Ok(Level { entries, tail, params, change: total })
}

/// Result of an invariant computation.
#[derive(Clone, Debug, PartialEq)]
pub struct Invariant {
    pub vector: InvariantVector,
    pub center: Center,
}

fn run(i: &Ideal, chart: &LogChart, kind: DerivationKind, opts: &InvOptions) -> Result<Invariant> {
    let flags = log_flags(chart, kind);
    let base = if kind == DerivationKind::Log { chart.clone() } else { chart.without_divisor() };
    let (_, _) = recenter(&base, &chart.base_point)?;
    let moved = i.translate(&chart.base_point)?;
    if moved.is_zero() {
        return Err(Error::Precondition("zero ideal".into()));
    }
    if !moved.vanishes_at(&vec![Rat::zero(); chart.nvars()])? {
        return Err(Error::Precondition("ideal does not vanish at the base point".into()));
    }
    let opts = InvOptions { jet_bound: opts.jet_bound.or(chart.jet_bound), ..opts.clone() };
    let lv = recurse(&moved, &flags, kind, 0, &opts)?;
    let neg: Vec<Rat> = chart.base_point.iter().map(|c| -c).collect();
    let mut parameters = Vec::new();
    for (k, e) in &lv.params {
        let p = lv.change.inverse[*k].translate(&neg)?;
        parameters.push((p, e.clone()));
    }
    let vector = InvariantVector {
        entries: lv.entries.iter().cloned().map(InvariantEntry::finite).collect(),
        trailing_infinity: lv.tail.is_some(),
    };
    let frame = Frame { origin: chart.base_point.clone(), change: lv.change, vars: lv.params.iter().map(|p| p.0).collect() };
    let monomial_part = lv.tail.map(|(q, d)| MonomialPart { ideal: q.standard(), d });
    Ok(Invariant { vector, center: Center { parameters, monomial_part, reduced: None, frame } })
}

/// `inv` at the chart's base point. The divisor is ignored.
pub fn inv_at(i: &Ideal, chart: &LogChart) -> Result<Invariant> {
    inv_at_with(i, chart, &InvOptions::default())
}

pub fn inv_at_with(i: &Ideal, chart: &LogChart, opts: &InvOptions) -> Result<Invariant> {
    run(i, chart, DerivationKind::Plain, opts)
}

/// `loginv` at the chart's base point.
pub fn loginv_at(i: &Ideal, chart: &LogChart) -> Result<Invariant> {
    loginv_at_with(i, chart, &InvOptions::default())
}

pub fn loginv_at_with(i: &Ideal, chart: &LogChart, opts: &InvOptions) -> Result<Invariant> {
    run(i, chart, DerivationKind::Log, opts)
}

/// `inv` of a monomial ideal in divisor variables; its parameters are
/// checked to be single divisor coordinates.
pub fn monomial_inv_at(q: &Ideal, chart: &LogChart) -> Result<Invariant> {
    let mask = chart.divisor_mask();
    for g in q.generators() {
        if !g.is_monomial() || !g.leading_term().unwrap().0.supported_in(mask) {
            return Err(Error::Precondition(format!("{g} is not a divisor monomial")));
        }
    }
    let at0 = chart.with_base_point(vec![Rat::zero(); chart.nvars()]);
    let mut inv = inv_at(q, &at0)?;
    if !inv.center.frame.change.is_identity() {
        return Err(Error::MonomialityViolated("nontrivial coordinate change".into()));
    }
    for (p, _) in inv.center.parameters.iter_mut() {
        let v = p.support_vars();
        if !p.is_monomial() || v.len() != 1 || p.total_degree() != 1 || !chart.is_divisor(v[0]) {
            return Err(Error::MonomialityViolated(p.to_string()));
        }
        *p = p.monic();
    }
    Ok(inv)
}

/// `loginv*` at the chart's base point.
pub fn loginv_star_at(i: &Ideal, chart: &LogChart) -> Result<Invariant> {
    loginv_star_at_with(i, chart, &InvOptions::default())
}

pub fn loginv_star_at_with(i: &Ideal, chart: &LogChart, opts: &InvOptions) -> Result<Invariant> {
    let log = loginv_at_with(i, chart, opts)?;
    let mp = match &log.center.monomial_part {
        None => return Ok(log),
        Some(mp) => mp.clone(),
    };
    let mono = monomial_inv_at(&mp.ideal, chart)?;
    let d = Rat::from_big(mp.d.clone());
    let mut vector = log.vector.clone();
    vector.trailing_infinity = false;
    let mut center = log.center.clone();
    for (e, (p, c)) in mono.vector.entries.iter().zip(&mono.center.parameters) {
        let b = &e.value / &d;
        vector.entries.push(InvariantEntry::omega(b.clone()));
        center.parameters.push((p.clone(), &c.clone() / &d));
    }
    center.frame.vars.extend(mono.center.frame.vars.iter().copied());
    Ok(Invariant { vector, center })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn ideal(chart: &LogChart, src: &[&str]) -> Ideal {
        Ideal::new(&chart.ring, src.iter().map(|s| parse_poly(s, &chart.ring).unwrap()).collect())
    }

    fn c2(div: &[&str]) -> LogChart {
        LogChart::new("c", &["x", "y"], div).unwrap()
    }

    fn c3(div: &[&str]) -> LogChart {
        LogChart::new("c", &["x", "y", "z"], div).unwrap()
    }

    #[test]
    fn compare_rules() {
        let p = |s: &str| InvariantVector::parse(s).unwrap();
        assert_eq!(compare(&p("(2, 3)"), &p("(2)")), Ordering::Less);
        assert_eq!(compare(&p("(2, 5)"), &p("(2, w+1)")), Ordering::Less);
        assert_eq!(compare(&p("(3)"), &p("(2, w+7)")), Ordering::Greater);
        assert_eq!(compare(&p("(2, 3)"), &p("(2, inf)")), Ordering::Less);
        assert_eq!(p("(2, w+3/2)").to_string(), "(2, w+3/2)");
        assert_eq!(p("(inf)").to_string(), "(inf)");
    }

    #[test]
    fn cusp_and_umbrella() {
        let c = c2(&[]);
        let inv = inv_at(&ideal(&c, &["x^2 - y^3"]), &c).unwrap();
        assert_eq!(inv.vector.to_string(), "(2, 3)");
        assert_eq!(inv.center.describe(), "(x^2, y^3)");
        let r = inv.center.reduce().unwrap().reduced.unwrap();
        assert_eq!((r.ell, r.weights), (6, vec![3, 2]));
        let u = c3(&[]);
        let inv = inv_at(&ideal(&u, &["x^2 - y^2*z"]), &u).unwrap();
        assert_eq!(inv.vector.to_string(), "(2, 3, 3)");
        assert_eq!(inv.center.describe(), "(x^2, y^3, z^3)");
        let r = inv.center.reduce().unwrap().reduced.unwrap();
        assert_eq!((r.ell, r.weights), (6, vec![3, 2, 2]));
        let inv = inv_at(&ideal(&c, &["x"]), &c).unwrap();
        assert_eq!(inv.vector.to_string(), "(1)");
    }

    #[test]
    fn log_examples() {
        let c = c2(&["y"]);
        let i = ideal(&c, &["x^2 - y^3"]);
        let l = loginv_at(&i, &c).unwrap();
        assert_eq!(l.vector.to_string(), "(2, inf)");
        let mp = l.center.monomial_part.clone().unwrap();
        assert!(mp.ideal.equals(&ideal(&c, &["y^3"])));
        assert_eq!(mp.d, BigInt::one());
        let s = loginv_star_at(&i, &c).unwrap();
        assert_eq!(s.vector.to_string(), "(2, w+3)");
        assert_eq!(s.center.describe(), "(x^2, y^3)");
        assert_eq!(s.vector.erase_omega(), l.vector);

        let xy = c2(&["x", "y"]);
        let i = ideal(&xy, &["x*y"]);
        assert_eq!(loginv_at(&i, &xy).unwrap().vector.to_string(), "(inf)");
        let s = loginv_star_at(&i, &xy).unwrap();
        assert_eq!(s.vector.to_string(), "(w+2, w+2)");
        assert_eq!(s.center.describe(), "(x^2, y^2)");

        let none = c2(&[]);
        let i = ideal(&none, &["x^2 - y^3"]);
        assert_eq!(loginv_star_at(&i, &none).unwrap().vector, inv_at(&i, &none).unwrap().vector);

        let c = c2(&["y"]);
        let s = loginv_star_at(&ideal(&c, &["x^3 + y"]), &c).unwrap();
        assert_eq!(s.vector.to_string(), "(3, w+1)");
        let r = reduce_exponents(&s.center.exponents()).unwrap();
        assert_eq!((r.ell, r.weights), (3, vec![1, 3]));
    }

    #[test]
    fn monomial_examples() {
        let xy = c2(&["x", "y"]);
        let m = monomial_inv_at(&ideal(&xy, &["x*y"]), &xy).unwrap();
        assert_eq!(m.vector.to_string(), "(2, 2)");
        assert_eq!(m.center.describe(), "(x^2, y^2)");
        let y = c2(&["y"]);
        assert_eq!(monomial_inv_at(&ideal(&y, &["y^3"]), &y).unwrap().vector.to_string(), "(3)");
        let m = monomial_inv_at(&ideal(&xy, &["x^2*y"]), &xy).unwrap();
        assert_eq!(m.vector.to_string(), "(3, 3)");
        assert_eq!(m.center.describe(), "(x^3, y^3)");
        assert!(monomial_inv_at(&ideal(&y, &["x*y"]), &y).is_err());
    }

    #[test]
    fn more_plain_values() {
        let c = c2(&[]);
        assert_eq!(inv_at(&ideal(&c, &["x^3 - y^5"]), &c).unwrap().vector.to_string(), "(3, 5)");
        assert_eq!(inv_at(&ideal(&c, &["x*y"]), &c).unwrap().vector.to_string(), "(2, 2)");
        assert_eq!(inv_at(&ideal(&c, &["x^2 - y^4"]), &c).unwrap().vector.to_string(), "(2, 4)");
        // off-origin base point
        let p = c.with_base_point(vec![Rat::one(), Rat::zero()]);
        let inv = inv_at(&ideal(&c, &["(x - 1)^2 - y^3"]), &p).unwrap();
        assert_eq!(inv.vector.to_string(), "(2, 3)");
        assert_eq!(inv.center.describe(), "((x - 1)^2, y^3)");
    }

    #[test]
    fn reduce_examples() {
        let r = |v: &[i64]| reduce_exponents(&v.iter().map(|&k| Rat::from_int(k)).collect::<Vec<_>>()).unwrap();
        assert_eq!(r(&[2, 3]), ReducedCenter { ell: 6, weights: vec![3, 2] });
        assert_eq!(r(&[2, 3, 3]), ReducedCenter { ell: 6, weights: vec![3, 2, 2] });
        assert_eq!(r(&[1, 1]), ReducedCenter { ell: 1, weights: vec![1, 1] });
        let half = reduce_exponents(&[Rat::new(3, 2), Rat::from_int(3)]);
        assert_eq!(half.unwrap(), ReducedCenter { ell: 3, weights: vec![2, 1] });
    }

    #[test]
    fn choice_independence() {
        let u = c3(&[]);
        let i = ideal(&u, &["x^2 - y^2*z"]);
        let base = inv_at(&i, &u).unwrap().vector;
        for k in 0..4 {
            let opts = InvOptions { contact_choice: vec![0, k], ..Default::default() };
            assert_eq!(inv_at_with(&i, &u, &opts).unwrap().vector, base, "choice {k}");
        }
        let sym = ideal(&c2(&[]), &["x^2 + y^2"]);
        let c = c2(&[]);
        let a = inv_at(&sym, &c).unwrap().vector;
        let b = inv_at_with(&sym, &c, &InvOptions { contact_choice: vec![1], ..Default::default() }).unwrap().vector;
        assert_eq!(a, b);
    }

    fn arb_vec() -> impl Strategy<Value = InvariantVector> {
        (proptest::collection::vec((0i64..4, any::<bool>()), 0..4), any::<bool>()).prop_map(|(v, inf)| {
            let mut entries: Vec<InvariantEntry> =
                v.into_iter().map(|(k, o)| InvariantEntry { value: Rat::from_int(k), omega: o }).collect();
            entries.sort_by_key(|e| e.omega);
            let has_omega = entries.iter().any(|e| e.omega);
            InvariantVector { entries, trailing_infinity: inf && !has_omega }
        })
    }

    proptest! {
        #[test]
        fn compare_is_total_order(a in arb_vec(), b in arb_vec(), c in arb_vec()) {
            prop_assert_eq!(compare(&a, &b), compare(&b, &a).reverse());
            prop_assert_eq!(compare(&a, &b) == Ordering::Equal, a == b);
            if compare(&a, &b) != Ordering::Greater && compare(&b, &c) != Ordering::Greater {
                prop_assert!(compare(&a, &c) != Ordering::Greater);
            }
            prop_assert_eq!(InvariantVector::parse(&a.to_string()).unwrap(), a);
        }
    }
}

#[cfg(test)]
mod scaling_tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn power_scaling() {
        let cases: [(&[&str], &str); 4] = [
            (&["x", "y"], "x^2 - y^3"),
            (&["x", "y", "z"], "x^2 - y^2*z"),
            (&["x", "y", "z"], "x^2 - y^2*z^2"),
            (&["x", "y"], "x^3 - y^5"),
        ];
        for (vars, f) in cases {
            let c = LogChart::new("c", vars, &[]).unwrap();
            let p = parse_poly(f, &c.ring).unwrap();
            let base = inv_at(&Ideal::principal(p.clone()), &c).unwrap().vector;
            for k in 2..=3u32 {
                let v = inv_at(&Ideal::principal(p.pow(k)), &c).unwrap().vector;
                assert_eq!(v, base.scaled(&Rat::from_int(k as i64)));
            }
        }
    }
}
