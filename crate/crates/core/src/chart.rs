//! Affine log charts and coordinate changes.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};
use crate::rat::Rat;

/// Link from a chart to the chart it was blown up from.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartParent {
    pub parent: String,
    /// Image of each parent variable, as a polynomial in this chart.
    pub map: Vec<Polynomial>,
    pub exceptional: String,
    pub cyclic_weight: u64,
}

/// An affine chart with a simple normal crossings divisor made of
/// coordinate hyperplanes.
#[derive(Clone, Debug, PartialEq)]
pub struct LogChart {
    pub name: String,
    pub ring: Ring,
    divisor: Vec<bool>,
    pub base_point: Vec<Rat>,
    pub parent: Option<ChartParent>,
    /// Override for the straightening jet bound; `None` uses the per-call default.
    pub jet_bound: Option<u64>,
}

impl LogChart {
    pub fn new<S: AsRef<str>>(name: &str, vars: &[S], divisor: &[S]) -> Result<Self> {
        let ring = Ring::new(vars);
        let mut mask = alloc::vec![false; ring.nvars()];
        for d in divisor {
            let i = ring.index_of(d.as_ref()).ok_or_else(|| Error::UnknownVariable(d.as_ref().to_string()))?;
            mask[i] = true;
        }
        Ok(LogChart::from_parts(name, ring, mask))
    }

    pub fn from_parts(name: &str, ring: Ring, divisor: Vec<bool>) -> Self {
        let n = ring.nvars();
        debug_assert_eq!(divisor.len(), n);
        LogChart {
            name: name.to_string(),
            ring,
            divisor,
            base_point: alloc::vec![Rat::zero(); n],
            parent: None,
            jet_bound: None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_divisor(&self, i: usize) -> bool {
        self.divisor[i]
    }

    pub fn divisor_mask(&self) -> &[bool] {
        &self.divisor
    }

    pub fn divisor_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.divisor[i]).collect()
    }

    pub fn divisor_names(&self) -> Vec<String> {
        self.divisor_vars().into_iter().map(|i| self.ring.name(i).to_string()).collect()
    }

    pub fn with_divisor(&self, divisor: Vec<bool>) -> LogChart {
        LogChart { divisor, ..self.clone() }
    }

    pub fn without_divisor(&self) -> LogChart {
        self.with_divisor(alloc::vec![false; self.nvars()])
    }

    pub fn with_base_point(&self, p: Vec<Rat>) -> LogChart {
        LogChart { base_point: p, ..self.clone() }
    }

    /// `Y × A^1` with an unused coordinate appended.
    pub fn with_dummy(&self, name: &str) -> LogChart {
        let name = self.ring.fresh_name(name);
        let mut divisor = self.divisor.clone();
        divisor.push(false);
        let mut base_point = self.base_point.clone();
        base_point.push(Rat::zero());
        LogChart {
            name: self.name.clone(),
            ring: self.ring.with_appended(&name),
            divisor,
            base_point,
            parent: None,
            jet_bound: self.jet_bound,
        }
    }

    pub fn is_at_origin(&self) -> bool {
        self.base_point.iter().all(|c| c.is_zero())
    }
}

/// A change of coordinates on one ring.
///
/// `forward[i]` expresses old variable `i` in the new coordinates and is used
/// to pull ideals into the new frame; `inverse[i]` expresses new variable `i`
/// in the old coordinates. When `exact` is false `forward` is a jet and
/// `inverse ∘ forward` is the identity only modulo degree above the bound.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateChange {
    pub forward: Vec<Polynomial>,
    pub inverse: Vec<Polynomial>,
    pub exact: bool,
    pub jet_bound: Option<u64>,
}

impl CoordinateChange {
    pub fn identity(ring: &Ring) -> Self {
        let id: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        CoordinateChange { forward: id.clone(), inverse: id, exact: true, jet_bound: None }
    }

    pub fn is_identity(&self) -> bool {
        let ring = self.forward[0].ring();
        self.forward.iter().enumerate().all(|(i, p)| *p == Polynomial::var(ring, i))
            && self.inverse.iter().enumerate().all(|(i, p)| *p == Polynomial::var(ring, i))
    }

    /// First `self`, then `next`: pulling back through the result equals
    /// pulling back through `self` and then through `next`.
    pub fn then(&self, next: &CoordinateChange) -> Result<CoordinateChange> {
        let ring = next.forward[0].ring().clone();
        let bound = match (self.jet_bound, next.jet_bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let forward = self
            .forward
            .iter()
            .map(|f| f.substitute_truncated(&next.forward, &ring, bound))
            .collect::<Result<Vec<_>>>()?;
        let inverse =
            next.inverse.iter().map(|g| g.substitute(&self.inverse, &ring)).collect::<Result<Vec<_>>>()?;
        Ok(CoordinateChange { forward, inverse, exact: self.exact && next.exact, jet_bound: bound })
    }

    /// Pull an ideal into the new coordinates.
    pub fn pull(&self, i: &Ideal) -> Result<Ideal> {
        let ring = i.ring().clone();
        let g = i
            .generators()
            .iter()
            .map(|f| f.substitute_truncated(&self.forward, &ring, if self.exact { None } else { self.jet_bound }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&ring, g))
    }

    /// Express a function of the new coordinates in the old ones.
    pub fn push_function(&self, f: &Polynomial) -> Result<Polynomial> {
        f.substitute(&self.inverse, f.ring())
    }

    /// Extend by the identity on an appended variable.
    pub fn extend_to(&self, big: &Ring, map: &[usize]) -> Result<CoordinateChange> {
        let mut forward: Vec<Polynomial> = (0..big.nvars()).map(|i| Polynomial::var(big, i)).collect();
        let mut inverse = forward.clone();
        for (i, &k) in map.iter().enumerate() {
            forward[k] = self.forward[i].embed(big)?;
            inverse[k] = self.inverse[i].embed(big)?;
        }
        Ok(CoordinateChange { forward, inverse, exact: self.exact, jet_bound: self.jet_bound })
    }
}

/// Translate so that `p` becomes the origin.
pub fn recenter(chart: &LogChart, p: &[Rat]) -> Result<(LogChart, CoordinateChange)> {
    let n = chart.nvars();
    if p.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.len() });
    }
    for i in chart.divisor_vars() {
        if !p[i].is_zero() {
            return Err(Error::PointOffDivisor { var: chart.ring.name(i).to_string() });
        }
    }
    let ring = &chart.ring;
    let forward = (0..n)
        .map(|i| Polynomial::var(ring, i).add(&Polynomial::constant(ring, p[i].clone())))
        .collect();
    let inverse = (0..n)
        .map(|i| Polynomial::var(ring, i).sub(&Polynomial::constant(ring, p[i].clone())))
        .collect();
    let out = chart.with_base_point(alloc::vec![Rat::zero(); n]);
    Ok((out, CoordinateChange { forward, inverse, exact: true, jet_bound: None }))
}

/// Default jet bound for straightening: `2 (a! + deg)`.
pub fn default_jet_bound(order: u32, degree: u64) -> u64 {
    let mut f: u64 = 1;
    for k in 2..=order as u64 {
        f = f.saturating_mul(k);
    }
    2u64.saturating_mul(f.saturating_add(degree)).min(64)
}

/// The first non-divisor variable carrying a nonzero linear coefficient.
pub fn straighten_pivot(chart: &LogChart, x: &Polynomial) -> Result<usize> {
    if !x.constant_term().is_zero() {
        return Err(Error::Precondition("contact does not vanish at the origin".to_string()));
    }
    let lin: Vec<usize> = (0..chart.nvars()).filter(|&i| !x.linear_coefficient(i).is_zero()).collect();
    if lin.is_empty() {
        return Err(Error::NotStraightenable);
    }
    lin.into_iter().find(|&i| !chart.is_divisor(i)).ok_or(Error::ContactCollidesWithDivisor)
}

/// A coordinate change after which `x` (normalized so its pivot coefficient
/// is one) becomes the pivot variable. Returns the pivot index as well.
pub fn straighten(chart: &LogChart, x: &Polynomial, jet_bound: u64) -> Result<(LogChart, CoordinateChange, usize)> {
    let j = straighten_pivot(chart, x)?;
    let ring = &chart.ring;
    let x = x.scale(&x.linear_coefficient(j).recip());
    let xj = Polynomial::var(ring, j);
    let g = x.sub(&xj);
    let mut forward: Vec<Polynomial> = (0..chart.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    let mut inverse = forward.clone();
    inverse[j] = x.clone();
    if g.is_zero() {
        return Ok((chart.clone(), CoordinateChange::identity(ring), j));
    }
    if !g.involves(j) {
        forward[j] = xj.sub(&g);
        return Ok((chart.clone(), CoordinateChange { forward, inverse, exact: true, jet_bound: None }, j));
    }
    // solve h = x_j - g(.., h, ..) degree by degree
    let mut h = xj.clone();
    for _ in 0..=jet_bound {
        let mut args = forward.clone();
        args[j] = h.clone();
        let next = xj.sub(&g.substitute_truncated(&args, ring, Some(jet_bound))?).truncate(jet_bound);
        if next == h {
            break;
        }
        h = next;
    }
    forward[j] = h;
    let mut out = chart.clone();
    out.jet_bound = Some(jet_bound);
    Ok((out, CoordinateChange { forward, inverse, exact: false, jet_bound: Some(jet_bound) }, j))
}

/// Chart of the hyperplane `x_var = 0`, with the variable removed.
pub fn restrict_to_hyperplane(chart: &LogChart, var: usize) -> Result<LogChart> {
    if chart.is_divisor(var) {
        return Err(Error::DivisorHyperplane { var: chart.ring.name(var).to_string() });
    }
    let ring = chart.ring.without(var);
    let mut divisor = chart.divisor.clone();
    divisor.remove(var);
    let mut base_point = chart.base_point.clone();
    base_point.remove(var);
    Ok(LogChart {
        name: chart.name.clone(),
        ring,
        divisor,
        base_point,
        parent: None,
        jet_bound: chart.jet_bound,
    })
}

/// Image of an ideal under `x_var = 0`, in the restricted chart's ring.
pub fn restrict_ideal(i: &Ideal, var: usize, target: &Ring) -> Ideal {
    let g: Vec<Polynomial> = i.generators().iter().map(|f| f.restrict_zero(var, target)).collect();
    Ideal::new(target, g).standard()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn cusp_chart(div: &[&str]) -> LogChart {
        LogChart::new("root", &["x", "y"], div).unwrap()
    }

    #[test]
    fn recenter_translates() {
        let c = cusp_chart(&[]);
        let f = parse_poly("x^2 - y^3", &c.ring).unwrap();
        let p = [Rat::one(), Rat::one()];
        let (_, ch) = recenter(&c, &p).unwrap();
        let g = ch.pull(&Ideal::principal(f)).unwrap();
        assert_eq!(g.generators()[0], parse_poly("(x + 1)^2 - (y + 1)^3", &c.ring).unwrap());
        let (_, id) = recenter(&c, &[Rat::zero(), Rat::zero()]).unwrap();
        assert!(id.is_identity());
        let d = cusp_chart(&["y"]);
        assert!(recenter(&d, &[Rat::one(), Rat::zero()]).is_ok());
        assert!(matches!(recenter(&d, &p), Err(Error::PointOffDivisor { .. })));
    }

    #[test]
    fn straighten_cases() {
        let c = LogChart::new("c", &["x1", "y"], &[]).unwrap();
        let r = &c.ring;
        let (_, ch, j) = straighten(&c, &parse_poly("x1 + y^2", r).unwrap(), 8).unwrap();
        assert_eq!(j, 0);
        assert!(ch.exact);
        assert_eq!(ch.forward[0], parse_poly("x1 - y^2", r).unwrap());
        let (_, id, _) = straighten(&c, &parse_poly("x1", r).unwrap(), 8).unwrap();
        assert!(id.is_identity());
        let x = parse_poly("x1 + x1^2", r).unwrap();
        let (_, ch, _) = straighten(&c, &x, 6).unwrap();
        assert!(!ch.exact);
        // x(forward) = x1 modulo degree > 6
        let img = x.substitute(&ch.forward, r).unwrap().truncate(6);
        assert_eq!(img, parse_poly("x1", r).unwrap());
        assert_eq!(ch.forward[0].truncate(3), parse_poly("x1 - x1^2 + 2*x1^3", r).unwrap());
    }

    #[test]
    fn straighten_errors() {
        let c = LogChart::new("c", &["x", "y"], &["y"]).unwrap();
        let r = &c.ring;
        assert_eq!(straighten(&c, &parse_poly("x^2 + y^2", r).unwrap(), 6).unwrap_err(), Error::NotStraightenable);
        assert_eq!(
            straighten(&c, &parse_poly("y + x^2", r).unwrap(), 6).unwrap_err(),
            Error::ContactCollidesWithDivisor
        );
    }

    #[test]
    fn hyperplane_restriction() {
        let c = cusp_chart(&[]);
        let r = &c.ring;
        let h = restrict_to_hyperplane(&c, 0).unwrap();
        let i = Ideal::new(r, ["x^2", "x*y^2", "y^4", "y^3"].iter().map(|s| parse_poly(s, r).unwrap()).collect());
        let res = restrict_ideal(&i, 0, &h.ring);
        assert_eq!(res.generators(), &[parse_poly("y^3", &h.ring).unwrap()]);
        assert!(restrict_ideal(&Ideal::principal(Polynomial::var(r, 0)), 0, &h.ring).is_zero());
        let y = restrict_ideal(&Ideal::principal(Polynomial::var(r, 1)), 0, &h.ring);
        assert_eq!(y.generators(), &[parse_poly("y", &h.ring).unwrap()]);
        let d = cusp_chart(&["x"]);
        assert!(matches!(restrict_to_hyperplane(&d, 0), Err(Error::DivisorHyperplane { .. })));
    }
}
