//! Weighted blow-up charts, transforms, and the degeneration presentation.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::chart::{ChartParent, LogChart};
use crate::derivations::{derivative_ideal, DerivationKind};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::{Center, ReducedCenter};
use crate::poly::{Monomial, Polynomial, Ring};
use crate::rat::Rat;

/// A reduced weighted center whose parameters are chart variables.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowupData {
    pub vars: Vec<usize>,
    pub exponents: Vec<Rat>,
    pub ell: u64,
    pub weights: Vec<u64>,
}

impl BlowupData {
    pub fn new(vars: Vec<usize>, exponents: Vec<Rat>) -> Result<Self> {
        let ReducedCenter { ell, weights } = crate::invariants::reduce_exponents(&exponents)?;
        Ok(BlowupData { vars, exponents, ell, weights })
    }

    /// From a center whose frame names the parameter variables.
    pub fn from_center(center: &Center) -> Result<Self> {
        BlowupData::new(center.frame.vars.clone(), center.exponents())
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    fn check(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        if self.vars.is_empty() || self.vars.len() != self.weights.len() {
            return Err(Error::Precondition("empty or inconsistent center".into()));
        }
        for &v in &self.vars {
            if v >= n || seen[v] {
                return Err(Error::Precondition("center parameters must be distinct chart variables".into()));
            }
            seen[v] = true;
        }
        Ok(())
    }
}

fn monomial_power(ring: &Ring, var: usize, e: u64) -> Polynomial {
    let mut m = Monomial::one(ring.nvars());
    m.0[var] = e as u32;
    Polynomial::term(ring, m, Rat::one())
}

/// Divisor of a child chart: the parent's, plus the exceptional coordinate.
pub fn transform_divisor(parent: &[bool], exceptional: usize) -> Vec<bool> {
    let mut d = parent.to_vec();
    d[exceptional] = true;
    d
}

/// The `k` charts of the weighted blow-up. In chart `i` the exceptional
/// coordinate takes the place of `x_i`; `x_i = u^{w_i}` and
/// `x_j = u^{w_j} x_j` for the other center variables.
pub fn blowup_charts(chart: &LogChart, bd: &BlowupData, exceptional_name: &str) -> Result<Vec<LogChart>> {
    let n = chart.nvars();
    bd.check(n)?;
    let mut out = Vec::with_capacity(bd.vars.len());
    for (k, &xi) in bd.vars.iter().enumerate() {
        let uname = chart.ring.fresh_name(exceptional_name);
        let ring = chart.ring.with_renamed(xi, &uname);
        let mut map: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(&ring, v)).collect();
        for (m, &xj) in bd.vars.iter().enumerate() {
            let up = monomial_power(&ring, xi, bd.weights[m]);
            map[xj] = if m == k { up } else { up.mul(&Polynomial::var(&ring, xj)) };
        }
        let mut child = LogChart::from_parts(
            &format!("{}.{}", chart.name, chart.ring.name(xi)),
            ring,
            transform_divisor(chart.divisor_mask(), xi),
        );
        child.parent = Some(ChartParent {
            parent: chart.name.clone(),
            map,
            exceptional: uname,
            cyclic_weight: bd.weights[k],
        });
        out.push(child);
    }
    Ok(out)
}

/// Total and weak transform of an ideal in one chart.
#[derive(Clone, Debug)]
pub struct TransformBundle {
    pub total: Ideal,
    pub weak: Ideal,
    pub exceptional_var: usize,
    pub exceptional_name: String,
    pub ell: u64,
}

impl TransformBundle {
    /// `u^{-c}` times the total transform, for `c ≤ ℓ`.
    pub fn controlled(&self, c: u64) -> Result<Ideal> {
        if c > self.ell {
            return Err(Error::Precondition("controlled transform beyond the multiplicity".into()));
        }
        let ring = self.total.ring();
        let m = monomial_power(ring, self.exceptional_var, c);
        let m = m.leading_term().unwrap().0.clone();
        let g = self.total.generators().iter().map(|f| f.div_monomial(&m).unwrap()).collect();
        Ok(Ideal::new(ring, g))
    }
}

fn exceptional_of(child: &LogChart) -> Result<(usize, &ChartParent)> {
    let p = child.parent.as_ref().ok_or_else(|| Error::Precondition("chart has no parent map".into()))?;
    let u = child.ring.index_of(&p.exceptional).ok_or_else(|| Error::UnknownVariable(p.exceptional.clone()))?;
    Ok((u, p))
}

/// Substitute the chart map and remove exactly `u^ℓ`.
pub fn weak_transform(i: &Ideal, child: &LogChart, ell: u64) -> Result<TransformBundle> {
    let (u, p) = exceptional_of(child)?;
    let total = i.substitute(&p.map, &child.ring)?;
    let ul = monomial_power(&child.ring, u, ell).leading_term().unwrap().0.clone();
    let mut weak = Vec::with_capacity(total.generators().len());
    for (g, orig) in total.generators().iter().zip(i.generators()) {
        match g.div_monomial(&ul) {
            Some(q) => weak.push(q),
            None => return Err(Error::CenterTooBig { generator: orig.to_string() }),
        }
    }
    if weak.iter().all(|q| q.terms().all(|(m, _)| m.exps()[u] > 0)) {
        return Err(Error::CenterTooSmall);
    }
    Ok(TransformBundle {
        total,
        weak: Ideal::new(&child.ring, weak),
        exceptional_var: u,
        exceptional_name: p.exceptional.clone(),
        ell,
    })
}

/// `u^{-(ℓ - w_max)} (D^{≤1}(I))' ⊆ D^{≤1}(I')` in one child chart.
pub fn giraud_holds(i: &Ideal, parent: &LogChart, bd: &BlowupData, child: &LogChart, weak: &Ideal) -> Result<bool> {
    let (u, p) = exceptional_of(child)?;
    let d1 = derivative_ideal(i, 1, DerivationKind::Plain, parent);
    let sub = d1.substitute(&p.map, &child.ring)?;
    let shift = bd.ell.saturating_sub(bd.max_weight());
    let m = monomial_power(&child.ring, u, shift).leading_term().unwrap().0.clone();
    let target = derivative_ideal(weak, 1, DerivationKind::Plain, child);
    for g in sub.generators() {
        match g.div_monomial(&m) {
            Some(q) => {
                if !target.contains(&q) {
                    return Ok(false);
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// The family degenerating `Y` to the weighted normal cone of the center.
#[derive(Clone, Debug)]
pub struct DegenerationPresentation {
    /// `Y`'s variables, then `x'_1 … x'_k`, then `s`.
    pub full_ring: Ring,
    /// `x_i - s^{w_i} x'_i`.
    pub relations: Vec<Polynomial>,
    /// Model chart after eliminating the `x_i`: center variables replaced by
    /// their primed versions in place, `s` appended.
    pub model: LogChart,
    pub s: usize,
    pub vertex_ideal: Ideal,
    pub weights: Vec<u64>,
    pub vars: Vec<usize>,
    pub ell: u64,
}

pub fn degeneration(chart: &LogChart, bd: &BlowupData) -> Result<DegenerationPresentation> {
    let n = chart.nvars();
    bd.check(n)?;
    let mut names: Vec<String> = chart.ring.names().to_vec();
    let primed: Vec<String> = bd.vars.iter().map(|&v| format!("{}'", chart.ring.name(v))).collect();
    names.extend(primed.iter().cloned());
    let probe = Ring::new(&names);
    let sname = probe.fresh_name("s");
    names.push(sname.clone());
    let full_ring = Ring::new(&names);
    let s_full = names.len() - 1;
    let relations = bd
        .vars
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            Polynomial::var(&full_ring, v).sub(&monomial_power(&full_ring, s_full, bd.weights[k]).mul(&Polynomial::var(&full_ring, n + k)))
        })
        .collect();
    let mut model_ring = chart.ring.clone();
    for (k, &v) in bd.vars.iter().enumerate() {
        model_ring = model_ring.with_renamed(v, &primed[k]);
    }
    let model_ring = model_ring.with_appended(&sname);
    let mut div = chart.divisor_mask().to_vec();
    div.push(true);
    let model = LogChart::from_parts(&format!("{}.cone", chart.name), model_ring.clone(), div);
    let vertex_ideal = Ideal::of_vars(&model_ring, &bd.vars);
    Ok(DegenerationPresentation {
        full_ring,
        relations,
        model,
        s: n,
        vertex_ideal,
        weights: bd.weights.clone(),
        vars: bd.vars.clone(),
        ell: bd.ell,
    })
}

impl DegenerationPresentation {
    /// `x_i ↦ s^{w_i} x'_i`, as a map into the model ring.
    pub fn substitution(&self) -> Vec<Polynomial> {
        let ring = &self.model.ring;
        let mut map: Vec<Polynomial> = (0..self.s).map(|v| Polynomial::var(ring, v)).collect();
        for (k, &v) in self.vars.iter().enumerate() {
            map[v] = monomial_power(ring, self.s, self.weights[k]).mul(&Polynomial::var(ring, v));
        }
        map
    }

    /// `s^{-ℓ} I(s^w x')` on the model chart.
    pub fn weak_model(&self, i: &Ideal) -> Result<Ideal> {
        let ring = &self.model.ring;
        let total = i.substitute(&self.substitution(), ring)?;
        let sl = monomial_power(ring, self.s, self.ell).leading_term().unwrap().0.clone();
        let mut gens = Vec::new();
        for (g, orig) in total.generators().iter().zip(i.generators()) {
            gens.push(g.div_monomial(&sl).ok_or_else(|| Error::CenterTooBig { generator: orig.to_string() })?);
        }
        Ok(Ideal::new(ring, gens))
    }

    /// Restrict a model ideal to `s = 1`, back in the original ring.
    pub fn at_s_one(&self, j: &Ideal, original: &Ring) -> Result<Ideal> {
        let mut map: Vec<Polynomial> = (0..self.s).map(|v| Polynomial::var(original, v)).collect();
        map.push(Polynomial::one(original));
        j.substitute(&map, original)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::inv_at;
    use crate::parse::parse_poly;

    fn cusp() -> (LogChart, Ideal, BlowupData) {
        let c = LogChart::new("root", &["x", "y"], &[]).unwrap();
        let i = Ideal::principal(parse_poly("x^2 - y^3", &c.ring).unwrap());
        let bd = BlowupData::new(vec![0, 1], vec![Rat::from_int(2), Rat::from_int(3)]).unwrap();
        (c, i, bd)
    }

    #[test]
    fn cusp_charts_and_transforms() {
        let (c, i, bd) = cusp();
        assert_eq!((bd.ell, bd.weights.clone()), (6, vec![3, 2]));
        let ch = blowup_charts(&c, &bd, "e1").unwrap();
        assert_eq!(ch.len(), 2);
        let p0 = ch[0].parent.as_ref().unwrap();
        assert_eq!(p0.map[0].to_string(), "e1^3");
        assert_eq!(p0.map[1].to_string(), "e1^2*y");
        assert_eq!(p0.cyclic_weight, 3);
        let p1 = ch[1].parent.as_ref().unwrap();
        assert_eq!(p1.map[0].to_string(), "x*e1^3");
        assert_eq!(p1.map[1].to_string(), "e1^2");
        assert_eq!(p1.cyclic_weight, 2);
        let w0 = weak_transform(&i, &ch[0], 6).unwrap();
        assert_eq!(w0.weak.generators()[0], parse_poly("1 - y^3", &ch[0].ring).unwrap());
        let w1 = weak_transform(&i, &ch[1], 6).unwrap();
        assert_eq!(w1.weak.generators()[0], parse_poly("x^2 - 1", &ch[1].ring).unwrap());
        for (k, w) in [w0, w1].iter().enumerate() {
            let u = monomial_power(&ch[k].ring, w.exceptional_var, 6);
            assert!(w.total.equals(&w.weak.product(&Ideal::principal(u)).unwrap()));
            assert!(giraud_holds(&i, &c, &bd, &ch[k], &w.weak).unwrap());
        }
        assert_eq!(ch[0].divisor_names(), vec!["e1".to_string()]);
        assert!(matches!(weak_transform(&i, &ch[0], 7), Err(Error::CenterTooBig { .. })));
        assert!(matches!(weak_transform(&i, &ch[0], 5), Err(Error::CenterTooSmall)));
    }

    #[test]
    fn hyperplane_and_classical() {
        let c = LogChart::new("root", &["x", "y"], &["y"]).unwrap();
        let x = Ideal::principal(parse_poly("x", &c.ring).unwrap());
        let bd = BlowupData::new(vec![0], vec![Rat::one()]).unwrap();
        let ch = blowup_charts(&c, &bd, "e1").unwrap();
        assert_eq!(ch.len(), 1);
        assert!(weak_transform(&x, &ch[0], 1).unwrap().weak.is_trivial());
        assert_eq!(ch[0].divisor_names(), vec!["e1".to_string(), "y".to_string()]);
        let bd = BlowupData::new(vec![0, 1], vec![Rat::one(), Rat::one()]).unwrap();
        assert_eq!(bd.weights, vec![1, 1]);
        let ch = blowup_charts(&c, &bd, "e1").unwrap();
        assert_eq!(ch[1].parent.as_ref().unwrap().map[0].to_string(), "x*e1");
        // divisor {y}, cusp: x-chart gets {u, y}
        let cusp = BlowupData::new(vec![0, 1], vec![Rat::from_int(2), Rat::from_int(3)]).unwrap();
        let ch = blowup_charts(&c, &cusp, "e1").unwrap();
        assert_eq!(ch[0].divisor_names(), vec!["e1".to_string(), "y".to_string()]);
    }

    #[test]
    fn degeneration_cusp() {
        let (c, i, bd) = cusp();
        let d = degeneration(&c, &bd).unwrap();
        let rel: Vec<String> = d.relations.iter().map(|p| p.to_string()).collect();
        assert_eq!(rel, vec!["-x'*s^3 + x".to_string(), "-y'*s^2 + y".to_string()]);
        let weak = d.weak_model(&i).unwrap();
        assert_eq!(weak.generators()[0].to_string(), "-y'^3 + x'^2");
        assert!(d.at_s_one(&weak, &c.ring).unwrap().equals(&i));
        let v = inv_at(&weak, &d.model).unwrap().vector;
        assert_eq!(v, inv_at(&i, &c).unwrap().vector);
        let k1 = BlowupData::new(vec![0], vec![Rat::one()]).unwrap();
        let d1 = degeneration(&c, &k1).unwrap();
        assert_eq!(d1.relations[0].to_string(), "-x'*s + x");
    }
}
