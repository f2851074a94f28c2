//! Maximal contact and coefficient ideals.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::chart::LogChart;
use crate::derivations::{apply_multi, log_flags, minimal_monomials, order_at, DerivationKind, Order};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::rat::{factorial, Rat};

/// Largest order whose coefficient ideal is built by products of stages.
pub const DEFAULT_ORDER_CAP: u32 = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct MaximalContact {
    pub element: Polynomial,
    /// Index of the generator the element was derived from.
    pub generator: usize,
    /// Exponents of the basic derivations applied.
    pub multi_index: Vec<u32>,
    /// Non-divisor variable carrying the unit derivative.
    pub pivot: usize,
    /// The order `a`; the element lies in `D^{≤a-1}(I)`.
    pub order_context: u32,
}

/// All elements `θ^α g_j` with `|α| = a - 1` whose linear part at the origin
/// involves a non-divisor variable, in tie-break order.
///
/// The linear part of `∂^α g` comes only from terms `x^{α+e_k}` of degree
/// `a`, so candidates are read off those terms instead of enumerating every
/// multi-index.
pub fn contact_candidates(i: &Ideal, a: u32, divisor: &[bool]) -> Vec<MaximalContact> {
    let n = i.ring().nvars();
    let flags = vec![false; n];
    let mut out = Vec::new();
    for (j, g) in i.generators().iter().enumerate() {
        let mut alphas: BTreeSet<Vec<u32>> = BTreeSet::new();
        for (m, _) in g.terms() {
            if m.degree() != a as u64 || m.exps().iter().zip(divisor).any(|(e, d)| *d && *e > 0) {
                continue;
            }
            for k in 0..n {
                if m.exps()[k] > 0 && !divisor[k] {
                    let mut alpha = m.exps().to_vec();
                    alpha[k] -= 1;
                    alphas.insert(alpha);
                }
            }
        }
        for alpha in alphas {
            let element = apply_multi(g, &alpha, &flags);
            let pivot = (0..n).find(|&k| !divisor[k] && !element.linear_coefficient(k).is_zero());
            if let Some(pivot) = pivot {
                out.push(MaximalContact { element, generator: j, multi_index: alpha, pivot, order_context: a });
            }
        }
    }
    out
}

/// The deterministic maximal contact at the chart's base point (the origin).
pub fn maximal_contact(i: &Ideal, chart: &LogChart, kind: DerivationKind) -> Result<MaximalContact> {
    let a = match order_at(i, chart, kind)? {
        Order::Finite(0) => return Err(Error::Precondition("ideal is a unit at the base point".into())),
        Order::Finite(a) => a,
        Order::Infinite => return Err(Error::Precondition("order is infinite".into())),
    };
    let divisor = effective_divisor(chart, kind);
    let moved = if chart.is_at_origin() { i.clone() } else { i.translate(&chart.base_point)? };
    contact_candidates(&moved, a, &divisor).into_iter().next().ok_or(Error::ContactCollidesWithDivisor)
}

/// The divisor seen by derivations of the given kind.
pub fn effective_divisor(chart: &LogChart, kind: DerivationKind) -> Vec<bool> {
    log_flags(chart, kind)
}

/// `C_N` for `C_k = Σ_i S_i C_{k-i}` with `C_{≤0} = (1)`, where `S_i` carries
/// weight `i`: the ideal of all products of stages with weight at least `N`.
pub fn weighted_products(stages: &[Ideal], target: u64, ring: &Ring) -> Ideal {
    if let Some(m) = stages.iter().map(monomial_gens).collect::<Option<Vec<_>>>() {
        let gens = weighted_products_monomial(&m, target);
        return Ideal::new(ring, gens.into_iter().map(|e| Polynomial::term(ring, e, Rat::one())).collect());
    }
    let a = stages.len();
    let mut table: Vec<Ideal> = Vec::with_capacity(target as usize + 1);
    table.push(Ideal::unit(ring));
    for k in 1..=target as usize {
        let mut gens = Vec::new();
        for (w, s) in stages.iter().enumerate() {
            let i = w + 1;
            let prev = if i >= k { &table[0] } else { &table[k - i] };
            gens.extend(s.product(prev).unwrap().generators().iter().cloned());
        }
        table.push(Ideal::new(ring, gens).standard());
        if k > a {
            // rows older than `a` are never read again
            table[k - a - 1] = Ideal::zero(ring);
        }
    }
    table.pop().unwrap()
}

fn monomial_gens(i: &Ideal) -> Option<Vec<Monomial>> {
    let i = i.standard();
    if !i.generators().iter().all(|g| g.is_monomial()) {
        return None;
    }
    Some(minimal_monomials(i.generators().iter().map(|g| g.leading_term().unwrap().0.clone()).collect()))
}

fn weighted_products_monomial(stages: &[Vec<Monomial>], target: u64) -> Vec<Monomial> {
    let n = stages.iter().flatten().map(|m| m.len()).next().unwrap_or(0);
    let one = vec![Monomial::one(n)];
    let mut table: Vec<Vec<Monomial>> = vec![one.clone()];
    for k in 1..=target as usize {
        let mut acc = Vec::new();
        for (w, s) in stages.iter().enumerate() {
            let i = w + 1;
            let prev = if i >= k { &one } else { &table[k - i] };
            for a in s {
                for b in prev {
                    acc.push(a.mul(b));
                }
            }
        }
        table.push(minimal_monomials(acc));
    }
    table.pop().unwrap()
}

/// `D^{≤a-i}(I)` for `i = 1..=a`.
pub fn stages(i: &Ideal, a: u32, flags: &[bool]) -> Vec<Ideal> {
    let mut ds = Vec::with_capacity(a as usize);
    let mut cur = i.standard();
    ds.push(cur.clone());
    for _ in 1..a {
        cur = crate::derivations::derivative_step(&cur, flags);
        ds.push(cur.clone());
    }
    ds.reverse();
    ds
}

fn check_order(i: &Ideal, a: u32, chart: &LogChart, kind: DerivationKind, cap: u32) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition("coefficient ideal needs a positive order".into()));
    }
    if order_at(i, chart, kind)? != Order::Finite(a) {
        return Err(Error::Precondition(format!("order at the base point is not {a}")));
    }
    if a > cap {
        return Err(Error::OrderCapExceeded { order: a, cap });
    }
    Ok(())
}

/// `C(I, a)`, the products of derivative stages of weighted degree `≥ a!`.
pub fn coefficient_ideal(i: &Ideal, a: u32, kind: DerivationKind, chart: &LogChart) -> Result<Ideal> {
    coefficient_ideal_capped(i, a, kind, chart, DEFAULT_ORDER_CAP)
}

pub fn coefficient_ideal_capped(i: &Ideal, a: u32, kind: DerivationKind, chart: &LogChart, cap: u32) -> Result<Ideal> {
    check_order(i, a, chart, kind, cap)?;
    if a == 1 {
        return Ok(i.clone());
    }
    let st = stages(i, a, &log_flags(chart, kind));
    let target = factorial(a as u64).try_into().map_err(|_| Error::OrderCapExceeded { order: a, cap })?;
    Ok(weighted_products(&st, target, i.ring()))
}

/// `C(I, a)` by enumerating the componentwise-minimal exponent vectors
/// `(b_1, …, b_a)` with `Σ i b_i ≥ a!`.
pub fn coefficient_ideal_by_covers(i: &Ideal, a: u32, kind: DerivationKind, chart: &LogChart) -> Result<Ideal> {
    check_order(i, a, chart, kind, DEFAULT_ORDER_CAP)?;
    let st = stages(i, a, &log_flags(chart, kind));
    let target: u64 = factorial(a as u64).try_into().unwrap();
    let ring = i.ring();
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut b = vec![0u64; a as usize];
    fn rec(k: usize, b: &mut Vec<u64>, sum: u64, target: u64, out: &mut Vec<Vec<u64>>) {
        if k == b.len() {
            if sum >= target && (0..b.len()).all(|i| b[i] == 0 || sum - (i as u64 + 1) < target) {
                out.push(b.clone());
            }
            return;
        }
        let w = k as u64 + 1;
        let mut c = 0;
        while sum + c * w < target + w {
            b[k] = c;
            rec(k + 1, b, sum + c * w, target, out);
            c += 1;
        }
        b[k] = 0;
    }
    let mut covers = Vec::new();
    rec(0, &mut b, 0, target, &mut covers);
    for cover in covers {
        let mut prod = Ideal::unit(ring);
        for (k, &e) in cover.iter().enumerate() {
            if e > 0 {
                prod = prod.product(&st[k].power(e as u32))?.minimized();
            }
        }
        gens.extend(prod.generators().iter().cloned());
    }
    Ok(Ideal::new(ring, gens).standard())
}

/// `D^{≤a-i}(I)|_{x_p = 0}` for `i = 1..=a`, computed in the hyperplane
/// ring from the `x_p`-coefficients of the generators.
pub fn restricted_stages(i: &Ideal, a: u32, pivot: usize, flags: &[bool], target: &Ring) -> Vec<Ideal> {
    let mut sub_flags = flags.to_vec();
    sub_flags.remove(pivot);
    // coefficient ideals per power of x_p
    let coefs: Vec<Ideal> = (0..a)
        .map(|t| {
            let gens = i
                .generators()
                .iter()
                .map(|g| g.coefficient_of_power(pivot, t).restrict_zero(pivot, target))
                .collect();
            Ideal::new(target, gens)
        })
        .collect();
    let max_d = a.saturating_sub(1);
    let mut derived: Vec<Vec<Ideal>> = Vec::with_capacity(a as usize);
    for c in &coefs {
        let mut row = Vec::with_capacity(max_d as usize + 1);
        let mut cur = c.standard();
        row.push(cur.clone());
        for _ in 0..max_d {
            cur = crate::derivations::derivative_step(&cur, &sub_flags);
            row.push(cur.clone());
        }
        derived.push(row);
    }
    (1..=a)
        .map(|w| {
            let m = a - w;
            let mut gens = Vec::new();
            for t in 0..=m {
                gens.extend(derived[t as usize][(m - t) as usize].generators().iter().cloned());
            }
            Ideal::new(target, gens).standard()
        })
        .collect()
}

/// `C(I, a)|_{x_p = 0}` in the hyperplane ring.
pub fn restricted_coefficient_ideal(
    i: &Ideal,
    a: u32,
    pivot: usize,
    flags: &[bool],
    target: &Ring,
    cap: u32,
) -> Result<Ideal> {
    if a > cap {
        return Err(Error::OrderCapExceeded { order: a, cap });
    }
    let st = restricted_stages(i, a, pivot, flags, target);
    let n: u64 = factorial(a as u64).try_into().map_err(|_| Error::OrderCapExceeded { order: a, cap })?;
    Ok(weighted_products(&st, n, target))
}

/// When the hyperplane has a single coordinate `z`, `C(I, a)|` is `(z^M)`
/// near the origin with `M = a! · min_i ν_i / i`, `ν_i` the `z`-order of the
/// `i`-th restricted stage. Returns `M / (a-1)!`, or `None` when the
/// restriction vanishes. `log_z` says whether `z` is a divisor coordinate.
pub fn one_variable_scaled_exponent(i: &Ideal, a: u32, pivot: usize, log_z: bool) -> Option<Rat> {
    // ord_z of coef_{x^t}(g)|_{x=0}, for each generator and t < a
    let mut ords: Vec<(u32, u64)> = Vec::new();
    for g in i.generators() {
        let mut by_t: alloc::collections::BTreeMap<u32, u64> = alloc::collections::BTreeMap::new();
        for (m, _) in g.terms() {
            let t = m.exps()[pivot];
            if t >= a {
                continue;
            }
            let z: u64 = m.exps().iter().enumerate().filter(|(k, _)| *k != pivot).map(|(_, e)| *e as u64).sum();
            by_t.entry(t).and_modify(|v| *v = (*v).min(z)).or_insert(z);
        }
        ords.extend(by_t);
    }
    let mut best: Option<Rat> = None;
    for w in 1..=a {
        let m = a - w;
        let nu = ords
            .iter()
            .filter(|(t, _)| *t <= m)
            .map(|&(t, o)| if log_z { o } else { o.saturating_sub((m - t) as u64) })
            .min();
        if let Some(nu) = nu {
            let r = Rat::new(nu as i64, w as i64);
            best = Some(match best {
                Some(b) if b <= r => b,
                _ => r,
            });
        }
    }
    best.map(|b| b * Rat::from_int(a as i64))
}

/// `M` itself, for small `a`.
pub fn one_variable_exponent(i: &Ideal, a: u32, pivot: usize, log_z: bool) -> Option<BigInt> {
    one_variable_scaled_exponent(i, a, pivot, log_z).map(|s| {
        let m = s * Rat::from_big(factorial(a as u64 - 1));
        m.numer().clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::restrict_ideal;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn ideal(ring: &Ring, src: &[&str]) -> Ideal {
        Ideal::new(ring, src.iter().map(|s| parse_poly(s, ring).unwrap()).collect())
    }

    fn chart(div: &[&str]) -> LogChart {
        LogChart::new("c", &["x", "y"], div).unwrap()
    }

    #[test]
    fn contacts() {
        let c = chart(&[]);
        let r = &c.ring;
        let mc = maximal_contact(&ideal(r, &["x^2 - y^3"]), &c, DerivationKind::Plain).unwrap();
        assert_eq!(mc.element, parse_poly("2*x", r).unwrap());
        assert_eq!(mc.pivot, 0);
        let mc = maximal_contact(&ideal(r, &["x"]), &c, DerivationKind::Plain).unwrap();
        assert_eq!(mc.element, parse_poly("x", r).unwrap());
        let l = chart(&["y"]);
        let mc = maximal_contact(&ideal(r, &["x^2 - y^3"]), &l, DerivationKind::Log).unwrap();
        assert_eq!(mc.element, parse_poly("2*x", r).unwrap());
        assert!(maximal_contact(&ideal(r, &["y^3"]), &l, DerivationKind::Log).is_err());
    }

    #[test]
    fn candidate_order_matches_enumeration() {
        // brute force: every α with |α| = a-1, sorted, first with a usable linear part
        let r = Ring::new(&["x", "y", "z"]);
        let i = ideal(&r, &["y^2*z + x^3", "x*y*z"]);
        let cands = contact_candidates(&i, 3, &[false, false, false]);
        let flags = [false; 3];
        let mut brute = Vec::new();
        for (j, g) in i.generators().iter().enumerate() {
            for a0 in 0..3u32 {
                for a1 in 0..3 - a0 {
                    let alpha = vec![a0, a1, 2 - a0 - a1];
                    let e = apply_multi(g, &alpha, &flags);
                    if (0..3).any(|k| !e.linear_coefficient(k).is_zero()) {
                        brute.push((j, alpha));
                    }
                }
            }
        }
        let got: Vec<(usize, Vec<u32>)> = cands.iter().map(|c| (c.generator, c.multi_index.clone())).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn cusp_coefficient_ideals() {
        let c = chart(&[]);
        let r = &c.ring;
        let i = ideal(r, &["x^2 - y^3"]);
        let want = ideal(r, &["x^2", "x*y^2", "y^3"]);
        assert!(coefficient_ideal(&i, 2, DerivationKind::Plain, &c).unwrap().equals(&want));
        assert!(coefficient_ideal_by_covers(&i, 2, DerivationKind::Plain, &c).unwrap().equals(&want));
        let l = chart(&["y"]);
        let log = coefficient_ideal(&i, 2, DerivationKind::Log, &l).unwrap();
        assert!(log.equals(&ideal(r, &["x^2", "y^3"])));
        let h = Ring::new(&["y"]);
        assert!(restrict_ideal(&log, 0, &h).equals(&ideal(&h, &["y^3"])));
        assert!(coefficient_ideal(&ideal(r, &["x + y^2"]), 1, DerivationKind::Plain, &c)
            .unwrap()
            .equals(&ideal(r, &["x + y^2"])));
        assert!(matches!(coefficient_ideal(&i, 3, DerivationKind::Plain, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn one_variable_shortcut() {
        let c = chart(&[]);
        let r = &c.ring;
        let i = ideal(r, &["x^2 - y^3"]);
        assert_eq!(one_variable_exponent(&i, 2, 0, false), Some(BigInt::from(3)));
        assert_eq!(one_variable_exponent(&i, 2, 0, true), Some(BigInt::from(3)));
        assert_eq!(one_variable_exponent(&ideal(r, &["x^2"]), 2, 0, false), None);
    }

    fn arb_ideal() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec(((0u32..4).prop_flat_map(|a| (Just(a), 0u32..4)).prop_map(|(a, b)| vec![a, b]), -3i64..4), 1..4)
            .prop_map(|v| v.into_iter().map(|(e, c)| (e, if c == 0 { 1 } else { c })).collect())
    }

    fn build(r: &Ring, terms: &[(Vec<u32>, i64)], extra: &str) -> Ideal {
        let f = Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial(e.clone()), Rat::from_int(*c))));
        let g = parse_poly(extra, r).unwrap();
        Ideal::new(r, vec![f.add(&g)])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn dp_matches_covers_and_restriction(terms in arb_ideal(), log in any::<bool>()) {
            let c = if log { chart(&["y"]) } else { chart(&[]) };
            let kind = if log { DerivationKind::Log } else { DerivationKind::Plain };
            let r = c.ring.clone();
            // force a usable maximal contact x
            let i = build(&r, &terms, "x^2").standard();
            let a = match order_at(&i, &c, kind).unwrap() { Order::Finite(a) if (1..=3).contains(&a) => a, _ => return Ok(()) };
            let dp = coefficient_ideal(&i, a, kind, &c).unwrap();
            let cov = coefficient_ideal_by_covers(&i, a, kind, &c).unwrap();
            prop_assert!(dp.equals(&cov));
            // I^{(a-1)!} ⊆ C(I, a)
            let k: u32 = factorial(a as u64 - 1).try_into().unwrap();
            prop_assert!(dp.contains_ideal(&i.power(k)));
            let h = Ring::new(&["y"]);
            let flags = log_flags(&c, kind);
            let direct = restricted_coefficient_ideal(&i, a, 0, &flags, &h, DEFAULT_ORDER_CAP).unwrap();
            prop_assert!(direct.equals(&restrict_ideal(&dp, 0, &h)));
            let m = one_variable_exponent(&i, a, 0, log);
            let want = restrict_ideal(&dp, 0, &h).order_at_origin().map(BigInt::from);
            prop_assert_eq!(m, want);
        }
    }
}
