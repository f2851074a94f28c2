//! Derivative ideals, orders and monomial saturation.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chart::LogChart;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Polynomial};

/// Which derivations generate the derivative ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationKind {
    /// `∂/∂x_i` for every variable.
    Plain,
    /// `∂/∂x_i` off the divisor, `x_i ∂/∂x_i` on it.
    Log,
}

/// Order of an ideal: a natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(a) => Some(a),
            Order::Infinite => None,
        }
    }
}

/// One basic derivation applied to `f`.
pub fn apply_basic(f: &Polynomial, var: usize, log: bool) -> Polynomial {
    if log {
        f.log_derivative(var)
    } else {
        f.derivative(var)
    }
}

/// For each variable, whether its basic derivation is logarithmic.
pub fn log_flags(chart: &LogChart, kind: DerivationKind) -> Vec<bool> {
    match kind {
        DerivationKind::Plain => alloc::vec![false; chart.nvars()],
        DerivationKind::Log => chart.divisor_mask().to_vec(),
    }
}

/// Apply `θ^α` (basic derivations, one exponent per variable).
pub fn apply_multi(f: &Polynomial, alpha: &[u32], flags: &[bool]) -> Polynomial {
    let mut g = f.clone();
    for (i, &k) in alpha.iter().enumerate() {
        for _ in 0..k {
            if g.is_zero() {
                return g;
            }
            g = apply_basic(&g, i, flags[i]);
        }
    }
    g
}

/// One application of `D^{≤1}` to a generator list, re-minimalized.
pub fn derivative_step(i: &Ideal, flags: &[bool]) -> Ideal {
    let ring = i.ring().clone();
    let mut gens: Vec<Polynomial> = i.generators().to_vec();
    for g in i.generators() {
        for (v, &log) in flags.iter().enumerate() {
            let d = apply_basic(g, v, log);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::new(&ring, gens).standard()
}

/// `D^{≤a}(I)`.
pub fn derivative_ideal(i: &Ideal, a: u32, kind: DerivationKind, chart: &LogChart) -> Ideal {
    derivative_ideal_flags(i, a, &log_flags(chart, kind))
}

pub fn derivative_ideal_flags(i: &Ideal, a: u32, flags: &[bool]) -> Ideal {
    let mut cur = i.standard();
    for _ in 0..a {
        if cur.is_trivial() {
            break;
        }
        cur = derivative_step(&cur, flags);
    }
    cur
}

/// Order at the origin, computed from generators.
///
/// Plain: least degree of a term. Log: least degree of a term free of
/// divisor variables, infinite when no such term exists.
pub fn order_at_origin(i: &Ideal, flags: &[bool]) -> Order {
    let mut best: Option<u64> = None;
    for g in i.generators() {
        for (m, _) in g.terms() {
            if m.exps().iter().zip(flags).any(|(e, l)| *l && *e > 0) {
                continue;
            }
            let d = m.degree();
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    match best {
        Some(d) => Order::Finite(d as u32),
        None => Order::Infinite,
    }
}

/// Order of `I` at the chart's base point.
pub fn order_at(i: &Ideal, chart: &LogChart, kind: DerivationKind) -> Result<Order> {
    if i.is_zero() {
        return Ok(Order::Infinite);
    }
    let moved = if chart.is_at_origin() { i.clone() } else { i.translate(&chart.base_point)? };
    Ok(order_at_origin(&moved, &log_flags(chart, kind)))
}

/// The largest order attained anywhere, over the algebraic closure.
pub fn max_order(i: &Ideal, chart: &LogChart, kind: DerivationKind) -> Order {
    if i.is_zero() {
        return Order::Infinite;
    }
    if kind == DerivationKind::Log && !monomial_saturation(i, chart).is_trivial() {
        return Order::Infinite;
    }
    let flags = log_flags(chart, kind);
    let mut cur = i.standard();
    let mut a = 0;
    while !cur.is_trivial() {
        a += 1;
        cur = derivative_step(&cur, &flags);
    }
    Order::Finite(a)
}

/// The divisor monomials `x_D^β` of every term of every generator.
///
/// This is the stable value of the log derivative chain: each divisor
/// multidegree component of a generator lies in the chain (the Euler
/// operators separate them), and plain derivatives in the remaining
/// variables reduce each component to its monomial.
pub fn monomial_saturation(i: &Ideal, chart: &LogChart) -> Ideal {
    let ring = i.ring();
    let mask = chart.divisor_mask();
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    for g in i.generators() {
        for (m, _) in g.terms() {
            let e: Vec<u32> = m.exps().iter().zip(mask).map(|(e, d)| if *d { *e } else { 0 }).collect();
            set.insert(Monomial(e));
        }
    }
    let gens: Vec<Monomial> = minimal_monomials(set.into_iter().collect());
    Ideal::new(ring, gens.into_iter().map(|m| Polynomial::term(ring, m, crate::rat::Rat::one())).collect())
}

/// The saturation by literally iterating the chain to stability.
pub fn monomial_saturation_by_chain(i: &Ideal, chart: &LogChart) -> Result<Ideal> {
    let flags = log_flags(chart, DerivationKind::Log);
    let deg = i.generators().iter().map(|g| g.total_degree()).max().unwrap_or(0);
    let cap = chart.nvars() as u64 * deg.max(1) + 1;
    let mut cur = i.standard();
    for _ in 0..cap {
        let next = derivative_step(&cur, &flags);
        if next.equals(&cur) {
            if !next.is_trivial() && !next.is_monomial() {
                return Err(Error::MonomialityViolated(next.to_string()));
            }
            return Ok(next);
        }
        cur = next;
    }
    Err(Error::Internal("monomial saturation did not stabilize".to_string()))
}

/// Minimal generators of a monomial ideal, sorted.
pub fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::Ring;
    use proptest::prelude::*;

    fn ideal(ring: &Ring, src: &[&str]) -> Ideal {
        Ideal::new(ring, src.iter().map(|s| parse_poly(s, ring).unwrap()).collect())
    }

    fn chart(div: &[&str]) -> LogChart {
        LogChart::new("c", &["x", "y"], div).unwrap()
    }

    #[test]
    fn derivative_ideals() {
        let c = chart(&[]);
        let r = &c.ring;
        let i = ideal(r, &["x^2 - y^3"]);
        assert!(derivative_ideal(&i, 1, DerivationKind::Plain, &c).equals(&ideal(r, &["x", "y^2"])));
        let l = chart(&["y"]);
        assert!(derivative_ideal(&i, 1, DerivationKind::Log, &l).equals(&ideal(r, &["x", "y^3"])));
        assert!(derivative_ideal(&i, 0, DerivationKind::Plain, &c).equals(&i));
    }

    #[test]
    fn orders() {
        let c = chart(&[]);
        let r = &c.ring;
        assert_eq!(order_at(&ideal(r, &["x^2 - y^3"]), &c, DerivationKind::Plain).unwrap(), Order::Finite(2));
        let l = chart(&["y"]);
        assert_eq!(order_at(&ideal(r, &["y^3"]), &l, DerivationKind::Log).unwrap(), Order::Infinite);
        assert_eq!(order_at(&ideal(r, &["x"]), &c, DerivationKind::Plain).unwrap(), Order::Finite(1));
        assert_eq!(order_at(&Ideal::zero(r), &c, DerivationKind::Plain).unwrap(), Order::Infinite);
        assert_eq!(max_order(&ideal(r, &["x*y"]), &c, DerivationKind::Plain), Order::Finite(2));
        assert_eq!(max_order(&ideal(r, &["x"]), &c, DerivationKind::Plain), Order::Finite(1));
        let xy = chart(&["x", "y"]);
        assert_eq!(max_order(&ideal(r, &["x*y"]), &xy, DerivationKind::Log), Order::Infinite);
        let moved = c.with_base_point(alloc::vec![crate::rat::Rat::one(), crate::rat::Rat::one()]);
        assert_eq!(order_at(&ideal(r, &["x^2 - y^3"]), &moved, DerivationKind::Plain).unwrap(), Order::Finite(1));
    }

    #[test]
    fn saturations() {
        let l = chart(&["y"]);
        let r = &l.ring;
        let cases: [(&LogChart, &str, &str); 3] =
            [(&l, "x^2*y^3", "y^3"), (&l, "x", "1"), (&chart(&["x", "y"]), "x^2*y^3", "x^2*y^3")];
        for (c, src, want) in cases {
            let i = ideal(r, &[src]);
            let m = monomial_saturation(&i, c);
            assert!(m.equals(&ideal(r, &[want])), "{src}");
            assert!(monomial_saturation_by_chain(&i, c).unwrap().equals(&m));
        }
    }

    fn arb_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..4, 0u32..4), -3i64..4), 1..4).prop_map(move |ts| {
            Polynomial::from_terms(
                &ring,
                ts.into_iter().map(|((a, b), c)| (Monomial(alloc::vec![a, b]), crate::rat::Rat::from_int(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn chain_monotone_and_composes(f in arb_poly(Ring::new(&["x", "y"])), g in arb_poly(Ring::new(&["x", "y"]))) {
            let c = chart(&["y"]);
            let i = Ideal::new(&c.ring, alloc::vec![f, g]);
            for kind in [DerivationKind::Plain, DerivationKind::Log] {
                let d1 = derivative_ideal(&i, 1, kind, &c);
                let d2 = derivative_ideal(&i, 2, kind, &c);
                prop_assert!(d2.contains_ideal(&d1));
                prop_assert!(d1.contains_ideal(&i));
                prop_assert!(derivative_ideal(&d1, 1, kind, &c).equals(&d2));
            }
            let plain = derivative_ideal(&i, 1, DerivationKind::Plain, &c);
            let log = derivative_ideal(&i, 1, DerivationKind::Log, &c);
            prop_assert!(plain.contains_ideal(&log));
        }

        #[test]
        fn saturation_formula_matches_chain(f in arb_poly(Ring::new(&["x", "y"]))) {
            let c = chart(&["y"]);
            let i = Ideal::principal(f);
            prop_assert!(monomial_saturation(&i, &c).equals(&monomial_saturation_by_chain(&i, &c).unwrap()));
        }

        #[test]
        fn dummy_variable_leaves_orders(f in arb_poly(Ring::new(&["x", "y"]))) {
            prop_assume!(!f.is_zero());
            let c = chart(&["y"]);
            let big = c.with_dummy("z");
            let i = Ideal::principal(f);
            let j = i.embed(&big.ring).unwrap();
            for kind in [DerivationKind::Plain, DerivationKind::Log] {
                prop_assert_eq!(order_at(&i, &c, kind).unwrap(), order_at(&j, &big, kind).unwrap());
                prop_assert_eq!(max_order(&i, &c, kind), max_order(&j, &big, kind));
            }
        }
    }
}
