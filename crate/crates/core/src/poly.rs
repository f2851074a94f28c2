//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! degree-reverse-lexicographic order. Iteration from the back therefore
//! yields terms in canonical printing order (largest first).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// An ordered list of variable names shared by every polynomial of a chart.
#[derive(Clone)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring { names: Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()) }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same ring with variable `i` removed.
    pub fn without(&self, i: usize) -> Ring {
        let mut names: Vec<String> = (*self.names).clone();
        names.remove(i);
        Ring { names: Arc::new(names) }
    }

    /// Same ring with a new variable appended at the end.
    pub fn with_appended(&self, name: &str) -> Ring {
        let mut names: Vec<String> = (*self.names).clone();
        names.push(name.to_string());
        Ring { names: Arc::new(names) }
    }

    /// Same ring with a new variable inserted at the front.
    pub fn with_prepended(&self, name: &str) -> Ring {
        let mut names: Vec<String> = Vec::with_capacity(self.nvars() + 1);
        names.push(name.to_string());
        names.extend(self.names.iter().cloned());
        Ring { names: Arc::new(names) }
    }

    /// Same ring with variable `i` renamed.
    pub fn with_renamed(&self, i: usize, name: &str) -> Ring {
        let mut names: Vec<String> = (*self.names).clone();
        names[i] = name.to_string();
        Ring { names: Arc::new(names) }
    }

    /// A variable name not already used in this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut cand = stem.to_string();
        while self.index_of(&cand).is_some() {
            cand.push('_');
        }
        cand
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Exponent vector, one entry per ring variable.
///
/// `Ord` is degrevlex with `x_0 > x_1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when only variables flagged in `mask` occur.
    pub fn supported_in(&self, mask: &[bool]) -> bool {
        self.0.iter().zip(mask).all(|(e, m)| *e == 0 || *m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::DegRevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Degrevlex on the first `k` variables, ties broken by degrevlex on the rest.
    /// Eliminates the first block.
    Block(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block(k) => {
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// A polynomial with exact rational coefficients in a named ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rat) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Rat::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::term(ring, Monomial::var(ring.nvars(), i), Rat::one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Rat) -> Self {
        debug_assert_eq!(m.len(), ring.nvars());
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(ring: &Ring, exps: &[u32]) -> Self {
        Polynomial::term(ring, Monomial(exps.to_vec()), Rat::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(ring: &Ring, terms: I) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Coefficient of `x_i` in the linear part at the origin.
    pub fn linear_coefficient(&self, i: usize) -> Rat {
        self.coefficient(&Monomial::var(self.nvars(), i))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        debug_assert!(self.ring == other.ring, "ring mismatch: {:?} vs {:?}", self.ring, other.ring);
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), &-c);
        }
        r
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Rat::from_int(-1))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_truncated(other, None)
    }

    /// Product, dropping every term of total degree above `bound`.
    pub fn mul_truncated(&self, other: &Polynomial, bound: Option<u64>) -> Polynomial {
        self.check_ring(other);
        let mut r = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(b) = bound {
                    if ma.degree() + mb.degree() > b {
                        continue;
                    }
                }
                r.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    /// Drop terms of total degree above `bound`.
    pub fn truncate(&self, bound: u64) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `d/dx_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut r = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                r.add_term(m2, &(c * &Rat::from_int(e as i64)));
            }
        }
        r
    }

    /// `x_i d/dx_i`.
    pub fn log_derivative(&self, i: usize) -> Polynomial {
        let mut r = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                r.add_term(m.clone(), &(c * &Rat::from_int(e as i64)));
            }
        }
        r
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(point) {
                if *e > 0 {
                    t *= &x.pow(*e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// `f(x + p)`.
    pub fn translate(&self, point: &[Rat]) -> Result<Polynomial> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: point.len() });
        }
        if point.iter().all(|p| p.is_zero()) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial> = (0..self.nvars())
            .map(|i| Polynomial::var(&self.ring, i).add(&Polynomial::constant(&self.ring, point[i].clone())))
            .collect();
        self.substitute(&images, &self.ring)
    }

    /// Least total degree of the Taylor expansion at `point`; `None` means
    /// infinite order (the zero polynomial).
    pub fn vanishing_order_at(&self, point: &[Rat]) -> Result<Option<u64>> {
        Ok(self.translate(point)?.lowest_degree())
    }

    /// Ring homomorphism image: variable `i` goes to `images[i]` in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        self.substitute_truncated(images, target, None)
    }

    /// Substitution dropping terms above total degree `bound` along the way.
    pub fn substitute_truncated(
        &self,
        images: &[Polynomial],
        target: &Ring,
        bound: Option<u64>,
    ) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: images.len() });
        }
        if images.iter().any(|p| p.ring != *target) {
            return Err(Error::RingMismatch);
        }
        // power cache: powers[i][e]
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.nvars()];
        let mut r = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_truncated(&images[i], bound);
                    powers[i].push(next);
                }
                t = t.mul_truncated(&powers[i][e as usize], bound);
                if t.is_zero() {
                    break;
                }
            }
            r = r.add(&t);
        }
        Ok(r)
    }

    /// Move into a ring containing all of this ring's variable names.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<_>>()?;
        let n = target.nvars();
        let mut r = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] = k;
            }
            r.terms.insert(Monomial(e), c.clone());
        }
        Ok(r)
    }

    /// Set `x_i = 0` and drop the variable: result lives in `ring.without(i)`.
    pub fn restrict_zero(&self, i: usize, target: &Ring) -> Polynomial {
        debug_assert_eq!(target.nvars() + 1, self.nvars());
        let mut r = Polynomial::zero(target);
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                let mut e = m.0.clone();
                e.remove(i);
                r.terms.insert(Monomial(e), c.clone());
            }
        }
        r
    }

    /// The coefficient of `x_i^k`, as a polynomial not involving `x_i`.
    pub fn coefficient_of_power(&self, i: usize, k: u32) -> Polynomial {
        let mut r = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut e = m.clone();
                e.0[i] = 0;
                r.terms.insert(e, c.clone());
            }
        }
        r
    }

    /// Componentwise minimum exponent over all terms restricted to `vars`.
    pub fn monomial_content(&self, mask: &[bool]) -> Monomial {
        let n = self.nvars();
        let mut g: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            let v: Vec<u32> = (0..n).map(|i| if mask[i] { m.0[i] } else { 0 }).collect();
            g = Some(match g {
                None => v,
                Some(old) => old.iter().zip(&v).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        Monomial(g.unwrap_or_else(|| vec![0; n]))
    }

    /// Exact division by a monomial, when every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        if !self.terms.keys().all(|k| m.divides(k)) {
            return None;
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.div(m), c.clone())).collect(),
        })
    }

    /// Scale so that the leading (degrevlex) coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Same coefficients reinterpreted in an equal-sized ring.
    pub fn with_ring(&self, ring: &Ring) -> Polynomial {
        debug_assert_eq!(ring.nvars(), self.nvars());
        Polynomial { ring: ring.clone(), terms: self.terms.clone() }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text rendering, e.g. `2*x^2*y - 3/5*z`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write_monomial(f, &self.ring, m)?;
            } else {
                write!(f, "{a}*")?;
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
