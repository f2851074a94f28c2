//! Finitely generated ideals with an optional cached Gröbner basis.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, leading_monomial, reduce_by_basis};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::rat::Rat;

#[derive(Clone, Debug)]
struct Basis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

/// An ideal of a polynomial ring. The zero ideal has no generators.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    basis: Option<Arc<Basis>>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, basis: None }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn principal(f: Polynomial) -> Self {
        let ring = f.ring().clone();
        Ideal::new(&ring, vec![f])
    }

    /// Ideal generated by the variables in `vars`.
    pub fn of_vars(ring: &Ring, vars: &[usize]) -> Self {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Same ideal with a reduced basis for `ord` cached. Idempotent.
    pub fn groebner(&self, ord: MonomialOrder) -> Ideal {
        if let Some(b) = &self.basis {
            if b.order == ord {
                return self.clone();
            }
        }
        let polys = groebner_basis(&self.gens, &self.ring, ord);
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), basis: Some(Arc::new(Basis { order: ord, polys })) }
    }

    /// Cache a degrevlex basis and use it as the generator list too.
    pub fn standard(&self) -> Ideal {
        let g = self.groebner(MonomialOrder::DegRevLex);
        let polys = g.basis.as_ref().unwrap().polys.clone();
        Ideal { ring: self.ring.clone(), gens: polys, basis: g.basis }
    }

    pub fn cached_basis(&self) -> Option<(&[Polynomial], MonomialOrder)> {
        self.basis.as_ref().map(|b| (b.polys.as_slice(), b.order))
    }

    /// The cached basis, or a freshly computed degrevlex one.
    pub fn basis(&self) -> (Vec<Polynomial>, MonomialOrder) {
        match &self.basis {
            Some(b) => (b.polys.clone(), b.order),
            None => (groebner_basis(&self.gens, &self.ring, MonomialOrder::DegRevLex), MonomialOrder::DegRevLex),
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let b = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        Ok(reduce_by_basis(f, &b.polys, b.order))
    }

    fn with_basis(&self) -> Ideal {
        if self.basis.is_some() {
            self.clone()
        } else {
            self.groebner(MonomialOrder::DegRevLex)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let g = self.with_basis();
        g.normal_form(f).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let g = self.with_basis();
        other.gens.iter().all(|f| g.normal_form(f).map(|r| r.is_zero()).unwrap_or(false))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// `1 ∈ I`.
    pub fn is_trivial(&self) -> bool {
        let (b, _) = self.basis();
        b.len() == 1 && b[0].is_constant()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).unwrap().minimized();
        }
        acc
    }

    /// Drop generators that repeat or are multiples of monomial generators
    /// already present. Cheap; does not change the ideal.
    pub fn minimized(&self) -> Ideal {
        let mut out: Vec<Polynomial> = Vec::new();
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| a.nterms().cmp(&b.nterms()).then_with(|| a.leading_term().map(|t| t.0).cmp(&b.leading_term().map(|t| t.0))));
        for g in gens {
            let g = g.monic();
            let redundant = out.iter().any(|o| {
                *o == g
                    || (o.is_monomial() && {
                        let m = o.leading_term().unwrap().0;
                        g.terms().all(|(t, _)| m.divides(t))
                    })
            });
            if !redundant {
                if g.is_monomial() {
                    let m = g.leading_term().unwrap().0.clone();
                    out.retain(|o| !o.terms().all(|(t, _)| m.divides(t)));
                }
                out.push(g);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// Leading monomials of the reduced standard basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let (b, ord) = self.basis();
        b.iter().filter_map(|p| leading_monomial(p, ord)).collect()
    }

    /// True iff the ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        let (b, _) = self.basis();
        b.iter().all(|p| p.is_monomial())
    }

    /// Krull dimension, read off the leading monomials.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_trivial() {
            return None;
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let mut best = 0;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let free: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            if lms.iter().all(|m| !m.supported_in(&free)) {
                best = size;
            }
        }
        Some(best)
    }

    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Result<Ideal> {
        let g = self.gens.iter().map(|f| f.substitute(images, target)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, g))
    }

    pub fn embed(&self, target: &Ring) -> Result<Ideal> {
        let g = self.gens.iter().map(|f| f.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, g))
    }

    pub fn translate(&self, point: &[Rat]) -> Result<Ideal> {
        let g = self.gens.iter().map(|f| f.translate(point)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn truncate(&self, bound: u64) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().map(|f| f.truncate(bound)).collect())
    }

    /// `I : x_i^∞`, by eliminating `t` from `I + (1 - t x_i)`.
    pub fn saturate_var(&self, i: usize) -> Ideal {
        let t = self.ring.fresh_name("t");
        let big = self.ring.with_prepended(&t);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| f.embed(&big).unwrap()).collect();
        let tx = Polynomial::var(&big, 0).mul(&Polynomial::var(&big, i + 1));
        gens.push(Polynomial::one(&big).sub(&tx));
        let b = groebner_basis(&gens, &big, MonomialOrder::Block(1));
        let keep: Vec<Polynomial> =
            b.into_iter().filter(|p| !p.involves(0)).map(|p| p.restrict_zero(0, &self.ring)).collect();
        Ideal::new(&self.ring, keep)
    }

    /// Least total degree among generators at the origin; `None` for zero.
    pub fn order_at_origin(&self) -> Option<u64> {
        self.gens.iter().filter_map(|g| g.lowest_degree()).min()
    }

    /// Evaluate every generator at `p`; true iff all vanish.
    pub fn vanishes_at(&self, p: &[Rat]) -> Result<bool> {
        for g in &self.gens {
            if !g.evaluate(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
