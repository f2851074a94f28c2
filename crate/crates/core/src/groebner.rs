//! Buchberger's algorithm with the product and chain criteria.
//!
//! Internally every monomial is mapped to an integer sort key that is a
//! linear image of its exponent vector, so that the chosen monomial order is
//! plain lexicographic comparison of keys and multiplication is key addition.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::rat::Rat;

type Key = Vec<i64>;

fn push_degrevlex(out: &mut Key, e: &[u32]) {
    out.push(e.iter().map(|&v| v as i64).sum());
    for &v in e.iter().rev() {
        out.push(-(v as i64));
    }
}

pub(crate) fn key_of(ord: MonomialOrder, e: &[u32]) -> Key {
    let mut k = Vec::with_capacity(e.len() + 2);
    match ord {
        MonomialOrder::DegRevLex => push_degrevlex(&mut k, e),
        MonomialOrder::Lex => k.extend(e.iter().map(|&v| v as i64)),
        MonomialOrder::Block(b) => {
            push_degrevlex(&mut k, &e[..b]);
            push_degrevlex(&mut k, &e[b..]);
        }
    }
    k
}

fn exps_of(ord: MonomialOrder, k: &[i64], n: usize) -> Vec<u32> {
    match ord {
        MonomialOrder::DegRevLex => (0..n).map(|i| (-k[n - i]) as u32).collect(),
        MonomialOrder::Lex => k.iter().map(|&v| v as u32).collect(),
        MonomialOrder::Block(b) => {
            let mut e: Vec<u32> = (0..b).map(|i| (-k[b - i]) as u32).collect();
            let off = b + 1;
            let m = n - b;
            e.extend((0..m).map(|i| (-k[off + m - i]) as u32));
            e
        }
    }
}

#[derive(Clone)]
struct KPoly {
    terms: BTreeMap<Key, Rat>,
}

impl KPoly {
    fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        KPoly { terms: p.terms().map(|(m, c)| (key_of(ord, m.exps()), c.clone())).collect() }
    }

    fn to_poly(&self, ring: &Ring, ord: MonomialOrder) -> Polynomial {
        let n = ring.nvars();
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(k, c)| (Monomial(exps_of(ord, k, n)), c.clone())),
        )
    }

    fn lead(&self) -> Option<(&Key, &Rat)> {
        self.terms.iter().next_back()
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.lead() {
            let inv = c.recip();
            if !inv.is_one() {
                for v in self.terms.values_mut() {
                    *v *= &inv;
                }
            }
        }
    }
}

struct Elem {
    poly: KPoly,
    lead_key: Key,
    lead_exp: Vec<u32>,
}

fn add_key(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_key(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `p -= c * x^shift * g` where `g` is monic; the lead term of the product is
/// assumed to cancel the lead term of `p` and is removed explicitly.
fn sub_multiple(p: &mut KPoly, c: &Rat, shift: &[i64], g: &KPoly) {
    let mut it = g.terms.iter().rev();
    if let Some((gk, _)) = it.next() {
        p.terms.remove(&add_key(gk, shift));
    }
    for (gk, gc) in it {
        let k = add_key(gk, shift);
        let delta = c * gc;
        match p.terms.get_mut(&k) {
            Some(v) => {
                *v -= &delta;
                if v.is_zero() {
                    p.terms.remove(&k);
                }
            }
            None => {
                p.terms.insert(k, -delta);
            }
        }
    }
}

/// Full reduction of `f` by `basis` (all monic).
fn reduce(mut f: KPoly, basis: &[Elem], ord: MonomialOrder, n: usize) -> KPoly {
    let mut rem = KPoly { terms: BTreeMap::new() };
    while let Some((lk, lc)) = f.terms.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let le = exps_of(ord, &lk, n);
        match basis.iter().find(|g| divides(&g.lead_exp, &le)) {
            Some(g) => {
                let shift = sub_key(&lk, &g.lead_key);
                sub_multiple(&mut f, &lc, &shift, &g.poly);
            }
            None => {
                f.terms.remove(&lk);
                rem.terms.insert(lk, lc);
            }
        }
    }
    rem
}

/// Reduce only until the leading term is irreducible.
fn top_reduce(mut f: KPoly, basis: &[Elem], ord: MonomialOrder, n: usize) -> KPoly {
    while let Some((lk, lc)) = f.lead().map(|(k, c)| (k.clone(), c.clone())) {
        let le = exps_of(ord, &lk, n);
        match basis.iter().find(|g| divides(&g.lead_exp, &le)) {
            Some(g) => {
                let shift = sub_key(&lk, &g.lead_key);
                sub_multiple(&mut f, &lc, &shift, &g.poly);
            }
            None => break,
        }
    }
    f
}

fn spoly(a: &Elem, b: &Elem, ord: MonomialOrder) -> KPoly {
    let lcm: Vec<u32> = a.lead_exp.iter().zip(&b.lead_exp).map(|(x, y)| *x.max(y)).collect();
    let lk = key_of(ord, &lcm);
    let sa = sub_key(&lk, &a.lead_key);
    let sb = sub_key(&lk, &b.lead_key);
    let mut p = KPoly { terms: BTreeMap::new() };
    for (k, c) in &a.poly.terms {
        p.terms.insert(add_key(k, &sa), c.clone());
    }
    sub_multiple(&mut p, &Rat::one(), &sb, &b.poly);
    // the lead of `a` shifted is the lcm term, cancelled by `b`'s lead
    p
}

fn make_elem(mut p: KPoly, ord: MonomialOrder, n: usize) -> Elem {
    p.make_monic();
    let lead_key = p.lead().unwrap().0.clone();
    let lead_exp = exps_of(ord, &lead_key, n);
    Elem { poly: p, lead_key, lead_exp }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`.
///
/// The result is monic, inter-reduced and sorted by increasing leading
/// monomial. The zero ideal yields an empty basis.
pub fn groebner_basis(gens: &[Polynomial], ring: &Ring, ord: MonomialOrder) -> Vec<Polynomial> {
    let n = ring.nvars();
    let mut basis: Vec<Elem> = Vec::new();
    let mut pending: BTreeSet<(Key, usize, usize)> = BTreeSet::new();
    let mut pending_idx: BTreeSet<(usize, usize)> = BTreeSet::new();

    let insert = |p: KPoly,
                  basis: &mut Vec<Elem>,
                  pending: &mut BTreeSet<(Key, usize, usize)>,
                  pending_idx: &mut BTreeSet<(usize, usize)>| {
        let e = make_elem(p, ord, n);
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm: Vec<u32> = g.lead_exp.iter().zip(&e.lead_exp).map(|(x, y)| *x.max(y)).collect();
            pending.insert((key_of(ord, &lcm), j, i));
            pending_idx.insert((i, j));
        }
        basis.push(e);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let f = reduce(KPoly::from_poly(g, ord), &basis, ord, n);
        if f.terms.is_empty() {
            continue;
        }
        insert(f, &mut basis, &mut pending, &mut pending_idx);
        if basis.last().unwrap().lead_exp.iter().all(|&e| e == 0) {
            return alloc::vec![Polynomial::one(ring)];
        }
    }

    while let Some(item) = pending.iter().next().cloned() {
        pending.remove(&item);
        let (lk, j, i) = item;
        pending_idx.remove(&(i, j));
        let (a, b) = (&basis[i], &basis[j]);
        if a.lead_exp.iter().zip(&b.lead_exp).all(|(x, y)| *x == 0 || *y == 0) {
            continue;
        }
        let lcm = exps_of(ord, &lk, n);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead_exp, &lcm)
                && !pending_idx.contains(&(i.min(k), i.max(k)))
                && !pending_idx.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(a, b, ord);
        let r = top_reduce(s, &basis, ord, n);
        if r.terms.is_empty() {
            continue;
        }
        let r = reduce(r, &basis, ord, n);
        insert(r, &mut basis, &mut pending, &mut pending_idx);
        if basis.last().unwrap().lead_exp.iter().all(|&e| e == 0) {
            return alloc::vec![Polynomial::one(ring)];
        }
    }

    // minimalize then inter-reduce
    let mut keep: Vec<Elem> = Vec::new();
    basis.sort_by(|a, b| a.lead_key.cmp(&b.lead_key));
    for e in basis {
        if !keep.iter().any(|k| divides(&k.lead_exp, &e.lead_exp)) {
            keep.push(e);
        }
    }
    let mut out: Vec<Elem> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let lead_key = keep[i].lead_key.clone();
        let lead_exp = keep[i].lead_exp.clone();
        let mut tail = keep[i].poly.clone();
        let lc = tail.terms.remove(&lead_key).unwrap();
        let others: Vec<&Elem> = keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, e)| e).collect();
        let tail = reduce_refs(tail, &others, ord, n);
        let mut p = tail;
        p.terms.insert(lead_key.clone(), lc);
        p.make_monic();
        out.push(Elem { poly: p, lead_key, lead_exp });
    }
    out.into_iter().map(|e| e.poly.to_poly(ring, ord)).collect()
}

fn reduce_refs(mut f: KPoly, basis: &[&Elem], ord: MonomialOrder, n: usize) -> KPoly {
    let mut rem = KPoly { terms: BTreeMap::new() };
    while let Some((lk, lc)) = f.terms.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let le = exps_of(ord, &lk, n);
        match basis.iter().find(|g| divides(&g.lead_exp, &le)) {
            Some(g) => {
                let shift = sub_key(&lk, &g.lead_key);
                sub_multiple(&mut f, &lc, &shift, &g.poly);
            }
            None => {
                f.terms.remove(&lk);
                rem.terms.insert(lk, lc);
            }
        }
    }
    rem
}

/// Remainder of `f` modulo a Gröbner basis computed under `ord`.
pub fn reduce_by_basis(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let ring = f.ring();
    let n = ring.nvars();
    let elems: Vec<Elem> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_elem(KPoly::from_poly(g, ord), ord, n))
        .collect();
    reduce(KPoly::from_poly(f, ord), &elems, ord, n).to_poly(ring, ord)
}

/// Leading monomial of `f` under `ord`.
pub fn leading_monomial(f: &Polynomial, ord: MonomialOrder) -> Option<Monomial> {
    if ord == MonomialOrder::DegRevLex {
        return f.leading_term().map(|(m, _)| m.clone());
    }
    f.terms().map(|(m, _)| m).max_by(|a, b| ord.cmp(a, b)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(s, ring).unwrap()).collect()
    }

    #[test]
    fn key_round_trip() {
        let e = [3u32, 0, 2, 5];
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Block(1), MonomialOrder::Block(3)] {
            assert_eq!(exps_of(ord, &key_of(ord, &e), 4), e.to_vec());
        }
    }

    #[test]
    fn cusp_with_x() {
        let r = Ring::new(&["x", "y"]);
        let g = groebner_basis(&polys(&r, &["x^2 - y^3", "x"]), &r, MonomialOrder::DegRevLex);
        assert_eq!(g, polys(&r, &["x", "y^3"]));
    }

    #[test]
    fn unit_and_zero() {
        let r = Ring::new(&["x"]);
        assert_eq!(groebner_basis(&polys(&r, &["x", "x + 1"]), &r, MonomialOrder::DegRevLex), polys(&r, &["1"]));
        assert!(groebner_basis(&[Polynomial::zero(&r)], &r, MonomialOrder::DegRevLex).is_empty());
    }

    #[test]
    fn lex_elimination() {
        // twisted cubic: eliminating t from x - t, y - t^2, z - t^3
        let r = Ring::new(&["t", "x", "y", "z"]);
        let g = groebner_basis(&polys(&r, &["x - t", "y - t^2", "z - t^3"]), &r, MonomialOrder::Block(1));
        let elim: Vec<&Polynomial> = g.iter().filter(|p| !p.involves(0)).collect();
        assert!(!elim.is_empty());
        for p in elim {
            let v = p.evaluate(&[Rat::zero(), Rat::from_int(2), Rat::from_int(4), Rat::from_int(8)]).unwrap();
            assert!(v.is_zero());
        }
    }
}
