//! Seeded property checks runnable from the command line.

use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wres_core::chart::LogChart;
use wres_core::derivations::{derivative_ideal, monomial_saturation, monomial_saturation_by_chain, DerivationKind};
use wres_core::driver::{run, Mode};
use wres_core::invariants::{compare, inv_at, loginv_star_at, InvariantEntry, InvariantVector};
use wres_core::{parse_poly, Ideal, Monomial, Polynomial, Rat, Ring};

use crate::corpus::CORPUS;

pub struct Outcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

fn random_poly(rng: &mut StdRng, ring: &Ring, max_exp: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    let ts: Vec<(Monomial, Rat)> = (0..rng.gen_range(1..=terms))
        .map(|_| (Monomial((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()), Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))))
        .collect();
    Polynomial::from_terms(ring, ts)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn parse_print(rng: &mut StdRng) -> Result<(), String> {
    let ring = Ring::new(&["x", "y", "z"]);
    for _ in 0..200 {
        let f = random_poly(rng, &ring, 4, 5);
        let s = f.to_string();
        let g = parse_poly(&s, &ring).map_err(|e| format!("{s}: {e}"))?;
        ensure(g == f && g.to_string() == s, || format!("{s} reparsed as {g}"))?;
    }
    Ok(())
}

fn membership(rng: &mut StdRng) -> Result<(), String> {
    let ring = Ring::new(&["x", "y"]);
    for _ in 0..40 {
        let f = random_poly(rng, &ring, 3, 3);
        let g = random_poly(rng, &ring, 3, 3);
        let h = random_poly(rng, &ring, 2, 3);
        let i = Ideal::new(&ring, vec![f.clone(), g.clone()]).standard();
        let m = f.mul(&h).add(&g);
        ensure(i.contains(&m), || format!("{m} not in ({f}, {g})"))?;
        let nf = i.normal_form(&h).map_err(|e| e.to_string())?;
        ensure(i.normal_form(&nf).map_err(|e| e.to_string())? == nf, || format!("normal form of {h} not idempotent"))?;
    }
    Ok(())
}

fn derivative_chains(rng: &mut StdRng) -> Result<(), String> {
    let c = LogChart::new("c", &["x", "y"], &["y"]).map_err(|e| e.to_string())?;
    for _ in 0..30 {
        let i = Ideal::principal(random_poly(rng, &c.ring, 4, 4));
        for kind in [DerivationKind::Plain, DerivationKind::Log] {
            let d1 = derivative_ideal(&i, 1, kind, &c);
            let d2 = derivative_ideal(&i, 2, kind, &c);
            ensure(d1.contains_ideal(&i) && d2.contains_ideal(&d1), || format!("chain of {i} not increasing"))?;
            ensure(derivative_ideal(&d1, 1, kind, &c).equals(&d2), || format!("chain of {i} does not compose"))?;
        }
        let plain = derivative_ideal(&i, 1, DerivationKind::Plain, &c);
        ensure(plain.contains_ideal(&derivative_ideal(&i, 1, DerivationKind::Log, &c)), || format!("log chain of {i} escapes"))?;
        let sat = monomial_saturation(&i, &c);
        let chain = monomial_saturation_by_chain(&i, &c).map_err(|e| e.to_string())?;
        ensure(sat.equals(&chain), || format!("saturation of {i}: {sat} vs {chain}"))?;
    }
    Ok(())
}

fn total_order(rng: &mut StdRng) -> Result<(), String> {
    let gen = |rng: &mut StdRng| {
        let k = rng.gen_range(0..4);
        InvariantVector {
            entries: (0..k)
                .map(|_| {
                    let v = Rat::new(rng.gen_range(1..6), rng.gen_range(1..3));
                    if rng.gen_bool(0.3) {
                        InvariantEntry::omega(v)
                    } else {
                        InvariantEntry::finite(v)
                    }
                })
                .collect(),
            trailing_infinity: rng.gen_bool(0.2),
        }
    };
    for _ in 0..300 {
        let (a, b, c) = (gen(rng), gen(rng), gen(rng));
        ensure(compare(&a, &b) == compare(&b, &a).reverse(), || format!("{a} vs {b} not antisymmetric"))?;
        if compare(&a, &b) != Ordering::Greater && compare(&b, &c) != Ordering::Greater {
            ensure(compare(&a, &c) != Ordering::Greater, || format!("{a} <= {b} <= {c} not transitive"))?;
        }
        ensure(InvariantVector::parse(&a.to_string()).as_ref() == Some(&a), || format!("{a} does not round-trip"))?;
    }
    Ok(())
}

fn functoriality(_: &mut StdRng) -> Result<(), String> {
    for e in CORPUS {
        let p = e.file("principalize").to_problem().map_err(|e| e.to_string())?;
        let Ok(base) = loginv_star_at(&p.ideal, &p.chart) else { continue };
        let big = p.chart.with_dummy("t");
        let j = p.ideal.embed(&big.ring).map_err(|e| e.to_string())?;
        let ext = loginv_star_at(&j, &big).map_err(|e| e.to_string())?;
        ensure(ext.vector == base.vector, || format!("{}: {} vs {}", e.name, base.vector, ext.vector))?;
        ensure(ext.center.describe() == base.center.describe(), || format!("{}: center moved", e.name))?;
    }
    Ok(())
}

fn scaling(_: &mut StdRng) -> Result<(), String> {
    for name in ["cusp", "tacnode", "a4"] {
        let e = crate::corpus::get(name).unwrap();
        let p = e.file("principalize").to_problem().map_err(|e| e.to_string())?;
        let base = inv_at(&p.ideal, &p.chart).map_err(|e| e.to_string())?.vector;
        let f = &p.ideal.generators()[0];
        let sq = inv_at(&Ideal::principal(f.pow(2)), &p.chart).map_err(|e| e.to_string())?.vector;
        ensure(sq == base.scaled(&Rat::from_int(2)), || format!("{name}: {sq} vs 2*{base}"))?;
    }
    Ok(())
}

fn descent(_: &mut StdRng) -> Result<(), String> {
    for e in CORPUS {
        for mode in [Mode::Principalize, Mode::Resolve] {
            let p = e.file(mode.as_str()).to_problem().map_err(|e| e.to_string())?;
            let t = run(&p).map_err(|err| format!("{} {}: {err}", e.name, mode.as_str()))?;
            ensure(t.failure().is_none(), || format!("{} {}: {:?}", e.name, mode.as_str(), t.failure()))?;
            for path in t.paths() {
                ensure(path.windows(2).all(|w| compare(&w[1], &w[0]) == Ordering::Less), || format!("{}: no descent", e.name))?;
            }
            ensure(t.nodes.iter().all(|n| n.giraud != Some(false) && n.factorization != Some(false)), || {
                format!("{}: transform check failed", e.name)
            })?;
        }
    }
    Ok(())
}

type Suite = fn(&mut StdRng) -> Result<(), String>;

pub const SUITES: &[(&str, Suite)] = &[
    ("parse-print", parse_print),
    ("groebner-membership", membership),
    ("derivative-chains", derivative_chains),
    ("invariant-order", total_order),
    ("functoriality", functoriality),
    ("scaling", scaling),
    ("descent", descent),
];

pub fn run_all(seed: u64) -> Vec<Outcome> {
    SUITES
        .iter()
        .map(|(name, f)| {
            let mut rng = StdRng::seed_from_u64(seed);
            Outcome { name, result: f(&mut rng) }
        })
        .collect()
}
