//! Seeded randomized property suites over the core algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use pfrees_core::groebner::{dimension, GroebnerBasis, IdealHandle};
use pfrees_core::resolution::{minimalize, schreyer_resolve, taylor_complex};
use pfrees_core::{ring_make, Budget, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const PROPERTY_SEED: u64 = 0x9E0B;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let t = (0..terms)
        .map(|_| {
            let mut e = vec![0u32; n];
            let d = rng.gen_range(0..=max_deg);
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            let c = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            (BigRational::from_integer(BigInt::from(c)), Monomial::new(ring, e))
        })
        .collect();
    Polynomial::from_terms(ring, t)
}

fn random_order(rng: &mut ChaCha8Rng, n: usize) -> MonomialOrder {
    let kind = [OrderKind::Lex, OrderKind::GrLex, OrderKind::GRevLex][rng.gen_range(0..3)];
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    MonomialOrder::with_priority(kind, p).unwrap()
}

fn random_system(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<Polynomial> {
    let k = rng.gen_range(1..=3);
    (0..k).map(|_| {
        let t = rng.gen_range(1..=3);
        random_poly(rng, ring, t, 2)
    }).filter(|p| !p.is_zero()).collect()
}

fn spoly(f: &Polynomial, g: &Polynomial, o: &MonomialOrder) -> Polynomial {
    let (cf, mf) = f.leading_under(o).unwrap().clone();
    let (cg, mg) = g.leading_under(o).unwrap().clone();
    let l = mf.lcm(&mg, f.ring());
    let a = f.mul_term(&cf.recip(), &l.div(&mf).unwrap());
    let b = g.mul_term(&cg.recip(), &l.div(&mg).unwrap());
    &a - &b
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, first: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn done(self) -> SuiteResult {
        SuiteResult { name: self.name, cases: self.cases, failures: self.failures, first_failure: self.first }
    }
}

type Out<T> = Result<T, pfrees_core::Error>;

/// Every S-polynomial of a computed basis reduces to zero.
pub fn spoly_closure(cases: usize, seed: u64, budget: &dyn Budget) -> Out<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_make(&["a", "b", "c"], 3, 0, 0)?;
    let mut t = Tally::new("s-polynomial closure");
    for _ in 0..cases {
        let fs = random_system(&mut rng, &ring);
        if fs.is_empty() {
            continue;
        }
        let o = random_order(&mut rng, 3);
        let gb = GroebnerBasis::compute(&ring, &fs, &o, budget)?;
        let ps = gb.polys();
        let mut ok = true;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                ok &= gb.normal_form(&spoly(&ps[i], &ps[j], &o))?.is_zero();
            }
        }
        ok &= fs.iter().map(|f| gb.normal_form(f)).collect::<Out<Vec<_>>>()?.iter().all(|r| r.is_zero());
        t.record(ok, || format!("{fs:?} under {o:?}"));
    }
    Ok(t.done())
}

/// `NF(NF(f)) = NF(f)`, and `f − NF(f)` lies in the ideal.
pub fn nf_idempotence(cases: usize, seed: u64, budget: &dyn Budget) -> Out<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_make(&["a", "b", "c"], 3, 0, 0)?;
    let mut t = Tally::new("normal form idempotence");
    for _ in 0..cases {
        let fs = random_system(&mut rng, &ring);
        if fs.is_empty() {
            continue;
        }
        let o = random_order(&mut rng, 3);
        let gb = GroebnerBasis::compute(&ring, &fs, &o, budget)?;
        let f = random_poly(&mut rng, &ring, 4, 3);
        let r = gb.normal_form(&f)?;
        let ok = gb.normal_form(&r)? == r && gb.contains(&(&f - &r))?;
        t.record(ok, || format!("{f} modulo {fs:?}"));
    }
    Ok(t.done())
}

/// The reduced basis does not depend on the order of the generators.
pub fn reduced_uniqueness(cases: usize, seed: u64, budget: &dyn Budget) -> Out<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_make(&["a", "b", "c"], 3, 0, 0)?;
    let mut t = Tally::new("reduced basis uniqueness");
    for _ in 0..cases {
        let mut fs = random_system(&mut rng, &ring);
        if fs.is_empty() {
            continue;
        }
        let o = random_order(&mut rng, 3);
        let a = GroebnerBasis::compute(&ring, &fs, &o, budget)?;
        fs.shuffle(&mut rng);
        let b = GroebnerBasis::compute(&ring, &fs, &o, budget)?;
        t.record(a.polys() == b.polys(), || format!("{fs:?} under {o:?}"));
    }
    Ok(t.done())
}

fn random_monomials(rng: &mut ChaCha8Rng, ring: &Ring, k: usize, max_deg: u32) -> Vec<Polynomial> {
    (0..k)
        .map(|_| {
            let mut e = vec![0u32; ring.nvars()];
            for _ in 0..rng.gen_range(1..=max_deg) {
                e[rng.gen_range(0..ring.nvars())] += 1;
            }
            Polynomial::monomial(ring, BigRational::from_integer(BigInt::from(1)), Monomial::new(ring, e))
        })
        .collect()
}

/// Minimalization preserves the graded Euler characteristic, on Taylor
/// complexes and on iterated-syzygy resolutions.
pub fn euler_preservation(cases: usize, seed: u64, budget: &dyn Budget) -> Out<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_make(&["a", "b", "c", "d"], 4, 0, 0)?;
    let mut t = Tally::new("euler characteristic under minimalization");
    for k in 0..cases {
        let m = rng.gen_range(1..=4);
        let gens = random_monomials(&mut rng, &ring, m, 3);
        let c = if k % 2 == 0 {
            taylor_complex(&gens)?
        } else {
            schreyer_resolve(&IdealHandle::new(&ring, gens.clone())?, 5, budget)?
        };
        let m = minimalize(&c);
        let ok = c.euler_characteristic() == m.euler_characteristic() && m.is_complex()? && m.is_minimal();
        t.record(ok, || format!("{gens:?}"));
    }
    Ok(t.done())
}

/// Krull dimension agrees with the largest variable set containing no
/// generator support, found by trying every subset.
pub fn dimension_agreement(cases: usize, seed: u64, budget: &dyn Budget) -> Out<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("dimension against exhaustive subsets");
    for _ in 0..cases {
        let n = rng.gen_range(2..=12);
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let ring = ring_make(&names, n, 0, 0)?;
        let k = rng.gen_range(1..=6);
        let gens = random_monomials(&mut rng, &ring, k, 3);
        let supports: Vec<u32> =
            gens.iter().map(|g| g.support().iter().fold(0u32, |m, &v| m | (1 << v))).collect();
        let brute = (0u32..1 << n)
            .filter(|&u| supports.iter().all(|&s| s & !u != 0))
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let (dim, codim) = dimension(&IdealHandle::new(&ring, gens.clone())?, budget)?;
        t.record(dim == brute && dim + codim == n, || format!("{gens:?}: {dim} vs {brute}"));
    }
    Ok(t.done())
}

/// All five suites; `scale` multiplies the default case counts.
pub fn run_all(scale: usize, budget: &dyn Budget) -> Out<Vec<SuiteResult>> {
    let s = scale.max(1);
    Ok(vec![
        spoly_closure(250 * s, PROPERTY_SEED, budget)?,
        nf_idempotence(250 * s, PROPERTY_SEED + 1, budget)?,
        reduced_uniqueness(200 * s, PROPERTY_SEED + 2, budget)?,
        euler_preservation(200 * s, PROPERTY_SEED + 3, budget)?,
        dimension_agreement(200 * s, PROPERTY_SEED + 4, budget)?,
    ])
}
