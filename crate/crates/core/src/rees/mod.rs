//! Rees algebras: presentations, minimal generators and linear-type verdicts.
//!
//! The Rees algebra of `I = ⟨f_1, …, f_m⟩ ⊂ K[X]` is presented as
//! `S/J` with `S = K[X, y_1, …, y_m]`, `J` the kernel of `y_k ↦ f_k·t`.

mod identities;
mod sequences;

#[cfg(test)]
mod tests;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

pub use identities::{colon_identities_check, regular_subsequences_report, IdentityCheck, SubsequenceReport};
pub use sequences::{
    d_sequence_check, d_sequence_failure, m_sequence_check, replay_m_sequence, SequenceKind, SequenceStatus, SequenceVerdict,
    SequenceWitness, D_SEQUENCE_SAMPLE, D_SEQUENCE_SEED,
};

use crate::budget::Budget;
use crate::combinat::multisets;
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Echelon, GroebnerBasis, IdealHandle};
use crate::matalg::skew_generic;
use crate::pfideal::pf_ideal_maximal;
use crate::polyring::{
    same_ring, x_name, y_name, Bidegree, Monomial, MonomialOrder, OrderKind, Polynomial, Ring, VarBlock,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReesMethod {
    Elimination,
    ExplicitD2,
    Taylor,
}

impl ReesMethod {
    pub fn name(self) -> &'static str {
        match self {
            ReesMethod::Elimination => "ELIMINATION",
            ReesMethod::ExplicitD2 => "EXPLICIT_D2",
            ReesMethod::Taylor => "TAYLOR",
        }
    }
}

/// `S/J` with `y_k` standing for the `k`-th base generator.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    ring: Ring,
    base_ring: Ring,
    base_gens: Vec<Polynomial>,
    defining: Vec<Polynomial>,
    method: ReesMethod,
}

impl ReesPresentation {
    /// The ring `S`: the base variables followed by `y_1..y_m`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base_ring(&self) -> &Ring {
        &self.base_ring
    }

    pub fn base_gens(&self) -> &[Polynomial] {
        &self.base_gens
    }

    pub fn defining_gens(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn method(&self) -> ReesMethod {
        self.method
    }

    pub fn ideal(&self) -> Result<IdealHandle> {
        IdealHandle::new(&self.ring, self.defining.clone())
    }

    /// Indices of `y_1..y_m` in `S`.
    pub fn y_vars(&self) -> Vec<usize> {
        let b = self.base_ring.nvars();
        (b..b + self.base_gens.len()).collect()
    }

    pub fn y(&self, k: usize) -> Polynomial {
        Polynomial::var(&self.ring, self.base_ring.nvars() + k)
    }

    /// A base-ring polynomial viewed in `S`.
    pub fn lift(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.base_ring) {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = (0..self.base_ring.nvars()).collect();
        Ok(f.map_vars(&self.ring, &map))
    }

    /// Bidegree counts of the defining generators.
    pub fn census(&self) -> BTreeMap<(u32, u32), usize> {
        let mut c = BTreeMap::new();
        for g in &self.defining {
            if let Bidegree::Of(a, b) = g.bidegree_of() {
                *c.entry((a, b)).or_insert(0) += 1;
            }
        }
        c
    }

    /// Applies `y_k ↦ f_k·t` to every defining generator and checks that
    /// all images vanish.
    pub fn substitution_check(&self) -> Result<bool> {
        let b = self.base_ring.nvars();
        let t = self.base_ring.fresh_name("t");
        let target = self.base_ring.extended(&[(t, VarBlock::E)])?;
        let tv = Polynomial::var(&target, b);
        let up: Vec<usize> = (0..b).collect();
        let mut images: Vec<Polynomial> = (0..b).map(|i| Polynomial::var(&target, i)).collect();
        for f in &self.base_gens {
            images.push(&f.map_vars(&target, &up) * &tv);
        }
        for g in &self.defining {
            if !g.substitute(&target, &images)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `S = K[X, y_1..y_m]` over an X-only base ring.
pub fn rees_ring(base: &Ring, m: usize) -> Result<Ring> {
    if (0..base.nvars()).any(|i| base.block(i) != VarBlock::X) {
        return Err(Error::InvalidArgument(String::from("base ring must consist of X-variables")));
    }
    let extra: Vec<(String, VarBlock)> = (1..=m).map(|k| (y_name(k), VarBlock::Y)).collect();
    base.extended(&extra)
}

fn equigenerated_degree(gens: &[Polynomial]) -> Result<u32> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroGenerator);
    };
    let ring = first.ring();
    let mut d = None;
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let e = g.total_degree().unwrap_or(0);
        if *d.get_or_insert(e) != e {
            return Err(Error::NotEquigenerated);
        }
    }
    Ok(d.unwrap_or(0))
}

/// Defining ideal as the contraction of `⟨y_k − f_k·t⟩` to `S`, reduced to
/// a minimal bigraded generating set.
pub fn rees_by_elimination(ideal: &IdealHandle, budget: &dyn Budget) -> Result<ReesPresentation> {
    let gens = ideal.gens().to_vec();
    let d = equigenerated_degree(&gens)?;
    let base = ideal.ring().clone();
    let b = base.nvars();
    let m = gens.len();
    let s = rees_ring(&base, m)?;
    let t = s.fresh_name("t");
    let ext = s.extended(&[(t, VarBlock::E)])?;
    let tv = Polynomial::var(&ext, b + m);
    let up: Vec<usize> = (0..b).collect();
    let rels: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(k, f)| &Polynomial::var(&ext, b + k) - &(&f.map_vars(&ext, &up) * &tv))
        .collect();
    let order = MonomialOrder::elimination(OrderKind::GRevLex, b + m + 1, &[b + m])?;
    let mut grading = alloc::vec![1u32; b];
    grading.extend(core::iter::repeat(d.max(1)).take(m));
    grading.push(if d == 0 { 1 } else { 0 });
    let gb = GroebnerBasis::compute_graded(&ext, &rels, &order, Some(&grading), budget)?;
    let mut down: Vec<usize> = (0..b + m).collect();
    down.push(0);
    let contracted: Vec<Polynomial> =
        gb.polys().iter().filter(|p| p.degree_in(&[b + m]) == 0).map(|p| p.map_vars(&s, &down)).collect();
    let j = IdealHandle::new(&s, contracted)?;
    let min = minimal_bigraded_generators(&j, budget)?;
    Ok(ReesPresentation { ring: s, base_ring: base, base_gens: gens, defining: min.gens, method: ReesMethod::Elimination })
}

/// Entry `a_ij` (1-based) of the second differential for the generic
/// skew matrix of order `n`.
pub fn generic_d2_entry(ring: &Ring, n: usize, i: usize, j: usize) -> Polynomial {
    let sign_pos = |e: usize| e % 2 == 0;
    let var = |p: usize, q: usize| Polynomial::var_named(ring, &x_name(p, q)).expect("generic variable");
    if i > j {
        let v = var(n + 1 - i, n + 1 - j);
        if sign_pos(i + j) {
            v
        } else {
            -v
        }
    } else if i < j {
        let v = var(n + 1 - j, n + 1 - i);
        if sign_pos(i + j + 1) {
            v
        } else {
            -v
        }
    } else {
        Polynomial::zero(ring)
    }
}

/// The relations `g_j = Σ_i y_i·a_ij` for the generic skew matrix of odd
/// order `n`. The base generators are listed so that `y_k` pairs with the
/// Pfaffian deleting index `n+1−k`.
pub fn explicit_generic_relations(n: usize) -> Result<ReesPresentation> {
    if n < 3 {
        return Err(Error::InvalidArgument(String::from("order must be at least 3")));
    }
    let x = skew_generic(n)?;
    let pf = pf_ideal_maximal(&x)?;
    let base = x.ring().clone();
    let mut base_gens = pf.gens().to_vec();
    base_gens.reverse();
    let s = rees_ring(&base, n)?;
    let b = base.nvars();
    let mut defining = Vec::with_capacity(n);
    for j in 1..=n {
        let mut g = Polynomial::zero(&s);
        for i in 1..=n {
            let a = generic_d2_entry(&s, n, i, j);
            if !a.is_zero() {
                g = &g + &(&a * &Polynomial::var(&s, b + i - 1));
            }
        }
        defining.push(g);
    }
    Ok(ReesPresentation { ring: s, base_ring: base, base_gens, defining, method: ReesMethod::ExplicitD2 })
}

/// Taylor relations `t_{α,β}` among products of at most `r_max` of the
/// monomial generators, minimalized.
pub fn taylor_rees(gens: &[Polynomial], r_max: usize, budget: &dyn Budget) -> Result<ReesPresentation> {
    equigenerated_degree(gens)?;
    if gens.iter().any(|g| !g.is_monomial()) {
        return Err(Error::NotMonomial);
    }
    let base = gens[0].ring().clone();
    let b = base.nvars();
    let m = gens.len();
    let s = rees_ring(&base, m)?;
    let mons: Vec<Monomial> = gens.iter().map(|g| g.leading().unwrap().1.clone()).collect();
    let mut rels: Vec<Polynomial> = Vec::new();
    for r in 1..=r_max {
        let sets = multisets(m, r);
        let prods: Vec<(Monomial, Monomial)> = sets
            .iter()
            .map(|a| {
                let mut u = Monomial::one(&base);
                let mut e = alloc::vec![0u32; b + m];
                for &i in a {
                    u = u.mul(&mons[i]);
                    e[b + i] += 1;
                }
                (u, Monomial::new(&s, e))
            })
            .collect();
        for a in 0..prods.len() {
            for c in a + 1..prods.len() {
                let (ua, ta) = &prods[a];
                let (uc, tc) = &prods[c];
                let l = ua.lcm(uc, &base);
                let lift = |q: Monomial, t: &Monomial| {
                    let mut e = t.exps().to_vec();
                    for (v, &x) in q.exps().iter().enumerate() {
                        e[v] += x;
                    }
                    Polynomial::monomial(&s, num_rational::BigRational::from_integer(1.into()), Monomial::new(&s, e))
                };
                let rel = &lift(l.div(uc).unwrap(), tc) - &lift(l.div(ua).unwrap(), ta);
                if !rel.is_zero() && !rels.iter().any(|q| q.is_associate(&rel)) {
                    rels.push(rel);
                }
            }
        }
    }
    let j = IdealHandle::new(&s, rels)?;
    let min = minimal_bigraded_generators(&j, budget)?;
    Ok(ReesPresentation {
        ring: s,
        base_ring: base,
        base_gens: gens.to_vec(),
        defining: min.gens,
        method: ReesMethod::Taylor,
    })
}

/// A minimal bihomogeneous generating set and its bidegree counts.
#[derive(Debug, Clone)]
pub struct MinimalGenerators {
    pub gens: Vec<Polynomial>,
    pub census: BTreeMap<(u32, u32), usize>,
}

/// Minimal generators by graded Nakayama. Candidates are processed in order
/// of total bidegree; one is kept iff it is not in the ideal of those kept
/// before it.
pub fn minimal_bigraded_generators(j: &IdealHandle, budget: &dyn Budget) -> Result<MinimalGenerators> {
    let ring = j.ring().clone();
    let mut cands: Vec<(u32, (u32, u32), Polynomial)> = Vec::new();
    for g in j.gens() {
        match g.bidegree_of() {
            Bidegree::Of(a, b) => cands.push((a + b, (a, b), g.normalized())),
            Bidegree::Bottom => {}
            Bidegree::NonHomogeneous => return Err(Error::NotBihomogeneous),
        }
    }
    cands.sort_by(|p, q| (p.0, p.1).cmp(&(q.0, q.1)));
    let order = MonomialOrder::grevlex(ring.nvars());
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut census = BTreeMap::new();
    let mut k = 0;
    while k < cands.len() {
        let deg = cands[k].0;
        let end = k + cands[k..].iter().take_while(|c| c.0 == deg).count();
        let gb = if kept.is_empty() { None } else { Some(GroebnerBasis::compute(&ring, &kept, &order, budget)?) };
        let mut spans: BTreeMap<(u32, u32), Echelon> = BTreeMap::new();
        for (_, bd, g) in &cands[k..end] {
            let nf = match &gb {
                Some(gb) => gb.normal_form(g)?,
                None => g.clone(),
            };
            if spans.entry(*bd).or_default().insert(&nf) {
                kept.push(g.clone());
                *census.entry(*bd).or_insert(0) += 1;
            }
        }
        k = end;
    }
    Ok(MinimalGenerators { gens: kept, census })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearType {
    LinearType,
    GroebnerLinearType,
    NotLinearType,
}

impl LinearType {
    pub fn name(self) -> &'static str {
        match self {
            LinearType::LinearType => "LINEAR_TYPE",
            LinearType::GroebnerLinearType => "GROEBNER_LINEAR_TYPE",
            LinearType::NotLinearType => "NOT_LINEAR_TYPE",
        }
    }
}

/// Outcome of [`linear_type_verdict`].
#[derive(Debug, Clone)]
pub struct LinearTypeReport {
    pub verdict: LinearType,
    /// Generators of `J` of Y-degree one.
    pub linear: Vec<Polynomial>,
    /// Index into the order pool under which `linear` is a Gröbner basis.
    pub order_index: Option<usize>,
    pub order: Option<MonomialOrder>,
    /// Number of pool orders tried.
    pub orders_tried: usize,
}

/// Decides linear type, and Gröbner linear type over the orders in `pool`.
pub fn linear_type_verdict(
    r: &ReesPresentation,
    pool: &[MonomialOrder],
    budget: &dyn Budget,
) -> Result<LinearTypeReport> {
    let ys = r.y_vars();
    let linear: Vec<Polynomial> = r.defining.iter().filter(|g| g.degree_in(&ys) == 1).cloned().collect();
    let full = r.ideal()?;
    let lin = IdealHandle::new(&r.ring, linear.clone())?;
    let order = MonomialOrder::grevlex(r.ring.nvars());
    if !ideal_equal(&lin, &full, &order, budget)? {
        return Ok(LinearTypeReport {
            verdict: LinearType::NotLinearType,
            linear,
            order_index: None,
            order: None,
            orders_tried: 0,
        });
    }
    for (k, o) in pool.iter().enumerate() {
        if is_groebner_basis(&linear, o, budget)? {
            return Ok(LinearTypeReport {
                verdict: LinearType::GroebnerLinearType,
                linear,
                order_index: Some(k),
                order: Some(o.clone()),
                orders_tried: k + 1,
            });
        }
    }
    Ok(LinearTypeReport { verdict: LinearType::LinearType, linear, order_index: None, order: None, orders_tried: pool.len() })
}

/// True iff the leading monomials of `fs` generate the initial ideal of
/// `⟨fs⟩` under `order`.
pub fn is_groebner_basis(fs: &[Polynomial], order: &MonomialOrder, budget: &dyn Budget) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let ring = first.ring().clone();
    let leads: Vec<Monomial> = fs.iter().filter_map(|f| f.leading_monomial_under(order).cloned()).collect();
    let gb = GroebnerBasis::compute(&ring, fs, order, budget)?;
    Ok(gb.leads().iter().all(|m| leads.iter().any(|l| l.divides(m))))
}

/// Orders tried by default for Gröbner linear type on `S`: grevlex, grlex
/// and lex on the declared order, cyclic shifts, and seeded random samples.
pub fn default_order_pool(ring: &Ring) -> Vec<MonomialOrder> {
    let n = ring.nvars();
    crate::orders::order_pool(
        n,
        &[MonomialOrder::grevlex(n), MonomialOrder::grlex(n), MonomialOrder::lex(n)],
        crate::orders::ORDER_SAMPLE,
        crate::orders::ORDER_SEED,
    )
}
