//! Gröbner bases and the ideal operations built on them.

mod dimension;
mod echelon;
pub(crate) mod engine;
mod ideal;
mod syzygy;

#[cfg(test)]
mod tests;

use alloc::vec::Vec;

pub use dimension::{dimension, max_independent_set, monomial_dimension};
pub use echelon::Echelon;
pub use engine::GbStats;
pub use ideal::{colon, eliminate, ideal_equal, intersect, is_regular_sequence, IdealHandle, RegularVerdict};
pub use syzygy::{minimal_columns, module_syzygies, syzygies, SyzygyMatrix};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};
use engine::{Ctx, Term};

/// Reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    ctx: Ctx,
    basis: Vec<Vec<Term>>,
    polys: Vec<Polynomial>,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn compute(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder, budget: &dyn Budget) -> Result<Self> {
        Self::compute_graded(ring, gens, order, None, budget)
    }

    /// As [`compute`](Self::compute), with an explicit positive grading used
    /// for the sugar degree of pairs.
    pub fn compute_graded(
        ring: &Ring,
        gens: &[Polynomial],
        order: &MonomialOrder,
        grading: Option<&[u32]>,
        budget: &dyn Budget,
    ) -> Result<Self> {
        let ctx = Ctx::new(order, grading);
        Self::run(ring, gens, order, ctx, budget)
    }

    pub(crate) fn run(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder, ctx: Ctx, budget: &dyn Budget) -> Result<Self> {
        check_ring(ring, gens, order)?;
        let input: Vec<Vec<Term>> = gens.iter().map(|g| ctx.import(g)).collect();
        let (basis, stats) = engine::buchberger(&ctx, input, budget).map_err(|e| e.into_error(&ctx, ring))?;
        let polys = basis.iter().map(|p| ctx.export(ring, p, &crate::coeff::Int::one(), true)).collect();
        Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), ctx, basis, polys, stats })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// Leading monomials, in basis order.
    pub fn leads(&self) -> Vec<Monomial> {
        self.basis.iter().map(|p| self.ctx.to_monomial(&self.ring, &p[0].1)).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(engine::normal_form(&self.ctx, &self.ring, &self.basis, f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn check_ring(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<()> {
    if order.nvars() != ring.nvars() {
        return Err(Error::InvalidArgument(alloc::format!(
            "order on {} variables used in a ring with {}",
            order.nvars(),
            ring.nvars()
        )));
    }
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}
