use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::Mutex;

use super::{dimension, GroebnerBasis};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{same_ring, MonomialOrder, OrderKind, Polynomial, Ring, VarBlock};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct IdealHandle {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis>)>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(self.cache.lock().clone()) }
    }
}

impl core::fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| alloc::format!("{g}"))).finish()
    }
}

impl IdealHandle {
    /// Zero generators are dropped; the rest are kept verbatim.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle { ring: ring.clone(), gens, cache: Mutex::new(Vec::new()) })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.ring.nvars())
    }

    pub fn gb(&self, order: &MonomialOrder, budget: &dyn Budget) -> Result<Arc<GroebnerBasis>> {
        if let Some((_, g)) = self.cache.lock().iter().find(|(o, _)| o == order) {
            return Ok(g.clone());
        }
        let g = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, order, budget)?);
        let mut cache = self.cache.lock();
        if !cache.iter().any(|(o, _)| o == order) {
            cache.push((order.clone(), g.clone()));
        }
        Ok(g)
    }

    /// Grevlex basis on the declared variable order.
    pub fn default_gb(&self, budget: &dyn Budget) -> Result<Arc<GroebnerBasis>> {
        self.gb(&self.default_order(), budget)
    }

    /// Stores an already computed basis in the cache.
    pub fn seed_cache(&self, gb: GroebnerBasis) {
        let mut cache = self.cache.lock();
        if !cache.iter().any(|(o, _)| o == gb.order()) {
            cache.push((gb.order().clone(), Arc::new(gb)));
        }
    }

    pub fn normal_form(&self, f: &Polynomial, order: &MonomialOrder, budget: &dyn Budget) -> Result<Polynomial> {
        self.gb(order, budget)?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial, budget: &dyn Budget) -> Result<bool> {
        self.default_gb(budget)?.contains(f)
    }

    pub fn contains_all(&self, fs: &[Polynomial], budget: &dyn Budget) -> Result<bool> {
        let gb = self.default_gb(budget)?;
        for f in fs {
            if !gb.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self, budget: &dyn Budget) -> Result<bool> {
        Ok(self.default_gb(budget)?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Same ideal with extra generators appended.
    pub fn plus(&self, extra: &[Polynomial]) -> Result<IdealHandle> {
        let mut g = self.gens.clone();
        g.extend_from_slice(extra);
        IdealHandle::new(&self.ring, g)
    }

    /// Krull dimension and codimension of the quotient ring.
    pub fn dimension(&self, budget: &dyn Budget) -> Result<(usize, usize)> {
        dimension(self, budget)
    }
}

/// True iff the two ideals have the same elements.
pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle, order: &MonomialOrder, budget: &dyn Budget) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ga = a.gb(order, budget)?;
    let gb = b.gb(order, budget)?;
    // Reduced bases are unique, so equal ideals give equal bases.
    Ok(ga.polys() == gb.polys())
}

/// Contraction `I ∩ K[rest]`, returned in the ring on the kept variables.
pub fn eliminate(ideal: &IdealHandle, drop: &[usize], budget: &dyn Budget) -> Result<IdealHandle> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if drop.iter().any(|&v| v >= n) {
        return Err(Error::InvalidArgument(alloc::string::String::from("variable index out of range")));
    }
    let keep: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
    let sub = ring.restricted(&keep)?;
    let mut map = alloc::vec![0; n];
    for (k, &v) in keep.iter().enumerate() {
        map[v] = k;
    }
    if drop.is_empty() {
        let gens = ideal.gens().iter().map(|g| g.map_vars(&sub, &map)).collect();
        return IdealHandle::new(&sub, gens);
    }
    let order = MonomialOrder::elimination(OrderKind::GRevLex, n, drop)?;
    let gb = ideal.gb(&order, budget)?;
    let gens = gb
        .polys()
        .iter()
        .filter(|p| drop.iter().all(|&v| p.degree_in(&[v]) == 0))
        .map(|p| p.map_vars(&sub, &map))
        .collect();
    IdealHandle::new(&sub, gens)
}

/// `I ∩ J` via one auxiliary variable `w`: eliminate `w` from `w·I + (1−w)·J`.
pub fn intersect(a: &IdealHandle, b: &IdealHandle, budget: &dyn Budget) -> Result<IdealHandle> {
    let ring = a.ring();
    if !same_ring(ring, b.ring()) {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return IdealHandle::new(ring, Vec::new());
    }
    let n = ring.nvars();
    let w_name = ring.fresh_name("w");
    let ext = ring.extended(&[(w_name, VarBlock::E)])?;
    let up: Vec<usize> = (0..n).collect();
    let w = Polynomial::var(&ext, n);
    let one_minus_w = &Polynomial::one(&ext) - &w;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(&f.map_vars(&ext, &up) * &w);
    }
    for g in b.gens() {
        gens.push(&g.map_vars(&ext, &up) * &one_minus_w);
    }
    let order = MonomialOrder::elimination(OrderKind::GRevLex, n + 1, &[n])?;
    let mut grading = alloc::vec![1u32; n + 1];
    grading[n] = 0;
    let gb = GroebnerBasis::compute_graded(&ext, &gens, &order, Some(&grading), budget)?;
    let mut down: Vec<usize> = (0..n).collect();
    down.push(0);
    let out = gb.polys().iter().filter(|p| p.degree_in(&[n]) == 0).map(|p| p.map_vars(ring, &down)).collect();
    IdealHandle::new(ring, out)
}

/// Ideal quotient `(I : f)`, computed as `(I ∩ ⟨f⟩) / f`.
pub fn colon(ideal: &IdealHandle, f: &Polynomial, budget: &dyn Budget) -> Result<IdealHandle> {
    if !same_ring(ideal.ring(), f.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let principal = IdealHandle::new(ideal.ring(), alloc::vec![f.clone()])?;
    let meet = intersect(ideal, &principal, budget)?;
    let gens = meet.gens().iter().map(|g| g.div_exact(f)).collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ideal.ring(), gens)
}

/// Outcome of [`is_regular_sequence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularVerdict {
    /// Leading terms are pairwise coprime under the order at this index.
    YesByLt(usize),
    /// The ideal has codimension equal to the length of the sequence.
    YesByCodim,
    No,
}

impl RegularVerdict {
    pub fn is_regular(self) -> bool {
        self != RegularVerdict::No
    }
}

/// Decides whether homogeneous `fs` form a regular sequence, trying the
/// coprime-leading-term criterion under each of `orders` first.
pub fn is_regular_sequence(fs: &[Polynomial], orders: &[MonomialOrder], budget: &dyn Budget) -> Result<RegularVerdict> {
    let Some(first) = fs.first() else {
        return Ok(RegularVerdict::YesByCodim);
    };
    let ring = first.ring().clone();
    for f in fs {
        if f.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if !same_ring(f.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    if fs.iter().any(|f| f.is_constant()) {
        return Ok(RegularVerdict::No);
    }
    for (k, o) in orders.iter().enumerate() {
        let leads: Vec<_> = fs.iter().map(|f| f.leading_monomial_under(o).unwrap().clone()).collect();
        let coprime = (0..leads.len()).all(|i| (i + 1..leads.len()).all(|j| leads[i].is_coprime(&leads[j])));
        if coprime {
            return Ok(RegularVerdict::YesByLt(k));
        }
    }
    let ideal = IdealHandle::new(&ring, fs.to_vec())?;
    match ideal.dimension(budget) {
        Ok((_, codim)) if codim == fs.len() => Ok(RegularVerdict::YesByCodim),
        Ok(_) | Err(Error::UnitIdeal) => Ok(RegularVerdict::No),
        Err(e) => Err(e),
    }
}
