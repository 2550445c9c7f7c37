use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Result of [`Polynomial::bidegree_of`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bidegree {
    /// The zero polynomial, which sits in every bidegree.
    Bottom,
    Of(u32, u32),
    NonHomogeneous,
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending in graded reverse lexicographic order on
/// the ring's declared variable list, with no zero coefficients and no
/// repeated monomials. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(BigRational, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl core::hash::Hash for Polynomial {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        Self::from_terms(ring, alloc::vec![(c, Monomial::one(ring))])
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: alloc::vec![(BigRational::one(), Monomial::var(ring, i))] }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, c: BigRational, m: Monomial) -> Self {
        Self::from_terms(ring, alloc::vec![(c, m)])
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges repeated
    /// monomials and drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(BigRational, Monomial)>) -> Self {
        terms.sort_by(|a, b| b.1.cmp_canonical(&a.1));
        let mut out: Vec<(BigRational, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Integer-coefficient convenience constructor from exponent rows.
    pub fn from_int_terms(ring: &Ring, terms: &[(i64, &[u32])]) -> Self {
        let t = terms
            .iter()
            .map(|(c, e)| (BigRational::from_integer(BigInt::from(*c)), Monomial::new(ring, e.to_vec())))
            .collect();
        Self::from_terms(ring, t)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(BigRational, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(BigRational, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// Constant term (zero when absent).
    pub fn constant_term(&self) -> BigRational {
        match self.terms.last() {
            Some((c, m)) if m.is_one() => c.clone(),
            _ => BigRational::zero(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under the canonical order.
    pub fn leading(&self) -> Option<&(BigRational, Monomial)> {
        self.terms.first()
    }

    /// Leading term under `order`.
    pub fn leading_under(&self, order: &MonomialOrder) -> Option<&(BigRational, Monomial)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.1, &b.1))
    }

    pub fn leading_monomial_under(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_under(order).map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.totdeg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|(_, n)| n.totdeg() == m.totdeg()),
        }
    }

    pub fn bidegree_of(&self) -> Bidegree {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return Bidegree::Bottom,
            Some((_, m)) => m.bideg(),
        };
        if it.all(|(_, m)| m.bideg() == first) {
            Bidegree::Of(first.0, first.1)
        } else {
            Bidegree::NonHomogeneous
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].1.cmp_canonical(&b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].0 } else { b[j].0.clone() };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].0 - &b[j].0 } else { &a[i].0 + &b[j].0 };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.0 } else { t.0.clone() };
            out.push((c, t.1.clone()));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c, m) in &self.terms {
            for (d, n) in &other.terms {
                prod.push((c * d, m.mul(n)));
            }
        }
        Polynomial::from_terms(&self.ring, prod)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(d, m)| (d * c, m.clone())).collect() }
    }

    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a monomial preserves the canonical order.
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(d, n)| (d * c, n.mul(m))).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Same polynomial scaled so that its coefficients are coprime integers
    /// and the leading coefficient is positive.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let rats: Vec<BigRational> = self.terms.iter().map(|t| t.0.clone()).collect();
        let (ints, _) = crate::coeff::clear_denominators(&rats);
        let terms = ints
            .into_iter()
            .zip(self.terms.iter())
            .map(|(c, (_, m))| (BigRational::from_integer(c.to_bigint()), m.clone()))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Same polynomial scaled to leading coefficient one under `order`.
    pub fn monic_under(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_under(order) {
            None => self.clone(),
            Some((c, _)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient `self / d`, failing unless `d` divides `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check_ring(d)?;
        let (lc, lm) = d.leading().ok_or(Error::NotDivisible)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.terms.first() {
            let q = m.div(lm).ok_or(Error::NotDivisible)?;
            let qc = c / lc;
            rem = rem.merge(&d.mul_term(&qc, &q), true);
            quot.push((qc, q));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(alloc::string::String::from("one image per variable required")));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = alloc::vec![Vec::new(); images.len()];
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[v]);
                    cache.push(next);
                }
                t = t.mul_unchecked(&cache[e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Re-embeds into `target`, sending variable `i` to variable `map[i]`.
    pub fn map_vars(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = alloc::vec![0u32; target.nvars()];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (c.clone(), Monomial::new(target, e))
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Re-embeds into a ring whose variables carry the same names.
    pub fn map_by_name(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<usize> = (0..self.ring.nvars())
            .map(|i| {
                let n = self.ring.name(i);
                target.index_of(n).ok_or_else(|| Error::UnknownVariable(n.into()))
            })
            .collect::<Result<_>>()?;
        Ok(self.map_vars(target, &map))
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&v| self.terms.iter().any(|(_, m)| m.exp(v) > 0)).collect()
    }

    /// Degree in the given set of variables (max over terms).
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms.iter().map(|(_, m)| vars.iter().map(|&v| m.exp(v)).sum::<u32>()).max().unwrap_or(0)
    }

    /// Equal up to a nonzero scalar factor.
    pub fn is_associate(&self, other: &Polynomial) -> bool {
        self.primitive() == other.primitive() || self.primitive() == other.neg_ref().primitive()
    }

    fn neg_ref(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect() }
    }

    /// Sign-normalized primitive form: coprime integer coefficients and a
    /// positive canonical leading coefficient.
    pub fn normalized(&self) -> Polynomial {
        let p = self.primitive();
        match p.leading() {
            Some((c, _)) if c.is_negative() => p.neg_ref(),
            _ => p,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        /// Panics when the operands live in different rings; use the
        /// `try_` variant to get an error instead.
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$f(rhs).expect("polynomials live in different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs).expect("polynomials live in different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ring::ring_make;

    fn ring() -> Ring {
        ring_make(&["x1_2", "x1_3", "x1_4", "x2_3", "x2_4", "x3_4", "y1"], 6, 1, 0).unwrap()
    }

    #[test]
    fn cancellation_and_commutativity() {
        let r = ring();
        let x12 = Polynomial::var(&r, 0);
        let x13 = Polynomial::var(&r, 1);
        let y1 = Polynomial::var(&r, 6);
        assert_eq!(&(&x12 + &y1) + &(-&x12), y1);
        assert!((&(&x12 * &x13) - &(&x13 * &x12)).is_zero());
    }

    fn naive_square(p: &Polynomial) -> Vec<(BigRational, Monomial)> {
        // O(t^2) oracle: accumulate into an unsorted list with linear lookup.
        let mut acc: Vec<(BigRational, Monomial)> = Vec::new();
        for (c, m) in p.terms() {
            for (d, n) in p.terms() {
                let mm = m.mul(n);
                match acc.iter_mut().find(|(_, k)| *k == mm) {
                    Some(e) => e.0 += c * d,
                    None => acc.push((c * d, mm)),
                }
            }
        }
        acc.retain(|t| !t.0.is_zero());
        acc
    }

    #[test]
    fn pfaffian_square_has_six_monomials() {
        let r = ring();
        let v = |i| Polynomial::var(&r, i);
        let pf = &(&(&v(2) * &v(3)) - &(&v(1) * &v(4))) + &(&v(0) * &v(5));
        let sq = &pf * &pf;
        let oracle = naive_square(&pf);
        assert_eq!(oracle.len(), 6);
        assert_eq!(sq.len(), 6);
        for (c, m) in &oracle {
            assert!(sq.terms().iter().any(|(d, n)| d == c && n == m));
        }
    }

    #[test]
    fn bidegrees() {
        let r = ring_make(&["x1_2", "x1_3", "x2_3", "y1", "y2", "y3"], 3, 3, 0).unwrap();
        let v = |i| Polynomial::var(&r, i);
        let rel = &(&v(0) * &v(4)) - &(&v(1) * &v(3));
        assert_eq!(rel.bidegree_of(), Bidegree::Of(1, 1));
        assert_eq!((&v(0) + &v(3)).bidegree_of(), Bidegree::NonHomogeneous);
        assert_eq!(Polynomial::zero(&r).bidegree_of(), Bidegree::Bottom);
        let r2 = ring();
        let w = |i| Polynomial::var(&r2, i);
        let pf = &(&(&w(2) * &w(3)) - &(&w(1) * &w(4))) + &(&w(0) * &w(5));
        assert_eq!(pf.bidegree_of(), Bidegree::Of(2, 0));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring_make(&["a"], 1, 0, 0).unwrap();
        let b = ring_make(&["b"], 1, 0, 0).unwrap();
        assert!(matches!(Polynomial::var(&a, 0).try_add(&Polynomial::var(&b, 0)), Err(Error::RingMismatch)));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let v = |i| Polynomial::var(&r, i);
        let f = &(&v(0) + &v(1)) * &(&v(2) - &v(3));
        assert_eq!(f.div_exact(&(&v(2) - &v(3))).unwrap(), &v(0) + &v(1));
        assert!(matches!(f.div_exact(&v(5)), Err(Error::NotDivisible)));
    }
}
