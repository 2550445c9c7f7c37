use alloc::vec::Vec;
use core::cmp::Ordering;

use super::ring::RingDescriptor;

/// Exponent row with cached total degree and bidegree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    totdeg: u32,
    bideg: (u32, u32),
}

impl Monomial {
    pub fn new(ring: &RingDescriptor, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent row length must match the ring");
        let totdeg = exps.iter().sum();
        let bideg = exps.iter().enumerate().fold((0, 0), |(a, b), (i, &e)| {
            let (p, q) = ring.bidegree(i);
            (a + p * e, b + q * e)
        });
        Monomial { exps, totdeg, bideg }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Monomial::new(ring, alloc::vec![0; ring.nvars()])
    }

    pub fn var(ring: &RingDescriptor, i: usize) -> Self {
        let mut e = alloc::vec![0; ring.nvars()];
        e[i] = 1;
        Monomial::new(ring, e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn totdeg(&self) -> u32 {
        self.totdeg
    }

    pub fn bideg(&self) -> (u32, u32) {
        self.bideg
    }

    pub fn is_one(&self) -> bool {
        self.totdeg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            totdeg: self.totdeg + other.totdeg,
            bideg: (self.bideg.0 + other.bideg.0, self.bideg.1 + other.bideg.1),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            totdeg: self.totdeg - other.totdeg,
            bideg: (self.bideg.0 - other.bideg.0, self.bideg.1 - other.bideg.1),
        })
    }

    pub fn lcm(&self, other: &Monomial, ring: &RingDescriptor) -> Monomial {
        Monomial::new(ring, self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial, ring: &RingDescriptor) -> Monomial {
        Monomial::new(ring, self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Graded reverse lexicographic comparison on the declared variable
    /// order; the canonical storage order of every polynomial.
    pub fn cmp_canonical(&self, other: &Monomial) -> Ordering {
        match self.totdeg.cmp(&other.totdeg) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}
