//! Row echelon forms over the rationals, with polynomials as sparse rows.

use alloc::vec::Vec;

use crate::polyring::Polynomial;

/// Incrementally built echelon basis of a space of polynomials. Rows are
/// kept sorted by leading monomial, descending, with distinct leads.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Polynomial>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every row's leading monomial.
    pub fn reduce(&self, v: &Polynomial) -> Polynomial {
        let mut v = v.clone();
        for r in &self.rows {
            let (lc, lm) = r.leading().expect("echelon rows are nonzero");
            let hit = v.terms().binary_search_by(|(_, m)| lm.cmp_canonical(m)).ok();
            if let Some(k) = hit {
                let c = &v.terms()[k].0 / lc;
                v = &v - &r.scale(&c);
            }
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already in it.
    pub fn insert(&mut self, v: &Polynomial) -> bool {
        let r = self.reduce(v);
        let Some((_, lm)) = r.leading() else {
            return false;
        };
        let pos = self.rows.partition_point(|row| row.leading().unwrap().1.cmp_canonical(lm).is_gt());
        self.rows.insert(pos, r);
        true
    }
}
