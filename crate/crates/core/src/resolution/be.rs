//! The length-three complex resolving the maximal Pfaffians of a generic
//! skew matrix of odd order, and its acyclicity check.

use alloc::vec::Vec;

use super::GradedFreeComplex;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::{dimension, IdealHandle};
use crate::matalg::{determinant, minors, skew_generic, PolyMatrix};
use crate::pfideal::pf_ideal_maximal;
use crate::rees::generic_d2_entry;

/// Which Pfaffian sits in position `l` of `d_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfOrder {
    /// `Pf_l̄`, the Pfaffian deleting row and column `l`.
    Forward,
    /// `Pf_{n+1−l}`.
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Unsigned,
    /// Position `l` carries `(−1)^{l+1}`.
    AlternatingPlus,
    /// Position `l` carries `(−1)^l`.
    AlternatingMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeConvention {
    pub order: PfOrder,
    pub signs: SignConvention,
}

impl BeConvention {
    pub fn name(&self) -> &'static str {
        match (self.order, self.signs) {
            (PfOrder::Forward, SignConvention::Unsigned) => "FORWARD/UNSIGNED",
            (PfOrder::Forward, SignConvention::AlternatingPlus) => "FORWARD/ALTERNATING(+)",
            (PfOrder::Forward, SignConvention::AlternatingMinus) => "FORWARD/ALTERNATING(-)",
            (PfOrder::Reversed, SignConvention::Unsigned) => "REVERSED/UNSIGNED",
            (PfOrder::Reversed, SignConvention::AlternatingPlus) => "REVERSED/ALTERNATING(+)",
            (PfOrder::Reversed, SignConvention::AlternatingMinus) => "REVERSED/ALTERNATING(-)",
        }
    }
}

/// All six combinations, forward order first.
pub fn be_conventions() -> Vec<BeConvention> {
    let mut v = Vec::new();
    for order in [PfOrder::Forward, PfOrder::Reversed] {
        for signs in [SignConvention::Unsigned, SignConvention::AlternatingPlus, SignConvention::AlternatingMinus] {
            v.push(BeConvention { order, signs });
        }
    }
    v
}

/// `d_1 = [±Pf …]`, `d_2 = (a_ij)`, `d_3 = d_1ᵀ` on the generic skew matrix
/// of odd order `n = 2r+1`, with `F_1, F_2, F_3` in degrees `r, r+1, 2r+1`.
pub fn be_complex(n: usize, conv: BeConvention) -> Result<GradedFreeComplex> {
    if n < 3 {
        return Err(Error::InvalidArgument(alloc::string::String::from("order must be at least 3")));
    }
    let x = skew_generic(n)?;
    let ring = x.ring().clone();
    let pf = pf_ideal_maximal(&x)?;
    let r = (n - 1) / 2;
    let entry = |l: usize| {
        let p = match conv.order {
            PfOrder::Forward => pf.gens()[l - 1].clone(),
            PfOrder::Reversed => pf.gens()[n - l].clone(),
        };
        let negate = match conv.signs {
            SignConvention::Unsigned => false,
            SignConvention::AlternatingPlus => l % 2 == 0,
            SignConvention::AlternatingMinus => l % 2 == 1,
        };
        if negate {
            -p
        } else {
            p
        }
    };
    let d1 = PolyMatrix::from_fn(&ring, 1, n, |_, j| entry(j + 1));
    let d2 = PolyMatrix::from_fn(&ring, n, n, |i, j| generic_d2_entry(&ring, n, i + 1, j + 1));
    let d3 = PolyMatrix::from_fn(&ring, n, 1, |i, _| entry(i + 1));
    let r = r as u32;
    let degrees = alloc::vec![
        alloc::vec![0],
        alloc::vec![r; n],
        alloc::vec![r + 1; n],
        alloc::vec![2 * r + 1],
    ];
    GradedFreeComplex::new(&ring, alloc::vec![d1, d2, d3], degrees)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A minor-ideal dimension ran out of budget.
    Partial,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Partial => "PARTIAL",
        }
    }
}

/// Outcome of [`be_verify`]. Codimension stands in for grade, which agree
/// over a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeReport {
    pub is_complex: bool,
    pub is_minimal: bool,
    /// Expected ranks `r_1, r_2, r_3`.
    pub expected_ranks: [usize; 3],
    /// Whether `I_{r_i+1}(d_i) = 0`.
    pub rank_bounds: [bool; 3],
    /// `codim I_{r_i}(d_i)`, or `None` when out of budget.
    pub codims: [Option<usize>; 3],
    pub acyclic: Verdict,
}

/// Checks `d∘d = 0`, minimality, and the exactness criterion on a length-three
/// complex with ranks `(1, n, n, 1)`.
pub fn be_verify(c: &GradedFreeComplex, budget: &dyn Budget) -> Result<BeReport> {
    let ranks = c.ranks();
    if ranks.len() != 4 || ranks[0] != 1 || ranks[3] != 1 || ranks[1] != ranks[2] {
        return Err(Error::ShapeMismatch);
    }
    let n = ranks[1];
    let ring = c.ring().clone();
    let ds = c.differentials();
    let expected = [1, n - 1, 1];
    let rank_bounds = [true, determinant(&ds[1])?.is_zero(), true];
    let mut codims = [None; 3];
    for (i, d) in ds.iter().enumerate() {
        let gens = minors(d, expected[i], None, None)?;
        let ideal = IdealHandle::new(&ring, gens)?;
        codims[i] = match dimension(&ideal, budget) {
            Ok((_, codim)) => Some(codim),
            Err(Error::UnitIdeal) => Some(ring.nvars() + 1),
            Err(Error::BudgetExceeded(_)) => None,
            Err(e) => return Err(e),
        };
    }
    let is_complex = c.is_complex()?;
    let acyclic = if !is_complex || !rank_bounds.iter().all(|&b| b) {
        Verdict::Fail
    } else if codims.iter().any(|c| c.is_none()) {
        Verdict::Partial
    } else if codims.iter().enumerate().all(|(i, c)| c.unwrap() > i) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(BeReport {
        is_complex,
        is_minimal: ds.iter().all(|d| d.has_no_units()),
        expected_ranks: expected,
        rank_bounds,
        codims,
        acyclic,
    })
}
