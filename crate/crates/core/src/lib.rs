//! Exact symbolic computation for Pfaffian ideals of skew-symmetric
//! matrices, their Rees algebras and diagonal subalgebras.
//!
//! Everything here is pure computation over `alloc`; clocks, files and the
//! command line live in the `pfrees` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod budget;
pub mod coeff;
pub mod combinat;
pub mod covergraph;
pub mod diagonal;
pub mod error;
pub mod groebner;
pub mod koszulcheck;
pub mod matalg;
pub mod orders;
pub mod pfideal;
pub mod polyring;
pub mod rees;
pub mod resolution;

pub use budget::{Budget, StepBudget, Unlimited};
pub use error::{BudgetExceeded, Error, Result};
pub use polyring::{ring_make, Bidegree, Monomial, MonomialOrder, OrderKind, Polynomial, Ring, RingDescriptor, VarBlock};
