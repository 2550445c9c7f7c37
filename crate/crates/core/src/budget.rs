//! Cooperative computation budgets.
//!
//! The core crate has no clock. Long computations poll a [`Budget`] and stop
//! with [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) once it
//! reports exhaustion. The std companion supplies a wall-clock deadline.

use core::cell::Cell;

pub trait Budget {
    fn exhausted(&self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

/// Allows a fixed number of polls; deterministic stand-in for a clock in tests.
#[derive(Debug)]
pub struct StepBudget {
    left: Cell<u64>,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        StepBudget { left: Cell::new(steps) }
    }
}

impl Budget for StepBudget {
    fn exhausted(&self) -> bool {
        let l = self.left.get();
        if l == 0 {
            return true;
        }
        self.left.set(l - 1);
        false
    }
}

impl<B: Budget + ?Sized> Budget for &B {
    fn exhausted(&self) -> bool {
        (**self).exhausted()
    }
}
