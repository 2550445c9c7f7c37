//! Wall-clock budgets.

use std::cell::Cell;
use std::time::{Duration, Instant};

use pfrees_core::Budget;

/// Exhausted once the deadline has passed. The clock is read every
/// `stride` polls.
#[derive(Debug)]
pub struct Deadline {
    end: Option<Instant>,
    stride: u32,
    polls: Cell<u32>,
    hit: Cell<bool>,
}

impl Deadline {
    pub fn after(seconds: f64) -> Self {
        let end = if seconds.is_finite() && seconds > 0.0 {
            Instant::now().checked_add(Duration::from_secs_f64(seconds))
        } else {
            None
        };
        Deadline { end, stride: 64, polls: Cell::new(0), hit: Cell::new(false) }
    }

    pub fn unlimited() -> Self {
        Deadline { end: None, stride: 64, polls: Cell::new(0), hit: Cell::new(false) }
    }

    /// True once any poll reported exhaustion.
    pub fn was_hit(&self) -> bool {
        self.hit.get()
    }
}

impl Budget for Deadline {
    fn exhausted(&self) -> bool {
        if self.hit.get() {
            return true;
        }
        let Some(end) = self.end else {
            return false;
        };
        let p = self.polls.get().wrapping_add(1);
        self.polls.set(p);
        if !p.is_multiple_of(self.stride) {
            return false;
        }
        let out = Instant::now() >= end;
        self.hit.set(out);
        out
    }
}

/// Name of the environment variable overriding budgets, in seconds.
pub const BUDGET_ENV: &str = "PFREES_BUDGET";

/// Budget in seconds: the command-line value, else the environment
/// variable, else the config file, else `default`.
pub fn resolve_seconds(flag: Option<f64>, config: Option<f64>, default: f64) -> f64 {
    if let Some(s) = flag {
        return s;
    }
    if let Some(s) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<f64>().ok()) {
        return s;
    }
    config.unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_unlimited() {
        let d = Deadline::after(0.0);
        for _ in 0..1000 {
            assert!(!d.exhausted());
        }
    }

    #[test]
    fn tiny_deadline_expires() {
        let d = Deadline::after(1e-9);
        std::thread::sleep(Duration::from_millis(2));
        assert!((0..200).any(|_| d.exhausted()));
        assert!(d.was_hit());
    }

    #[test]
    fn flag_wins() {
        assert_eq!(resolve_seconds(Some(3.0), Some(5.0), 7.0), 3.0);
    }
}
