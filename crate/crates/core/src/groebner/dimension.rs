//! Krull dimension from the initial ideal.
//!
//! `dim S/I = dim S/in(I)`, and the latter is the largest size of a set of
//! variables containing the support of no leading monomial. Its complement
//! is a minimum hitting set of the supports, found by branch and bound.

use alloc::string::String;
use alloc::vec::Vec;

use super::IdealHandle;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Dimension and codimension of `ring / ideal`.
pub fn dimension(ideal: &IdealHandle, budget: &dyn Budget) -> Result<(usize, usize)> {
    let n = ideal.ring().nvars();
    if ideal.is_zero() {
        return Ok((n, 0));
    }
    let gb = ideal.default_gb(budget)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let supports: Vec<Vec<usize>> = gb.leads().iter().map(|m| m.support()).collect();
    let d = monomial_dimension(n, &supports)?;
    Ok((d, n - d))
}

/// Dimension of the quotient by the monomial ideal with the given supports.
pub fn monomial_dimension(nvars: usize, supports: &[Vec<usize>]) -> Result<usize> {
    Ok(max_independent_set(nvars, supports)?.len())
}

/// A largest variable set containing no support, sorted ascending.
pub fn max_independent_set(nvars: usize, supports: &[Vec<usize>]) -> Result<Vec<usize>> {
    if nvars > 128 {
        return Err(Error::SearchSpaceExceeded(String::from("more than 128 variables")));
    }
    let mut masks: Vec<u128> = supports.iter().map(|s| s.iter().fold(0u128, |m, &v| m | 1 << v)).collect();
    if masks.contains(&0) {
        return Err(Error::UnitIdeal);
    }
    masks.sort_by_key(|m| m.count_ones());
    masks.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&k| k & m == k) {
            minimal.push(m);
        }
    }
    let mut best = u128::MAX;
    let mut best_size = nvars as u32 + 1;
    search(&minimal, 0, &mut best, &mut best_size);
    let all = if nvars == 128 { u128::MAX } else { (1u128 << nvars) - 1 };
    let free = all & !best;
    Ok((0..nvars).filter(|&v| free >> v & 1 == 1).collect())
}

fn search(sets: &[u128], chosen: u128, best: &mut u128, best_size: &mut u32) {
    let size = chosen.count_ones();
    if size >= *best_size {
        return;
    }
    let open: Vec<u128> = sets.iter().copied().filter(|&s| s & chosen == 0).collect();
    let Some(&pick) = open.iter().min_by_key(|s| s.count_ones()) else {
        *best = chosen;
        *best_size = size;
        return;
    };
    // Disjoint open sets each need a distinct variable.
    let mut used = 0u128;
    let mut lower = 0;
    for &s in &open {
        if s & used == 0 {
            used |= s;
            lower += 1;
        }
    }
    if size + lower >= *best_size {
        return;
    }
    let mut rest = pick;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        search(&open, chosen | 1 << v, best, best_size);
    }
}
