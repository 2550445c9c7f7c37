//! The matrix families: generic, tridiagonal, the block form `[[O, A], [-A^T, B]]`
//! and arbitrary sparsity patterns.

use alloc::vec::Vec;

use super::matrix::SkewMatrix;
use crate::error::{Error, Result};
use crate::polyring::{ring_make, x_name, Polynomial};

/// Skew matrix of order `n` with a fresh variable `x{i}_{j}` at every listed
/// position `(i, j)` (1-based, `i < j`) and zeros elsewhere. The ring's
/// X-block lists the variables in lexicographic order of their positions.
pub fn skew_custom(n: usize, pattern: &[(usize, usize)]) -> Result<SkewMatrix> {
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(pattern.len());
    for &(i, j) in pattern {
        if i == 0 || j > n || i >= j {
            return Err(Error::IndexOutOfRange(i, j));
        }
        pairs.push((i, j));
    }
    pairs.sort_unstable();
    pairs.dedup();
    let names: Vec<_> = pairs.iter().map(|&(i, j)| x_name(i, j)).collect();
    let ring = ring_make(&names, names.len(), 0, 0)?;
    Ok(SkewMatrix::from_upper(&ring, n, |i, j| match pairs.binary_search(&(i + 1, j + 1)) {
        Ok(v) => Polynomial::var(&ring, v),
        Err(_) => Polynomial::zero(&ring),
    }))
}

/// Every position above the diagonal.
pub fn full_pattern(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Generic skew matrix of odd order `n`.
pub fn skew_generic(n: usize) -> Result<SkewMatrix> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    skew_custom(n, &full_pattern(n))
}

/// Generic skew matrix of any order.
pub fn skew_generic_any(n: usize) -> SkewMatrix {
    skew_custom(n, &full_pattern(n)).expect("full pattern is in range")
}

pub fn tridiagonal_pattern(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// Tridiagonal skew matrix of odd order `n >= 3`: `x{i}_{i+1}` on the
/// superdiagonal.
pub fn skew_tridiagonal(n: usize) -> Result<SkewMatrix> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 {
        return Err(Error::InvalidArgument("tridiagonal order must be at least 3".into()));
    }
    skew_custom(n, &tridiagonal_pattern(n))
}

/// Tridiagonal skew matrix of any order.
pub fn skew_tridiagonal_any(n: usize) -> SkewMatrix {
    skew_custom(n, &tridiagonal_pattern(n)).expect("pattern is in range")
}

/// Positions of the block matrix of order `2r+1`: zero `(r+1)x(r+1)` corner,
/// generic `(r+1)x r` block `A` and generic skew `r x r` block `B`.
pub fn blockx4_pattern(r: usize) -> Vec<(usize, usize)> {
    let n = 2 * r + 1;
    full_pattern(n).into_iter().filter(|&(_, j)| j >= r + 2).collect()
}

pub fn skew_blockx4(r: usize) -> Result<SkewMatrix> {
    skew_custom(2 * r + 1, &blockx4_pattern(r))
}

/// The sparse order-7 pattern with ten entries used for the fourth-order
/// Pfaffian census.
pub const SPARSE7_PATTERN: [(usize, usize); 10] =
    [(1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (3, 6), (4, 5), (4, 7), (5, 6), (6, 7)];

pub fn skew_sparse7() -> SkewMatrix {
    skew_custom(7, &SPARSE7_PATTERN).expect("pattern is in range")
}
