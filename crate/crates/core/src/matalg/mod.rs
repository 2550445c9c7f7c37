//! Polynomial matrices, determinants, minors and Pfaffians.

mod det;
mod families;
mod matrix;

pub use det::{determinant, determinant_cofactor, minors, pfaffian};
pub use families::{
    blockx4_pattern, full_pattern, skew_blockx4, skew_custom, skew_generic, skew_generic_any, skew_sparse7,
    skew_tridiagonal, skew_tridiagonal_any, tridiagonal_pattern, SPARSE7_PATTERN,
};
pub use matrix::{PolyMatrix, SkewMatrix};

#[cfg(test)]
mod tests;
