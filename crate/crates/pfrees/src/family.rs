//! The skew-symmetric matrix families selectable from the command line.

use std::path::PathBuf;

use pfrees_core::matalg::{skew_blockx4, skew_generic, skew_sparse7, skew_tridiagonal, SkewMatrix};
use pfrees_core::pfideal::{blockx4_generators, pf_ideal_general, pf_ideal_maximal, tridiagonal_generators_closed_form};
use pfrees_core::{Polynomial, Ring};

use crate::error::CliError;
use crate::formats::parse_skew_matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Generic(usize),
    Tridiagonal(usize),
    BlockX4(usize),
    Sparse7,
    Custom(PathBuf),
}

impl Family {
    pub fn matrix(&self) -> Result<SkewMatrix, CliError> {
        Ok(match self {
            Family::Generic(n) => skew_generic(*n)?,
            Family::Tridiagonal(n) => skew_tridiagonal(*n)?,
            Family::BlockX4(r) => skew_blockx4(*r)?,
            Family::Sparse7 => skew_sparse7(),
            Family::Custom(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(p.display().to_string(), e))?;
                parse_skew_matrix(&text)?
            }
        })
    }

    pub fn describe(&self) -> String {
        match self {
            Family::Generic(n) => format!("generic {n}"),
            Family::Tridiagonal(n) => format!("tridiagonal {n}"),
            Family::BlockX4(r) => format!("blockx4 {r}"),
            Family::Sparse7 => String::from("sparse7"),
            Family::Custom(p) => format!("custom {}", p.display()),
        }
    }

    /// Generators in closed form, where the family has one.
    pub fn closed_form(&self) -> Result<Vec<Polynomial>, CliError> {
        match self {
            Family::Tridiagonal(n) if n % 2 == 1 && *n >= 3 => Ok(tridiagonal_generators_closed_form((n - 1) / 2)?),
            Family::BlockX4(r) => Ok(blockx4_generators(*r)?),
            _ => Err(CliError::Usage(format!("no closed form for {}", self.describe()))),
        }
    }
}

/// Ring and generators of `Pf_t(X)`; `t = None` means the maximal
/// Pfaffians for odd order and the Pfaffian itself for even order.
pub fn pfaffian_generators(x: &SkewMatrix, t: Option<usize>) -> Result<(Ring, Vec<Polynomial>), CliError> {
    let ring = x.ring().clone();
    let n = x.order();
    if n == 0 {
        return Ok((ring, Vec::new()));
    }
    let ideal = match t {
        Some(t) => pf_ideal_general(x, t)?,
        None if n % 2 == 1 => pf_ideal_maximal(x)?,
        None => pf_ideal_general(x, n)?,
    };
    Ok((ring, ideal.gens().to_vec()))
}
