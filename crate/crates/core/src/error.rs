use alloc::string::String;
use alloc::vec::Vec;

use crate::polyring::Polynomial;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("block counts {x}+{y}+{e} do not match {names} variable names")]
    BlockCountMismatch { x: usize, y: usize, e: usize, names: usize },
    #[error("invalid bidegree for variable `{0}`")]
    InvalidBidegree(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("matrix order must be odd, got {0}")]
    EvenOrder(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch")]
    ShapeMismatch,
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("index pair ({0}, {1}) out of range")]
    IndexOutOfRange(usize, usize),
    #[error("minor size {t} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { t: usize, rows: usize, cols: usize },
    #[error("Pfaffian order {0} must be even and at most the matrix order")]
    BadPfaffianOrder(usize),
    #[error("generator set is empty or contains zero")]
    ZeroGenerator,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("generators are not all of the same degree")]
    NotEquigenerated,
    #[error("generator is not a monomial")]
    NotMonomial,
    #[error("the unit ideal has no dimension")]
    UnitIdeal,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("search space exceeded: {0}")]
    SearchSpaceExceeded(String),
    #[error("graph has {0} vertices; enumeration is limited to 24")]
    GraphTooLarge(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("computation budget exceeded")]
    BudgetExceeded(BudgetExceeded),
}

/// Partial state attached to a budget overrun.
#[derive(Debug, Clone, Default)]
pub struct BudgetExceeded {
    /// Basis elements found before the budget ran out.
    pub partial: Vec<Polynomial>,
    /// Pairs still waiting when the computation stopped.
    pub pending_pairs: usize,
}

pub type Result<T> = core::result::Result<T, Error>;
