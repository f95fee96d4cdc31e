use thiserror::Error;

use crate::quadratic_ring::RingId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("d = {0} is not one of the Euclidean values 1, 2, 3, 7, 11")]
    InvalidRing(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: O_{} vs O_{}", .left.d(), .right.d())]
    RingMismatch { left: RingId, right: RingId },
    #[error("determinant is {0}, expected 1")]
    Determinant(String),
    #[error("determinant {0} is not a unit")]
    NonUnitDeterminant(String),
    #[error("bottom-left entry is zero")]
    ZeroGamma,
    #[error("malformed upper-triangular matrix: {0}")]
    MalformedUpper(&'static str),
    #[error("generator L does not exist for d = {0}")]
    NoLGenerator(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("letter {0} has no inverse in a semigroup component")]
    NotInvertible(char),
    #[error("scan would enumerate {count} elements, budget is {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error("unknown embedding {0}")]
    UnknownSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
