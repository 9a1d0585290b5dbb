use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd({p},{q})={gcd}: p and q must be coprime")]
    NotCoprime { p: BigInt, q: BigInt, gcd: BigInt },

    #[error("division by zero")]
    DivisionByZero,

    #[error("value is not real (it differs from its complex conjugate)")]
    NotReal,

    #[error("determinant is {det}, expected 1")]
    DeterminantNotOne { det: BigInt },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("transcription self-check failed: {0}")]
    Transcription(String),
}

pub type Result<T> = std::result::Result<T, Error>;
