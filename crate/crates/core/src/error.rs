use thiserror::Error;

use crate::coeff::Domain;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domain mismatch: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("{0} is not prime; only prime moduli are supported")]
    CompositeModulus(u64),

    #[error("operation requires a field, got {0}")]
    NotAField(Domain),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("multiset of height {height} exceeds n = {n}")]
    HeightOverflow { height: usize, n: usize },

    #[error("polynomial is not S_n-invariant: transposition ({0} {1}) changes it")]
    NotSymmetric(usize, usize),

    #[error("polynomial has a monomial whose slot {slot} word has degree {degree}, not divisible by q = {q}")]
    NotDiagonalInvariant { slot: usize, degree: u32, q: u32 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("wrong arity: expected {expected} words, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("word {word} is not in M({q}): degree not divisible by q")]
    NotInM { word: String, q: u32 },

    #[error("word {word} has degree {degree} <= nq = {bound}; nothing to reduce")]
    NotReducible { word: String, degree: u32, bound: u32 },

    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
