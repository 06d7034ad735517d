use thiserror::Error;

use crate::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("{len} coefficients do not fit formal degree {formal_degree}")]
    DegreeOverflow { len: usize, formal_degree: usize },

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("inner series of a composition must have zero constant term, found {0}")]
    CompositionDomain(Rational),

    #[error("polynomial is not reciprocal for formal degree {formal_degree}: coefficient {low} differs from coefficient {high}")]
    NotReciprocal {
        formal_degree: usize,
        low: usize,
        high: usize,
    },

    #[error("index {index} out of range: {reason}")]
    Index { index: i64, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("hypothesis violated at index {index}: {reason}")]
    Hypothesis { index: usize, reason: String },

    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Vec<String> },

    #[error("complex has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("claim {claimed} under `{hypothesis}` is contradicted by the exact witness {witness}")]
    ClaimRefuted {
        r: usize,
        hypothesis: String,
        claimed: String,
        witness: Rational,
    },
}
