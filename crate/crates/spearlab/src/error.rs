use crate::rational::Rational;
use thiserror::Error;

/// Errors shared by every layer of the crate.
///
/// Resource-cap variants are kept separate from input errors so that callers
/// (notably the CLI) can map them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("input does not span the full dimension")]
    NotFullDimensional,
    #[error("body is unbounded")]
    UnboundedBody,
    #[error("body is empty")]
    EmptyBody,
    #[error("origin is not strictly interior to the body")]
    OriginNotInterior,
    #[error("simplex pivot cap of {limit} exceeded")]
    PivotCapExceeded { limit: u64 },
    #[error("vertex cap of {limit} exceeded during enumeration")]
    VertexCapExceeded { limit: usize },
    #[error("vector has norm {norm}, expected exactly 1")]
    NotUnitNorm { norm: Rational },
    #[error("functional has dual norm {norm}, expected exactly 1")]
    NotUnitDualNorm { norm: Rational },
    #[error("operator has norm {norm}, expected exactly 1")]
    NotNormOne { norm: Rational },
    #[error("set element at index {index} lies outside the unit ball")]
    ElementOutsideBall { index: usize },
    #[error("set of vectors is empty")]
    EmptySet,
    #[error("direct sums need at least two summands")]
    TooFewSummands,
    #[error("block sums need at least two operators")]
    EmptyOperatorList,
    #[error("epsilon must be positive")]
    NonpositiveEpsilon,
    #[error("operator spaces do not match")]
    SpaceMismatch,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors caused by hitting a configured resource cap rather
    /// than by bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::PivotCapExceeded { .. } | Error::VertexCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
