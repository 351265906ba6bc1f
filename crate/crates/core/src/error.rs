use thiserror::Error;

use crate::expr::ParseError;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("backend mismatch: expected {expected}, found {found}")]
    BackendMismatch { expected: String, found: String },

    #[error("invalid backend specification `{0}`")]
    InvalidBackend(String),

    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("cubic scalars have different parameters")]
    ParamsMismatch,

    #[error("cubic scalars have different carriers")]
    CarrierMismatch,

    #[error("direction {0} is not in the carrier")]
    DirectionNotInCarrier(usize),

    #[error("direction {0} is already in the carrier")]
    DirectionInCarrier(usize),

    #[error("direction {k} is out of range for order {n}")]
    DirectionOutOfRange { k: usize, n: usize },

    #[error("order {0} exceeds the supported maximum {1}")]
    OrderTooLarge(usize, usize),

    #[error("malformed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("{0} is not a unit")]
    NotUnit(String),

    #[error("parameter {0} is neither zero nor a unit")]
    NonUnitParameter(String),

    #[error("division by a non-unit")]
    DivisionByNonUnit,

    #[error("float-only primitive `{0}` evaluated on an exact carrier")]
    FloatOnlyPrimitive(String),

    #[error("primitive `{0}` cannot be lifted to this ring")]
    UnsupportedPrimitive(String),

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("arrows are not composable: {0}")]
    NotComposable(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
