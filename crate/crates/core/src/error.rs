use num_rational::BigRational;
use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
///
/// Variants carry rendered text rather than generic domain elements so that a
/// single error type serves every domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field characteristic {0} is out of range (must be below 2^31)")]
    CharacteristicTooLarge(u64),

    #[error("element {element} does not belong to {domain}")]
    NotInDomain { element: String, domain: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("point is not a zero (f = {value})")]
    NotAZero { value: String },

    #[error("point {point} is already integral")]
    PointIsIntegral { point: String },

    #[error("polynomial is not a quadratic form (it has linear or constant terms)")]
    NotAForm,

    #[error("value {value} does not lie in the ring")]
    ValueNotInRing { value: String },

    #[error("f2 vanishes on direction {direction}")]
    IsotropicDirection { direction: String },

    #[error("no admissible rounding witness for {point} within window {window} at step {step} (minimum norm reached: {})", fmt_min(.min_norm))]
    OracleNotFound {
        step: usize,
        point: String,
        window: u32,
        min_norm: Option<BigRational>,
    },

    #[error("gave up after {attempts} attempts")]
    AttemptBudgetExhausted { attempts: u32 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn fmt_min(m: &Option<BigRational>) -> String {
    match m {
        Some(r) => r.to_string(),
        None => "none".to_owned(),
    }
}
