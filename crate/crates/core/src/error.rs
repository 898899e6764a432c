use thiserror::Error;

/// Errors raised by the algebra, series and umbral layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("divisor has order {divisor} but dividend has order {dividend}")]
    DivisorOrderTooHigh { divisor: usize, dividend: usize },

    #[error("leading coefficient is not a unit")]
    NonUnitLeading,

    #[error("series is not invertible (constant term is not a unit)")]
    NotInvertible,

    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstantTerm,

    #[error("series is not a delta series (order {order}, unit linear term required)")]
    NotDelta { order: usize },

    #[error("log requires constant term 1")]
    LogConstantTerm,

    #[error("exp requires constant term 0")]
    ExpConstantTerm,

    #[error("truncation order {available} too small, order {required} required")]
    TruncationExceeded { required: usize, available: usize },

    #[error("polynomial is not divisible by x")]
    NotDivisibleByX,

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
