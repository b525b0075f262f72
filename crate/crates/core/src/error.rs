use thiserror::Error;

/// Failures raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("evaluation at zero of a polynomial with negative exponents")]
    ZeroBase,
    #[error("expression is not a polynomial: {0}")]
    NonPolynomial(String),
    #[error("{what} has size {size}, above the configured bound {bound}")]
    TooLarge { what: String, size: u128, bound: u128 },
    #[error("work bound exceeded: {needed} iterations requested, bound is {bound}")]
    WorkBoundExceeded { needed: u128, bound: u128 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
