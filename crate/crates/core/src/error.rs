use thiserror::Error;

/// Errors raised by the monomial-ideal engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("ambient dimension must be positive")]
    ZeroDimension,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("enumeration box of {0} lattice points exceeds the supported limit")]
    BoxTooLarge(u128),
    #[error("power must be a positive integer")]
    ZeroPower,
    #[error("valuation weights must not all be zero")]
    ZeroWeights,
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
