use thiserror::Error;

/// Errors raised by the bound, scroll and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The formula is not defined (or not asserted) for these parameters.
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("out of range: {0}")]
    Range(String),
    /// Inputs that cannot come from a smooth surface, e.g. an odd numerator in the double point formula.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("scan too long: {0}")]
    ScanTooLong(String),
}

pub type Result<T> = std::result::Result<T, Error>;
