use thiserror::Error;

/// Errors raised by the series engine, the state constructors and the
/// operator algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series did not converge within {max_terms} terms")]
    TermCapExceeded { max_terms: usize },

    #[error("series is not convergent: {0}")]
    NonConvergent(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("half-integer angular momentum sector is not supported")]
    HalfIntegerUnsupported,
}

impl Error {
    /// True for failures of the numerical machinery itself, as opposed to
    /// bad inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::TermCapExceeded { .. } | Error::NonConvergent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
