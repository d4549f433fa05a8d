use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("invalid input: {0}")]
    Validation(String),
    /// A hypothesis or range condition of a formula does not hold.
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
    /// The input lies outside the families the engine supports.
    #[error("unsupported case: {0}")]
    Unsupported(String),
    /// An identity that must hold failed. Always a bug.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Hypothesis(_) | Error::Unsupported(_) => 2,
            Error::Internal(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Validation(_) => "invalid_input",
            Error::Hypothesis(_) => "hypothesis_failure",
            Error::Unsupported(_) => "unsupported",
            Error::Internal(_) => "internal_assertion",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
