use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("retry cap of {cap} draws exhausted without a genus-one combination")]
    RetryCapExceeded { cap: usize },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("not a homomorphism: edge ({0}, {1}) maps to a non-edge")]
    NotHomomorphism(usize, usize),

    #[error("chromatic number is {actual}, expected {expected}")]
    ChromaticMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }
}
