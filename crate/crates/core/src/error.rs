use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("width mismatch: expected {expected} qubits, got {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{location}: {message}")]
    Format { location: String, message: String },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid Ising instance: {0}")]
    InvalidIsing(String),

    #[error("size limit exceeded: {what} is {value}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid error budget: {0}")]
    InvalidBudget(String),

    #[error("invalid sampler: {0}")]
    InvalidSampler(String),

    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn format(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            location: location.into(),
            message: message.into(),
        }
    }
}
