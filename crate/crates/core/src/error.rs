use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension {index} out of range for a context of arity {arity}")]
    InvalidDimension { index: usize, arity: usize },

    #[error("unknown dimension `{0}`")]
    UnknownDimensionName(String),

    #[error("unknown element `{label}` in dimension `{dimension}`")]
    UnknownElement { dimension: String, label: String },

    #[error("element index {index} out of range for dimension `{dimension}`")]
    ElementOutOfRange { dimension: String, index: usize },

    #[error("duplicate element `{label}` in dimension `{dimension}`")]
    DuplicateElement { dimension: String, label: String },

    #[error("arity error: {0}")]
    Arity(String),

    #[error("malformed tuple: {0}")]
    MalformedTuple(String),

    #[error("oracle infeasible: 2^{exponent} subset combinations exceed the cap of {cap}")]
    OracleInfeasible { exponent: u32, cap: u64 },

    #[error("concept limit of {limit} exceeded")]
    ConceptLimit { limit: usize },

    #[error("extension is not a concept: {0}")]
    NotAConcept(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("density must lie in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("invalid dimension sizes: {0}")]
    InvalidSizes(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
