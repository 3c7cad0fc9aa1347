use thiserror::Error;

/// Everything the library can refuse to do.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "window N={window} is smaller than the last nonzero index {max_index} of the partition"
    )]
    InvalidWindow { window: usize, max_index: usize },

    #[error("bit string {0} is not alternating")]
    NotAlternating(String),

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Precondition(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Stable machine-readable tag used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidWindow { .. } => "invalid-window",
            Error::NotAlternating(_) => "not-alternating",
            Error::NotContained { .. } => "not-contained",
            Error::Domain(_) => "domain",
            Error::Precondition(_) => "precondition",
            Error::Resource(_) => "resource",
            Error::Parse(_) => "parse",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
