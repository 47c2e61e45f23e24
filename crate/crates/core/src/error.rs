use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("projection onto {0} leaves an empty word")]
    EmptyProjection(String),

    #[error("language is not 0-1-symmetric: {witness} is a member but its complement is not")]
    NotSymmetric { witness: String },

    #[error("combinator `{op}` is not supported on context-free grammars")]
    UnsupportedCombinator { op: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction for {recipe} failed verification: {detail}")]
    VerificationFailed { recipe: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }
}
