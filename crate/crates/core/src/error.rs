use thiserror::Error;

/// Errors raised by the workbench.
///
/// `Usage` covers malformed arguments (index ranges, mismatched rings),
/// `Domain` covers mathematically invalid inputs (a matrix outside the
/// congruence subgroup, a non-unit determinant), and `Syntax` carries the
/// byte offset of a parse failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn syntax(position: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { position, message: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
