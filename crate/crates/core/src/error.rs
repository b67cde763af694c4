use thiserror::Error;

/// Errors raised by the library's checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A triple that was required to solve `a^n + b^n = c^n` does not.
    #[error("not a solution: {0}")]
    NotASolution(String),
    /// A triple that was required to satisfy `a^2 + b^2 = c^2` does not.
    #[error("not a Pythagorean triple: {0}")]
    NotPythagorean(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
