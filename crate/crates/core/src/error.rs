use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A structural precondition failed; `index` is the least integer witnessing it.
    #[error("precondition violated at {index}: {what}")]
    Precondition { index: usize, what: String },

    #[error("{what} = {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// A construction produced a pair that fails its own R-equality check.
    #[error("verification failed at {index}: {what}")]
    Verification { index: usize, what: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn precondition(index: usize, what: impl Into<String>) -> Error {
    Error::Precondition {
        index,
        what: what.into(),
    }
}
