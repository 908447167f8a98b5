use thiserror::Error;

use crate::group::TableDefect;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded { what: &'static str, size: usize, bound: usize },

    #[error("invalid group table: {0}")]
    InvalidTable(TableDefect),

    /// A caller-supplied object does not satisfy the operation's precondition.
    #[error("{0}")]
    Precondition(String),

    /// A check that a theorem guarantees has failed. This is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for errors caused by the caller's input rather than by a failed
    /// theorem-backed check.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub(crate) fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded { what, size, bound })
    } else {
        Ok(())
    }
}
