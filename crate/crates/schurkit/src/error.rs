//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A requested object exceeds the configured dimension cap.
    #[error("resource limit: dimension {needed} exceeds cap {cap}")]
    ResourceLimit { needed: u128, cap: u128 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A matrix or state file is not in the expected format.
    #[error("malformed file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

/// Checks a dimension against a cap, returning a resource error on overflow.
pub fn check_cap(needed: u128, cap: usize) -> Result<usize> {
    if needed > cap as u128 {
        return Err(Error::ResourceLimit { needed, cap: cap as u128 });
    }
    usize::try_from(needed).map_err(|_| Error::ResourceLimit {
        needed,
        cap: usize::MAX as u128,
    })
}
