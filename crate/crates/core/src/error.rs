use thiserror::Error;

/// Errors raised by the library. Every operation either succeeds exactly or
/// fails with one of these; nothing is silently truncated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size guard exceeded: {what} = {value} (limit {limit})")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid pair partition: {0}")]
    InvalidPartition(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("sector mismatch: expected {expected}-particle state, found word of length {found}")]
    SectorMismatch { expected: usize, found: usize },

    #[error("boundary has {len} entries but a table of depth {depth} was requested")]
    BoundaryTooShort { len: usize, depth: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::SizeGuard { what, value, limit })
        } else {
            Ok(())
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
