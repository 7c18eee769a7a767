//! Error taxonomy shared by the whole crate.
//!
//! Variants map onto process exit codes in the CLI: usage and domain errors
//! signal bad input (exit 2), resource errors signal a breached cap (exit 3),
//! construction and internal errors signal a failed self-check (exit 1).

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The caller combined incompatible values or violated a precondition.
    #[error("usage error: {0}")]
    Usage(String),
    /// A value outside the mathematical domain of an operation (e.g. inverting zero).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured cap (closure size, lattice size, oracle scale) was exceeded.
    #[error("resource error: {0}")]
    Resource(String),
    /// A constructed object failed its verification contract.
    #[error("construction error: {0}")]
    Construction(String),
    /// An internal invariant that should be unreachable was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Exit code the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Domain(_) => 2,
            Error::Resource(_) => 3,
            Error::Construction(_) | Error::Internal(_) => 1,
        }
    }
}
