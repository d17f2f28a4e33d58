use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The caller broke a structural precondition (mismatched orders, bad bracket, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A residual had no sign change where a root was required.
    #[error("no root: {0}")]
    NoRoot(String),
    /// The operation is not defined for this input (e.g. no extremal function).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Writing output failed.
    #[error("i/o error: {0}")]
    Io(String),
    /// A name lookup failed.
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
