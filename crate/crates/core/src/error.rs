use thiserror::Error;

/// Errors produced by group construction, enumeration and counting.
///
/// The three variants map onto the CLI exit codes: `InvalidArgument` and
/// `Parse` are usage errors (exit 2), `ResourceLimit` is a cap violation
/// (exit 3). Verification *failures* are not errors; they are reported as
/// `CheckStatus::Fail`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
