use thiserror::Error;

/// Failures surfaced by every numerical routine in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{what} = {value} exceeds the supported range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    #[error("accuracy target missed in {context}: coarse {coarse:e} vs refined {refined:e}")]
    Accuracy {
        context: String,
        coarse: f64,
        refined: f64,
    },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("design matrix is rank deficient or ill-conditioned (condition number {0:e})")]
    Conditioning(f64),

    #[error("cache file rejected: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn range(what: &'static str, value: f64, limit: f64) -> Self {
        Error::OutOfRange { what, value, limit }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
