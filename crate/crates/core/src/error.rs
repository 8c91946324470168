use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violated an operation's precondition (size mismatch, containment, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Partition text could not be parsed.
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },

    /// The requested size is above the configured cap.
    #[error("{what}: size {requested} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// An identity or inequality check failed; `witness` names the offending input.
    #[error("verification failed ({check}) at {witness}")]
    Verification { check: String, witness: String },

    /// A scan exceeded its wall-clock budget.
    #[error("time budget of {0}s exhausted")]
    TimeBudget(u64),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn verification(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Verification {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::ResourceLimit {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
