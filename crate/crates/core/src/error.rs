use thiserror::Error;

use crate::chowfy::MatroidError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{what}: n = {n} exceeds the resource guard {max} (override with MCQ_MAX_N)")]
    Guard {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// Two computations that must agree did not.
    #[error("identity `{name}` failed: {witness}")]
    Identity { name: String, witness: String },

    #[error(transparent)]
    Matroid(#[from] MatroidError),

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn identity(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Identity {
            name: name.into(),
            witness: witness.into(),
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
