//! Error type shared by the whole kernel.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A generator's index falls outside the declared space.
    #[error("generator {gen} out of range for space (n={n}, r={r})")]
    IndexOutOfRange { gen: String, n: usize, r: usize },

    /// Two operands belong to different generator spaces.
    #[error("operands belong to different generator spaces")]
    SpaceMismatch,

    /// An element fails a degree requirement (wrong total weight or bidegree).
    #[error("degree error: {0}")]
    Degree(String),

    /// A documented operation precondition is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The flow series failed to terminate within its hard bound.
    #[error("flow series did not terminate: hamiltonian does not act nilpotently")]
    NonNilpotent,

    /// The transition matrix has no inverse over the coefficient ring.
    #[error("transition matrix is not invertible over the coefficient ring")]
    NonInvertible,

    /// Two supposedly-equivalent computation routes disagreed.
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),

    /// Syntax or semantic error in textual input, with source position.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
