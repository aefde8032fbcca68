use thiserror::Error;

/// Errors raised by parsers, builders and the capped exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    /// An exhaustive search would run past its configured size bound.
    #[error("undecided at configured scale: {what} is {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("staircase condition violated at cell ({row}, {col})")]
    NotStaircase { row: usize, col: usize },

    /// A constructed representation failed to reproduce its input. Always a bug.
    #[error("representation does not reproduce the input: {0}")]
    RoundTrip(String),

    #[error("index {index} is out of range for family {family}")]
    FamilyIndex { family: String, index: usize },

    #[error("unknown family {0}")]
    UnknownFamily(String),

    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
