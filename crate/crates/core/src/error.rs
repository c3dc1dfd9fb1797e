use thiserror::Error;

/// Errors raised by the library.
///
/// `Consistency` is reserved for violated internal invariants: a constructive
/// procedure whose hypotheses held but which failed to produce its witness.
/// Seeing one means a bug, never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0} does not fit in 128 bits")]
    Overflow(String),

    #[error("invalid family: {0}")]
    Validation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported uniformity: {0}")]
    UnsupportedUniformity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("search budget exhausted after {nodes} nodes ({millis} ms)")]
    Resource { nodes: u64, millis: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
