use thiserror::Error;

/// Crate-wide error type. Everything verdict-affecting is exact, so errors
/// never carry floating point.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("enumeration guard exceeded: graph has {actual} vertices, limit is {limit}; {hint}")]
    GuardExceeded {
        actual: usize,
        limit: usize,
        hint: String,
    },

    #[error("gadget construction failed: {0}")]
    Construction(String),

    #[error("oracle protocol violation: {0}")]
    Protocol(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("cut does not respect clique-internal edges: {0}")]
    NotCliqueRespecting(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
