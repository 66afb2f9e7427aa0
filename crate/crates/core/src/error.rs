use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the truncation cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("operad mismatch: {0} vs {1}")]
    OperadMismatch(String, String),

    #[error("basis kind mismatch: {0} vs {1}")]
    KindMismatch(String, String),

    #[error("invalid vertex {vertex} (tree has {count} vertices)")]
    InvalidVertex { vertex: usize, count: usize },

    #[error("invalid partition of {total}: {parts:?}")]
    InvalidPartition { total: usize, parts: Vec<usize> },

    #[error("unknown operad `{0}`")]
    UnknownOperad(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("structure requires a commutative algebra: {0}")]
    NotCommutative(String),

    #[error("axiom `{axiom}` fails: {witness}")]
    AxiomViolation { axiom: String, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}
