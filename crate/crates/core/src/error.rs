use std::fmt;

use thiserror::Error;

/// Position and reason attached to every rejected text input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column.
    pub column: usize,
    pub message: String,
}

impl ParseDiagnostic {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseDiagnostic {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance must have at least one variable")]
    EmptyInstance,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("entry ({i}, {j}) is below the diagonal")]
    LowerTriangle { i: usize, j: usize },

    #[error("duplicate entry ({i}, {j})")]
    DuplicateEntry { i: usize, j: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid restriction: {0}")]
    Restriction(String),

    #[error("oracle capacity exceeded: {free} free variables (limit {limit})")]
    Capacity { free: usize, limit: usize },

    #[error("subclass violation: {0}")]
    SubclassViolation(String),

    #[error("inconsistent input: {0}")]
    Inconsistency(String),

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error at {0}")]
    Parse(#[from] ParseDiagnostic),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
