//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable {0} has no assigned value")]
    UnassignedVariable(String),

    #[error("not multilinear: {0}")]
    NotMultilinear(String),

    #[error("budget exceeded: {what} requires {required}, allowed {allowed}")]
    BudgetExceeded {
        what: String,
        required: u64,
        allowed: u64,
    },

    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid algebra descriptor `{text}`: {message}")]
    BadDescriptor { text: String, message: String },

    #[error("size constraint violated: {0}")]
    SizeConstraint(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit status the CLI maps this error to: 3 for exceeded budgets,
    /// 2 for every other rejected input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        }
    }
}
