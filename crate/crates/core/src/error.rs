//! Shared error type for the whole library.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("proper ideal required")]
    ProperIdealRequired,

    #[error("Jacobi identity failed on basis triple ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("resource limit exceeded: {what} has size {size}, limit {limit}")]
    ResourceLimit {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
