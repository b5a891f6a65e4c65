//! Error types shared across the crate.
//!
//! [`Error`] covers semantic failures of otherwise well-formed inputs
//! (dimension mismatches, singular matrices, violated preconditions).
//! [`ParseError`] covers malformed textual input and is kept separate so
//! callers can distinguish "the file is garbage" from "the file describes
//! an impossible request".

use thiserror::Error;

/// Semantic failure: the inputs are well-formed but the request cannot be
/// carried out on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} is outside dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("coordinate indices must be at least 1")]
    ZeroIndex,

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("matrix rows must all have the same length")]
    RaggedRows,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix must be square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("the zero matrix has no full-rank factorization")]
    ZeroMatrix,

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("gram matrix is not conjugate-symmetric")]
    NotConjugateSymmetric,

    #[error("gram matrix is not positive definite (leading principal minor {order} is not a positive real)")]
    NotPositiveDefinite { order: usize },

    #[error("subspace is not contained in the given ambient subspace")]
    NotContained,

    #[error("vector does not lie in the span of the given basis")]
    NotInSpan,

    #[error("subspaces do not form a direct sum: {0}")]
    NotDirectSum(String),

    #[error("decomposition is not invariant under the operator")]
    NotInvariant,

    #[error("block geometries differ: {0}")]
    GeometryMismatch(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Malformed textual input: bad JSON, bad scalar syntax, or a value that
/// violates the file schema.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("invalid scalar {text:?} in {context}: {reason}")]
    Scalar {
        context: String,
        text: String,
        reason: String,
    },

    #[error("invalid value in {context}: {reason}")]
    Value { context: String, reason: String },
}

impl ParseError {
    pub fn scalar(context: impl Into<String>, text: impl Into<String>, reason: impl Into<String>) -> Self {
        ParseError::Scalar {
            context: context.into(),
            text: text.into(),
            reason: reason.into(),
        }
    }

    pub fn value(context: impl Into<String>, reason: impl Into<String>) -> Self {
        ParseError::Value {
            context: context.into(),
            reason: reason.into(),
        }
    }
}
