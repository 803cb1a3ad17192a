use thiserror::Error;

use crate::families::Family;
use crate::numerics::DenseMatrix;

/// Errors produced by the matrix, spectral and power routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix data has {len} entries, expected {expected}")]
    BadShape { len: usize, expected: usize },

    #[error("matrix is singular (pivot modulus {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("operation requires family {expected}, got {found}")]
    WrongFamily { expected: &'static str, found: Family },

    #[error("negative power of a singular matrix: eigenvalue k={index} is zero")]
    SingularPower { index: usize },

    #[error("index ({i}, {j}) out of range for n={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("closed-form inverse failed closure check (residual {residual:e})")]
    ClosureFailure { residual: f64 },

    #[error("closed form differs from oracle by {residual:e} (tolerance {tol:e})")]
    VerificationFailed {
        residual: f64,
        tol: f64,
        closed_form: Box<DenseMatrix>,
        oracle: Box<DenseMatrix>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
