//! Exact dense linear algebra over ℚ and 𝔽_p.

mod matrix;
pub mod poly;
mod scalar;

pub use matrix::Matrix;
pub use scalar::{parse_rational, Field, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has non-integer entries")]
    NonIntegerEntries,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Free-function forms of the core routines.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}

pub fn inverse(m: &Matrix) -> Result<Matrix, MatrixError> {
    m.inverse()
}

pub fn signature_symmetric(m: &Matrix) -> Result<(usize, usize, usize), MatrixError> {
    m.signature_symmetric()
}

pub fn is_unimodular(m: &Matrix) -> Result<bool, MatrixError> {
    m.is_unimodular()
}

#[cfg(test)]
mod tests;
