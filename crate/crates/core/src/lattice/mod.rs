//! Canonical bilinear lattices attached to symbols.

mod gram;
mod symbol;

pub use gram::{
    coxeter_matrix, display_canonical, display_opposite, expected_signature, gram_both_bases, gram_canonical_basis,
    gram_opposite_basis, gram_s_basis, signature, BasisGram, BilinearLattice, IndexConvention,
};
pub use symbol::{enumerate_symbols, symbol_from_data, Arm, PointDims, RawEpsilon, RepType, Symbol};

use thiserror::Error;

use crate::exactalg::MatrixError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("Coxeter matrix has a non-integer entry")]
    NonIntegralCoxeter,
    #[error("no index convention reproduces the displayed Gram matrix")]
    NoConventionMatches,
    #[error("inconsistent dimension data: {0}")]
    InconsistentDimensions(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
