//! Exact computer algebra for bound quiver algebras and bilinear lattices.

pub mod exactalg;

pub use exactalg::{Field, Matrix, MatrixError, Scalar};
pub mod boundquiver;
pub mod lattice;
pub mod speciesdims;
pub mod verify;
