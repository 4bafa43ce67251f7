//! Fixtures shared by the benchmarks.

use cda_core::boundquiver::constructors::{Instance, Lambda};
use cda_core::{Field, Matrix};

/// Simply-laced instance with points 0, 1, 2, … over `field`.
pub fn instance(weights: &[u32], field: Field) -> Instance {
    let lambdas = (0..weights.len())
        .map(|i| Lambda::parse(field, &i.to_string()).expect("small integer point"))
        .collect();
    Instance::new(weights.to_vec(), lambdas, field).expect("valid instance")
}

/// Deterministic dense integer matrix with full rank for every n ≥ 1.
pub fn dense_matrix(n: usize, field: Field) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { n as i64 + 1 } else { ((i * 7 + j * 3) % 5) as i64 - 2 }).collect())
        .collect();
    Matrix::from_i64(field, &rows)
}
