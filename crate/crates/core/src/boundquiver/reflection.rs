//! Bernstein-Gelfand-Ponomarev reflection functors for hereditary algebras.

use serde::{Deserialize, Serialize};

use super::{Arrow, BoundQuiverAlgebra, BoundQuiverError, Representation};
use crate::exactalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// At a sink, via the kernel of the incoming maps.
    Plus,
    /// At a source, via the cokernel of the outgoing maps.
    Minus,
}

/// The path algebra with every arrow at `v` reversed; arrow indices and names are kept.
pub fn reflected_algebra(alg: &BoundQuiverAlgebra, v: usize) -> BoundQuiverAlgebra {
    let arrows = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            if a.src == v || a.tgt == v {
                Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }
            } else {
                a.clone()
            }
        })
        .collect();
    BoundQuiverAlgebra::new(alg.quiver().with_arrows(arrows), vec![], alg.field())
        .expect("reflecting a hereditary algebra keeps it acyclic")
}

pub fn bgp_reflect(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    v: usize,
    direction: Direction,
) -> Result<(BoundQuiverAlgebra, Representation), BoundQuiverError> {
    m.check(alg)?;
    if !alg.is_hereditary() {
        return Err(BoundQuiverError::NotHereditary);
    }
    let q = alg.quiver();
    let f = alg.field();
    let mut out = m.clone();
    match direction {
        Direction::Plus => {
            if !q.is_sink(v) {
                return Err(BoundQuiverError::WrongVertexType);
            }
            let inc = q.arrows_into(v);
            let total: usize = inc.iter().map(|&a| m.dims[q.arrows()[a].src]).sum();
            let mut phi = Matrix::zeros(f, m.dims[v], 0);
            for &a in &inc {
                phi = phi.hstack(&m.maps[a]);
            }
            let phi = if inc.is_empty() { Matrix::zeros(f, m.dims[v], total) } else { phi };
            let k = phi.kernel_matrix();
            out.dims[v] = k.cols();
            let mut row = 0;
            for &a in &inc {
                let d = m.dims[q.arrows()[a].src];
                out.maps[a] = k.submatrix(row, row + d, 0, k.cols());
                row += d;
            }
        }
        Direction::Minus => {
            if !q.is_source(v) {
                return Err(BoundQuiverError::WrongVertexType);
            }
            let outg = q.arrows_out_of(v);
            let total: usize = outg.iter().map(|&a| m.dims[q.arrows()[a].tgt]).sum();
            let mut psi = Matrix::zeros(f, 0, m.dims[v]);
            for &a in &outg {
                psi = psi.vstack(&m.maps[a]);
            }
            let psi = if outg.is_empty() { Matrix::zeros(f, total, m.dims[v]) } else { psi };
            let proj = psi.transpose().kernel_matrix().transpose();
            out.dims[v] = proj.rows();
            let mut col = 0;
            for &a in &outg {
                let d = m.dims[q.arrows()[a].tgt];
                out.maps[a] = proj.submatrix(0, proj.rows(), col, col + d);
                col += d;
            }
        }
    }
    Ok((reflected_algebra(alg, v), out))
}
