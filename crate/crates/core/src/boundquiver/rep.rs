//! Representations of bound quivers: a space per vertex and a matrix per
//! arrow acting on column vectors, so a path α₁⋯α_k acts as M_{α_k}⋯M_{α_1}.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{BoundQuiverAlgebra, BoundQuiverError};
use crate::exactalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub field: Field,
    pub dims: Vec<usize>,
    /// One matrix per arrow, of shape dim(tgt) × dim(src).
    pub maps: Vec<Matrix>,
}

/// A morphism of representations: one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(field: Field, from: &Representation, to: &Representation) -> Morphism {
        Morphism {
            blocks: from.dims.iter().zip(&to.dims).map(|(&m, &n)| Matrix::zeros(field, n, m)).collect(),
        }
    }

    pub fn identity(m: &Representation) -> Morphism {
        Morphism { blocks: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect() }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && b.rank() == b.rows())
    }

    /// Block-diagonal matrix on the total space.
    pub fn total_matrix(&self, field: Field) -> Matrix {
        let r: usize = self.blocks.iter().map(Matrix::rows).sum();
        let c: usize = self.blocks.iter().map(Matrix::cols).sum();
        let mut m = Matrix::zeros(field, r, c);
        let (mut i, mut j) = (0, 0);
        for b in &self.blocks {
            m.set_block(i, j, b);
            i += b.rows();
            j += b.cols();
        }
        m
    }
}

impl Representation {
    pub fn zero(alg: &BoundQuiverAlgebra) -> Representation {
        Representation::with_dims(alg, vec![0; alg.vertex_count()])
    }

    /// All arrow maps zero.
    pub fn with_dims(alg: &BoundQuiverAlgebra, dims: Vec<usize>) -> Representation {
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.tgt], dims[a.src]))
            .collect();
        Representation { field: alg.field(), dims, maps }
    }

    pub fn simple(alg: &BoundQuiverAlgebra, v: usize) -> Representation {
        let mut d = vec![0; alg.vertex_count()];
        d[v] = 1;
        Representation::with_dims(alg, d)
    }

    /// Check shapes against an algebra.
    pub fn check(&self, alg: &BoundQuiverAlgebra) -> Result<(), BoundQuiverError> {
        if self.field != alg.field() || self.dims.len() != alg.vertex_count() || self.maps.len() != alg.arrow_count() {
            return Err(BoundQuiverError::AlgebraMismatch);
        }
        for (m, a) in self.maps.iter().zip(alg.quiver().arrows()) {
            if m.rows() != self.dims[a.tgt] || m.cols() != self.dims[a.src] {
                return Err(BoundQuiverError::AlgebraMismatch);
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The matrix by which a path acts.
    pub fn path_matrix(&self, alg: &BoundQuiverAlgebra, src: usize, arrows: &[usize]) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[src]);
        for &a in arrows {
            m = self.maps[a].mul(&m);
        }
        let _ = alg;
        m
    }

    /// The matrix by which x ∈ e_u A e_v acts, M_u → M_v.
    pub fn element_matrix(&self, alg: &BoundQuiverAlgebra, u: usize, v: usize, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dims[v], self.dims[u]);
        for (c, p) in x.iter().zip(alg.basis_paths(u, v)) {
            if !c.is_zero() {
                m = m.add(&self.path_matrix(alg, u, &p.arrows).scale(c));
            }
        }
        m
    }

    pub fn satisfies_relations(&self, alg: &BoundQuiverAlgebra) -> bool {
        let arrows = alg.quiver().arrows();
        alg.relations().iter().all(|r| {
            let src = arrows[r.terms[0].1[0]].src;
            let tgt = arrows[*r.terms[0].1.last().unwrap()].tgt;
            let mut sum = Matrix::zeros(self.field, self.dims[tgt], self.dims[src]);
            for (c, p) in &r.terms {
                sum = sum.add(&self.path_matrix(alg, src, p).scale(c));
            }
            sum.is_zero()
        })
    }

    pub fn direct_sum(&self, other: &Representation, alg: &BoundQuiverAlgebra) -> Representation {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut m = Matrix::zeros(self.field, dims[a.tgt], dims[a.src]);
                m.set_block(0, 0, &self.maps[i]);
                m.set_block(self.dims[a.tgt], self.dims[a.src], &other.maps[i]);
                m
            })
            .collect();
        Representation { field: self.field, dims, maps }
    }

    /// k-dual: a representation of the opposite quiver.
    pub fn dual(&self) -> Representation {
        Representation {
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn to_json(&self, alg: &BoundQuiverAlgebra) -> Value {
        let dims: BTreeMap<&str, usize> =
            (0..self.dims.len()).map(|v| (alg.label(v), self.dims[v])).collect();
        let maps: BTreeMap<&str, Value> = alg
            .quiver()
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| (a.name.as_str(), m.to_json()))
            .collect();
        json!({"dims": dims, "maps": maps})
    }

    /// Parse {"dims": {vertex: n}, "maps": {arrow: matrix}}; missing maps are zero.
    pub fn from_json(v: &Value, alg: &BoundQuiverAlgebra) -> Result<Representation, BoundQuiverError> {
        let bad = |m: String| BoundQuiverError::Parse(m);
        let dobj = v["dims"].as_object().ok_or_else(|| bad("missing \"dims\" object".into()))?;
        let mut dims = vec![0; alg.vertex_count()];
        for (k, n) in dobj {
            let i = alg.vertex(k)?;
            dims[i] = n.as_u64().ok_or_else(|| bad(format!("dimension of {k} is not a count")))? as usize;
        }
        let mut rep = Representation::with_dims(alg, dims);
        if let Some(mobj) = v.get("maps").and_then(Value::as_object) {
            for (k, m) in mobj {
                let a = alg.quiver().arrow(k)?;
                rep.maps[a] = Matrix::from_json(m, alg.field()).map_err(|e| bad(e.to_string()))?;
            }
        }
        rep.check(alg)?;
        if !rep.satisfies_relations(alg) {
            return Err(BoundQuiverError::RelationViolated);
        }
        Ok(rep)
    }
}
