//! Path algebras of acyclic quivers modulo admissible relations.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::{BoundQuiverError, Path, Quiver};
use crate::exactalg::{Field, Matrix, Scalar};

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<usize>)>) -> Relation {
        Relation { terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect() }
    }

    fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
struct Block {
    /// Path ids from u to v, in column order.
    paths: Vec<usize>,
    /// Path ids forming the standard basis of e_u A e_v.
    basis: Vec<usize>,
    /// Maps path coordinates to basis coordinates.
    reduce: Matrix,
}

#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    paths: Vec<Path>,
    path_ids: HashMap<(usize, Vec<usize>), usize>,
    blocks: Vec<Vec<Block>>,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
}

impl Clone for BoundQuiverAlgebra {
    fn clone(&self) -> Self {
        BoundQuiverAlgebra {
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            field: self.field,
            paths: self.paths.clone(),
            path_ids: self.path_ids.clone(),
            blocks: self.blocks.clone(),
            opposite: OnceLock::new(),
        }
    }
}

impl BoundQuiverAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<BoundQuiverAlgebra, BoundQuiverError> {
        let relations: Vec<Relation> = relations.into_iter().filter(|r| !r.terms.is_empty()).collect();
        let mut ends = Vec::new();
        for r in &relations {
            let mut st = None;
            for (c, arrows) in &r.terms {
                if c.field() != field {
                    return Err(BoundQuiverError::InvalidRelation("coefficient field differs".into()));
                }
                if arrows.len() < 2 {
                    return Err(BoundQuiverError::InvalidRelation(
                        "relation paths must have length at least 2".into(),
                    ));
                }
                let src = quiver.arrows().get(arrows[0]).map(|a| a.src).ok_or_else(|| {
                    BoundQuiverError::InvalidRelation("unknown arrow in relation".into())
                })?;
                let p = quiver
                    .path_from(src, arrows)
                    .ok_or_else(|| BoundQuiverError::InvalidRelation("arrows do not compose".into()))?;
                match st {
                    None => st = Some((p.src, p.tgt)),
                    Some(e) if e != (p.src, p.tgt) => {
                        return Err(BoundQuiverError::InvalidRelation("paths are not parallel".into()))
                    }
                    _ => {}
                }
            }
            ends.push(st.unwrap());
        }

        let n = quiver.vertex_count();
        let mut paths = quiver.all_paths();
        // longest paths first, so that leading terms of relations are long
        paths.sort_by(|a, b| {
            (a.src, a.tgt, std::cmp::Reverse(a.arrows.len()), std::cmp::Reverse(&a.arrows))
                .cmp(&(b.src, b.tgt, std::cmp::Reverse(b.arrows.len()), std::cmp::Reverse(&b.arrows)))
        });
        let path_ids: HashMap<(usize, Vec<usize>), usize> =
            paths.iter().enumerate().map(|(i, p)| ((p.src, p.arrows.clone()), i)).collect();

        let mut block_paths = vec![vec![Vec::new(); n]; n];
        for (i, p) in paths.iter().enumerate() {
            block_paths[p.src][p.tgt].push(i);
        }

        // generators of the ideal, grouped by block
        let mut gens: Vec<Vec<Vec<Vec<Scalar>>>> = vec![vec![Vec::new(); n]; n];
        for (r, &(rs, rt)) in relations.iter().zip(&ends) {
            for left in paths.iter().filter(|p| p.tgt == rs) {
                for right in paths.iter().filter(|p| p.src == rt) {
                    let (u, v) = (left.src, right.tgt);
                    let cols = &block_paths[u][v];
                    let mut vec = vec![field.zero(); cols.len()];
                    for (c, mid) in &r.terms {
                        let mut arrows = left.arrows.clone();
                        arrows.extend(mid);
                        arrows.extend(&right.arrows);
                        let id = path_ids[&(u, arrows)];
                        let pos = cols.iter().position(|&x| x == id).unwrap();
                        vec[pos] = &vec[pos] + c;
                    }
                    gens[u][v].push(vec);
                }
            }
        }

        let mut blocks = Vec::with_capacity(n);
        for u in 0..n {
            let mut row = Vec::with_capacity(n);
            for v in 0..n {
                let cols = block_paths[u][v].clone();
                let m = cols.len();
                let g = std::mem::take(&mut gens[u][v]);
                let (r, pivots) = if g.is_empty() {
                    (Matrix::zeros(field, 0, m), Vec::new())
                } else {
                    Matrix::from_rows(field, m, g).rref()
                };
                let standard: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
                let mut reduce = Matrix::zeros(field, standard.len(), m);
                for (b, &c) in standard.iter().enumerate() {
                    reduce.set(b, c, field.one());
                }
                for (k, &p) in pivots.iter().enumerate() {
                    for (b, &c) in standard.iter().enumerate() {
                        reduce.set(b, p, -r.get(k, c));
                    }
                }
                row.push(Block {
                    basis: standard.iter().map(|&c| cols[c]).collect(),
                    paths: cols,
                    reduce,
                });
            }
            blocks.push(row);
        }
        Ok(BoundQuiverAlgebra {
            quiver,
            relations,
            field,
            paths,
            path_ids,
            blocks,
            opposite: OnceLock::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows().len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize, BoundQuiverError> {
        self.quiver.vertex(label)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.quiver.vertices()[v]
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    /// dim e_u A e_v.
    pub fn dim(&self, u: usize, v: usize) -> usize {
        self.blocks[u][v].basis.len()
    }

    pub fn total_dim(&self) -> usize {
        let n = self.vertex_count();
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| self.dim(u, v)).sum()
    }

    /// Matrix of dim e_u A e_v.
    pub fn cartan(&self) -> Matrix {
        let n = self.vertex_count();
        let mut m = Matrix::zeros(Field::Rational, n, n);
        for u in 0..n {
            for v in 0..n {
                m.set(u, v, Field::Rational.from_i64(self.dim(u, v) as i64));
            }
        }
        m
    }

    /// Standard basis paths of e_u A e_v.
    pub fn basis_paths(&self, u: usize, v: usize) -> Vec<&Path> {
        self.blocks[u][v].basis.iter().map(|&i| &self.paths[i]).collect()
    }

    pub fn path_id(&self, src: usize, arrows: &[usize]) -> Option<usize> {
        self.path_ids.get(&(src, arrows.to_vec())).copied()
    }

    /// Basis coordinates of an arbitrary path.
    pub fn reduce_path(&self, src: usize, arrows: &[usize]) -> Vec<Scalar> {
        let id = self.path_id(src, arrows).expect("not a path");
        let p = &self.paths[id];
        let b = &self.blocks[p.src][p.tgt];
        let col = b.paths.iter().position(|&x| x == id).unwrap();
        b.reduce.column(col)
    }

    /// Product of the i-th basis path of (u,v) and the j-th basis path of (v,w).
    pub fn mul_basis(&self, u: usize, v: usize, w: usize, i: usize, j: usize) -> Vec<Scalar> {
        let p = &self.paths[self.blocks[u][v].basis[i]];
        let q = &self.paths[self.blocks[v][w].basis[j]];
        let mut arrows = p.arrows.clone();
        arrows.extend(&q.arrows);
        self.reduce_path(u, &arrows)
    }

    /// Product of x ∈ e_u A e_v and y ∈ e_v A e_w.
    pub fn mul(&self, u: usize, v: usize, w: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim(u, w)];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                for (k, z) in self.mul_basis(u, v, w, i, j).iter().enumerate() {
                    if !z.is_zero() {
                        out[k] = &out[k] + &(&c * z);
                    }
                }
            }
        }
        out
    }

    /// Right multiplication by arrow `a` as a map e_u A e_{src a} → e_u A e_{tgt a}.
    pub fn right_mul_arrow(&self, u: usize, a: usize) -> Matrix {
        let ar = &self.quiver.arrows()[a];
        let cols: Vec<Vec<Scalar>> = self
            .basis_paths(u, ar.src)
            .iter()
            .map(|p| {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                self.reduce_path(u, &arrows)
            })
            .collect();
        Matrix::from_columns(self.field, self.dim(u, ar.tgt), &cols)
    }

    /// Left multiplication by arrow `a` as a map e_{tgt a} A e_v → e_{src a} A e_v.
    pub fn left_mul_arrow(&self, a: usize, v: usize) -> Matrix {
        let ar = &self.quiver.arrows()[a];
        let cols: Vec<Vec<Scalar>> = self
            .basis_paths(ar.tgt, v)
            .iter()
            .map(|p| {
                let mut arrows = vec![a];
                arrows.extend(&p.arrows);
                self.reduce_path(ar.src, &arrows)
            })
            .collect();
        Matrix::from_columns(self.field, self.dim(ar.src, v), &cols)
    }

    /// The opposite algebra: arrows reversed with the same indices.
    pub fn opposite(&self) -> Arc<BoundQuiverAlgebra> {
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(Relation::reversed).collect();
                Arc::new(
                    BoundQuiverAlgebra::new(self.quiver.opposite(), rels, self.field)
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    /// Send x ∈ e_u A e_v to the reversed element of e_v A^op e_u.
    pub fn transport_to_opposite(&self, op: &BoundQuiverAlgebra, u: usize, v: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); op.dim(v, u)];
        for (c, p) in x.iter().zip(self.basis_paths(u, v)) {
            if c.is_zero() {
                continue;
            }
            let rev: Vec<usize> = p.arrows.iter().rev().copied().collect();
            for (k, z) in op.reduce_path(v, &rev).iter().enumerate() {
                out[k] = &out[k] + &(c * z);
            }
        }
        out
    }

    /// The idempotent subalgebra on `keep` (a full convex subquiver).
    /// Relations touching removed vertices are dropped.
    pub fn restrict(&self, keep: &[usize]) -> Result<BoundQuiverAlgebra, BoundQuiverError> {
        let sub = self.quiver.full_subquiver(keep);
        let map: HashMap<usize, usize> = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .filter_map(|(i, a)| {
                let (s, t) = (keep.iter().position(|&k| k == a.src)?, keep.iter().position(|&k| k == a.tgt)?);
                let j = sub.arrows().iter().position(|b| b.name == a.name && b.src == s && b.tgt == t)?;
                Some((i, j))
            })
            .collect();
        let rels = self
            .relations
            .iter()
            .filter_map(|r| {
                let terms: Option<Vec<_>> = r
                    .terms
                    .iter()
                    .map(|(c, p)| Some((c.clone(), p.iter().map(|a| map.get(a).copied()).collect::<Option<Vec<_>>>()?)))
                    .collect();
                terms.map(Relation::new)
            })
            .collect();
        BoundQuiverAlgebra::new(sub, rels, self.field)
    }
}
