//! Hom spaces, kernels and cokernels, projective covers, resolutions and Ext.

use super::{BoundQuiverAlgebra, BoundQuiverError, Morphism, Representation};
use crate::exactalg::{Matrix, Scalar};

/// Offsets of the unknown blocks f_v (row-major, dim N_v × dim M_v).
fn hom_layout(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims.len());
    let mut total = 0;
    for (a, b) in m.dims.iter().zip(&n.dims) {
        off.push(total);
        total += a * b;
    }
    (off, total)
}

fn hom_equations(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Matrix {
    let f = alg.field();
    let (off, total) = hom_layout(m, n);
    let mut rows = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (u, w) = (a.src, a.tgt);
        let (ma, na) = (&m.maps[ai], &n.maps[ai]);
        // (N_a f_u - f_w M_a)[i, j] = 0
        for i in 0..n.dims[w] {
            for j in 0..m.dims[u] {
                let mut row = vec![f.zero(); total];
                for k in 0..n.dims[u] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let idx = off[u] + k * m.dims[u] + j;
                        row[idx] = &row[idx] + c;
                    }
                }
                for l in 0..m.dims[w] {
                    let c = ma.get(l, j);
                    if !c.is_zero() {
                        let idx = off[w] + i * m.dims[w] + l;
                        row[idx] = &row[idx] - c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(f, total, rows)
}

fn unpack(m: &Representation, n: &Representation, x: &[Scalar]) -> Morphism {
    let (off, _) = hom_layout(m, n);
    let blocks = (0..m.dims.len())
        .map(|v| {
            let rows = (0..n.dims[v])
                .map(|i| x[off[v] + i * m.dims[v]..off[v] + (i + 1) * m.dims[v]].to_vec())
                .collect();
            Matrix::from_rows(m.field, m.dims[v], rows)
        })
        .collect();
    Morphism { blocks }
}

/// A basis of Hom(M, N).
pub fn hom_space(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Vec<Morphism> {
    hom_equations(alg, m, n).kernel_basis().iter().map(|x| unpack(m, n, x)).collect()
}

pub fn hom_dim(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> usize {
    let eq = hom_equations(alg, m, n);
    eq.cols() - eq.rank()
}

/// Kernel of f: M → N as a subrepresentation with its inclusion.
pub fn kernel(alg: &BoundQuiverAlgebra, m: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let incl: Vec<Matrix> = f.blocks.iter().map(Matrix::kernel_matrix).collect();
    let dims: Vec<usize> = incl.iter().map(Matrix::cols).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = m.maps[ai].mul(&incl[a.src]);
            incl[a.tgt].solve_matrix(&img).expect("kernel is a subrepresentation")
        })
        .collect();
    (Representation { field: m.field, dims, maps }, Morphism { blocks: incl })
}

/// Cokernel of f: M → N with its projection.
pub fn cokernel(alg: &BoundQuiverAlgebra, n: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let fld = n.field;
    let proj: Vec<Matrix> = f.blocks.iter().map(|b| b.transpose().kernel_matrix().transpose()).collect();
    let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let right_inv = proj[a.src]
                .solve_matrix(&Matrix::identity(fld, dims[a.src]))
                .expect("projection has full row rank");
            proj[a.tgt].mul(&n.maps[ai]).mul(&right_inv)
        })
        .collect();
    (Representation { field: fld, dims, maps }, Morphism { blocks: proj })
}

/// Image of f: M → N as a subrepresentation of N.
pub fn image(alg: &BoundQuiverAlgebra, n: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let incl: Vec<Matrix> = f
        .blocks
        .iter()
        .map(|b| {
            let (r, piv) = b.transpose().rref();
            let rows = (0..piv.len()).map(|i| r.row(i)).collect();
            Matrix::from_rows(n.field, b.rows(), rows).transpose()
        })
        .collect();
    let dims: Vec<usize> = incl.iter().map(Matrix::cols).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = n.maps[ai].mul(&incl[a.src]);
            incl[a.tgt].solve_matrix(&img).expect("image is a subrepresentation")
        })
        .collect();
    (Representation { field: n.field, dims, maps }, Morphism { blocks: incl })
}

/// A direct sum of indecomposable projectives e_v A, one per entry of `tops`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSum {
    pub tops: Vec<usize>,
}

impl ProjectiveSum {
    /// Start of summand r inside the space at vertex w.
    pub fn offset(&self, alg: &BoundQuiverAlgebra, r: usize, w: usize) -> usize {
        self.tops[..r].iter().map(|&v| alg.dim(v, w)).sum()
    }

    pub fn representation(&self, alg: &BoundQuiverAlgebra) -> Representation {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| self.tops.iter().map(|&v| alg.dim(v, w)).sum()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(alg.field(), dims[a.tgt], dims[a.src]);
                for (r, &v) in self.tops.iter().enumerate() {
                    m.set_block(self.offset(alg, r, a.tgt), self.offset(alg, r, a.src), &alg.right_mul_arrow(v, ai));
                }
                m
            })
            .collect();
        Representation { field: alg.field(), dims, maps }
    }

    /// Multiplicity of e_v A.
    pub fn count(&self, v: usize) -> usize {
        self.tops.iter().filter(|&&t| t == v).count()
    }
}

/// A map ⊕ e_{dom_s} A → ⊕ e_{cod_r} A; `images[s][r]` ∈ e_{cod_r} A e_{dom_s}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub dom: ProjectiveSum,
    pub cod: ProjectiveSum,
    pub images: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    pub fn morphism(&self, alg: &BoundQuiverAlgebra) -> Morphism {
        let blocks = (0..alg.vertex_count())
            .map(|w| {
                let rows: usize = self.cod.tops.iter().map(|&v| alg.dim(v, w)).sum();
                let mut cols = Vec::new();
                for (s, &vs) in self.dom.tops.iter().enumerate() {
                    let dq = alg.dim(vs, w);
                    for q in 0..dq {
                        let mut e = vec![alg.field().zero(); dq];
                        e[q] = alg.field().one();
                        let mut col = vec![alg.field().zero(); rows];
                        for (r, &vr) in self.cod.tops.iter().enumerate() {
                            let prod = alg.mul(vr, vs, w, &self.images[s][r], &e);
                            let o = self.cod.offset(alg, r, w);
                            for (k, z) in prod.into_iter().enumerate() {
                                col[o + k] = z;
                            }
                        }
                        cols.push(col);
                    }
                }
                Matrix::from_columns(alg.field(), rows, &cols)
            })
            .collect();
        Morphism { blocks }
    }

    /// The same data over the opposite algebra with Hom(-, A) applied.
    pub fn transpose(&self, alg: &BoundQuiverAlgebra) -> ProjMap {
        let op = alg.opposite();
        let images = (0..self.cod.tops.len())
            .map(|r| {
                (0..self.dom.tops.len())
                    .map(|s| alg.transport_to_opposite(&op, self.cod.tops[r], self.dom.tops[s], &self.images[s][r]))
                    .collect()
            })
            .collect();
        ProjMap { dom: self.cod.clone(), cod: self.dom.clone(), images }
    }
}

/// Radical of M at each vertex: the sum of arrow images.
fn radical(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<Matrix> {
    (0..alg.vertex_count())
        .map(|w| {
            let mut span = Matrix::zeros(m.field, m.dims[w], 0);
            for a in alg.quiver().arrows_into(w) {
                span = span.hstack(&m.maps[a]);
            }
            span
        })
        .collect()
}

/// Minimal projective cover: the generators chosen in M (as a morphism from
/// the projective sum) together with the sum itself.
pub fn projective_cover(alg: &BoundQuiverAlgebra, m: &Representation) -> (ProjectiveSum, Morphism) {
    let rad = radical(alg, m);
    let mut tops = Vec::new();
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for w in 0..alg.vertex_count() {
        let r = rad[w].rank();
        let mut span = rad[w].clone();
        let mut cur = r;
        for i in 0..m.dims[w] {
            if cur == m.dims[w] {
                break;
            }
            let mut e = vec![m.field.zero(); m.dims[w]];
            e[i] = m.field.one();
            let cand = span.hstack(&Matrix::from_columns(m.field, m.dims[w], &[e.clone()]));
            let k = cand.rank();
            if k > cur {
                span = cand;
                cur = k;
                tops.push(w);
                gens.push((w, e));
            }
        }
    }
    let p = ProjectiveSum { tops };
    let mor = generator_morphism(alg, &p, m, &gens.into_iter().map(|(_, g)| g).collect::<Vec<_>>());
    (p, mor)
}

/// The map ⊕ e_{v_r} A → M sending the r-th generator to `gens[r]` ∈ M_{v_r}.
pub fn generator_morphism(
    alg: &BoundQuiverAlgebra,
    p: &ProjectiveSum,
    m: &Representation,
    gens: &[Vec<Scalar>],
) -> Morphism {
    let blocks = (0..alg.vertex_count())
        .map(|w| {
            let mut cols = Vec::new();
            for (r, &v) in p.tops.iter().enumerate() {
                for path in alg.basis_paths(v, w) {
                    cols.push(m.path_matrix(alg, v, &path.arrows).mul_vec(&gens[r]));
                }
            }
            Matrix::from_columns(m.field, m.dims[w], &cols)
        })
        .collect();
    Morphism { blocks }
}

/// Coordinates of the generators' images, read off a morphism between
/// projective sums.
pub fn projmap_from_morphism(alg: &BoundQuiverAlgebra, dom: &ProjectiveSum, cod: &ProjectiveSum, f: &Morphism) -> ProjMap {
    let images = dom
        .tops
        .iter()
        .enumerate()
        .map(|(s, &vs)| {
            // the generator e_{vs} is the trivial path, basis index of e_vs A e_vs
            let idx = dom.offset(alg, s, vs);
            let col = f.blocks[vs].column(idx);
            cod.tops
                .iter()
                .enumerate()
                .map(|(r, &vr)| {
                    let o = cod.offset(alg, r, vs);
                    col[o..o + alg.dim(vr, vs)].to_vec()
                })
                .collect()
        })
        .collect();
    ProjMap { dom: dom.clone(), cod: cod.clone(), images }
}

/// Minimal projective resolution, as the sequence of differentials
/// P_1 → P_0, P_2 → P_1, ...; the first entry is P_0 alone.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<ProjectiveSum>,
    pub differentials: Vec<ProjMap>,
}

pub fn projective_resolution(alg: &BoundQuiverAlgebra, m: &Representation, max_len: usize) -> Resolution {
    let (p0, eps) = projective_cover(alg, m);
    let mut terms = vec![p0.clone()];
    let mut differentials = Vec::new();
    let mut prev_rep = p0.representation(alg);
    let (mut k, mut incl) = kernel(alg, &prev_rep, &eps);
    while !k.is_zero() && terms.len() <= max_len {
        let (p, cov) = projective_cover(alg, &k);
        let to_prev = incl.compose(&cov);
        differentials.push(projmap_from_morphism(alg, &p, terms.last().unwrap(), &to_prev));
        let rep = p.representation(alg);
        let (k2, i2) = kernel(alg, &rep, &cov);
        terms.push(p);
        prev_rep = rep;
        k = k2;
        incl = i2;
    }
    let _ = prev_rep;
    Resolution { terms, differentials }
}

/// Projective dimension, or `None` for the zero module.
pub fn projective_dimension(alg: &BoundQuiverAlgebra, m: &Representation) -> Option<usize> {
    if m.is_zero() {
        return None;
    }
    Some(projective_resolution(alg, m, alg.vertex_count()).terms.len() - 1)
}

/// The matrix of Hom(d, N): Hom(P_cod, N) → Hom(P_dom, N), both written as
/// ⊕ N_{top}.
fn hom_differential(alg: &BoundQuiverAlgebra, d: &ProjMap, n: &Representation) -> Matrix {
    let rows: usize = d.dom.tops.iter().map(|&v| n.dims[v]).sum();
    let cols: usize = d.cod.tops.iter().map(|&v| n.dims[v]).sum();
    let mut m = Matrix::zeros(n.field, rows, cols);
    let mut ro = 0;
    for (s, &vs) in d.dom.tops.iter().enumerate() {
        let mut co = 0;
        for (r, &vr) in d.cod.tops.iter().enumerate() {
            let block = n.element_matrix(alg, vr, vs, &d.images[s][r]);
            m.set_block(ro, co, &block);
            co += n.dims[vr];
        }
        ro += n.dims[vs];
    }
    m
}

/// dim Ext^k(M, N).
pub fn ext_dim(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation, k: usize) -> usize {
    if k == 0 {
        return hom_dim(alg, m, n);
    }
    let res = projective_resolution(alg, m, k + 1);
    let Some(pk) = res.terms.get(k) else { return 0 };
    let ck: usize = pk.tops.iter().map(|&v| n.dims[v]).sum();
    let out_rank = res.differentials.get(k).map_or(0, |d| hom_differential(alg, d, n).rank());
    let in_rank = hom_differential(alg, &res.differentials[k - 1], n).rank();
    ck - out_rank - in_rank
}

/// Projective e_v A.
pub fn projective(alg: &BoundQuiverAlgebra, v: usize) -> Representation {
    ProjectiveSum { tops: vec![v] }.representation(alg)
}

/// Injective D(A e_v).
pub fn injective(alg: &BoundQuiverAlgebra, v: usize) -> Representation {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| alg.dim(w, v)).collect();
    let maps = (0..alg.arrow_count()).map(|a| alg.left_mul_arrow(a, v).transpose()).collect();
    Representation { field: alg.field(), dims, maps }
}

/// Top of M as a dimension vector.
pub fn top_dims(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<usize> {
    radical(alg, m).iter().zip(&m.dims).map(|(r, d)| d - r.rank()).collect()
}

pub fn check_same_algebra(alg: &BoundQuiverAlgebra, ms: &[&Representation]) -> Result<(), BoundQuiverError> {
    ms.iter().try_for_each(|m| m.check(alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundquiver::{Quiver, Relation};
    use crate::exactalg::Field;

    const Q: Field = Field::Rational;

    fn a3() -> BoundQuiverAlgebra {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![("a".into(), "1".into(), "2".into()), ("b".into(), "2".into(), "3".into())],
        )
        .unwrap();
        BoundQuiverAlgebra::new(q, vec![], Q).unwrap()
    }

    fn a3_zero_relation() -> BoundQuiverAlgebra {
        let a = a3();
        let rel = Relation::new(vec![(Q.one(), vec![0, 1])]);
        BoundQuiverAlgebra::new(a.quiver().clone(), vec![rel], Q).unwrap()
    }

    #[test]
    fn projectives_and_injectives() {
        let a = a3();
        assert_eq!(projective(&a, 0).dims, vec![1, 1, 1]);
        assert_eq!(injective(&a, 0).dims, vec![1, 0, 0]);
        assert_eq!(injective(&a, 2).dims, vec![1, 1, 1]);
        assert!(projective(&a, 0).satisfies_relations(&a));
        assert_eq!(top_dims(&a, &projective(&a, 0)), vec![1, 0, 0]);
    }

    #[test]
    fn hom_dims_follow_paths() {
        let a = a3();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(hom_dim(&a, &projective(&a, u), &projective(&a, v)), a.dim(v, u));
            }
        }
    }

    #[test]
    fn resolutions_in_hereditary_and_bound_cases() {
        let a = a3();
        assert_eq!(projective_dimension(&a, &Representation::simple(&a, 0)), Some(1));
        assert_eq!(projective_dimension(&a, &Representation::simple(&a, 2)), Some(0));
        let b = a3_zero_relation();
        assert_eq!(projective_dimension(&b, &Representation::simple(&b, 0)), Some(2));
        assert_eq!(ext_dim(&b, &Representation::simple(&b, 0), &Representation::simple(&b, 2), 2), 1);
        assert_eq!(ext_dim(&b, &Representation::simple(&b, 0), &Representation::simple(&b, 1), 1), 1);
        assert_eq!(ext_dim(&b, &Representation::simple(&b, 0), &Representation::simple(&b, 2), 1), 0);
    }

    #[test]
    fn kernel_cokernel_of_inclusion() {
        let a = a3();
        let p1 = projective(&a, 1);
        let p0 = projective(&a, 0);
        let f = &hom_space(&a, &p1, &p0)[0];
        let (k, _) = kernel(&a, &p1, f);
        assert!(k.is_zero());
        let (c, _) = cokernel(&a, &p0, f);
        assert_eq!(c.dims, vec![1, 0, 0]);
        assert!(c.satisfies_relations(&a));
    }
}
