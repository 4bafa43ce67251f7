//! Dimension-level presentations of the squid, Coxeter-Dynkin and canonical
//! algebras of a symbol. All dimensions are exact rationals in units of dim_k F.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactalg::{Field, Matrix, MatrixError, Scalar};
use crate::lattice::Symbol;

const Q: Field = Field::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpeciesError {
    #[error("condition (6) fails: eps * sum d_i < 2")]
    Condition6Violated,
    #[error("Cartan matrix is singular")]
    SingularCartan,
    #[error("matrix sizes do not match")]
    SizeMismatch,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraTag {
    Squid,
    CoxeterDynkin,
    Canonical,
}

impl AlgebraTag {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Squid => "squid",
            AlgebraTag::CoxeterDynkin => "cd",
            AlgebraTag::Canonical => "canonical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimPresentation {
    pub algebra: AlgebraTag,
    pub vertex_labels: Vec<String>,
    pub vertex_dims: Vec<Scalar>,
    /// Entry (i, j) is dim_k e_i X e_j.
    pub hom_dims: Matrix,
}

impl DimPresentation {
    pub fn size(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|l| l == label)
    }

    /// Euler form in the projective basis: ⟨P_i, P_j⟩ = dim e_j X e_i.
    pub fn projective_gram(&self) -> Matrix {
        self.hom_dims.transpose()
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.hom_dims.to_json();
        v["algebra"] = json!(self.algebra.name());
        v["vertex_labels"] = json!(self.vertex_labels);
        v["vertex_dims"] = json!(self.vertex_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>());
        v
    }
}

fn r(n: u64, d: u64) -> Scalar {
    Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn int(n: i64) -> Scalar {
    Q.from_i64(n)
}

/// Label of the j-th vertex on arm i (both 1-based).
pub fn arm_label(i: usize, j: usize) -> String {
    format!("e{i}({j})")
}

pub fn canonical_arm_label(i: usize, j: usize) -> String {
    format!("c{i}({j})")
}

struct Builder {
    labels: Vec<String>,
    dims: Vec<Scalar>,
    entries: Vec<(String, String, Scalar)>,
}

impl Builder {
    fn new() -> Builder {
        Builder { labels: Vec::new(), dims: Vec::new(), entries: Vec::new() }
    }

    fn vertex(&mut self, label: String, dim: Scalar) {
        self.labels.push(label);
        self.dims.push(dim);
    }

    fn hom(&mut self, from: &str, to: &str, dim: Scalar) {
        self.entries.push((from.to_string(), to.to_string(), dim));
    }

    fn build(self, algebra: AlgebraTag) -> DimPresentation {
        let n = self.labels.len();
        let idx = |l: &str| self.labels.iter().position(|x| x == l).unwrap();
        let mut h = Matrix::zeros(Q, n, n);
        for (i, d) in self.dims.iter().enumerate() {
            h.set(i, i, d.clone());
        }
        for (a, b, d) in &self.entries {
            h.set(idx(a), idx(b), d.clone());
        }
        DimPresentation {
            algebra,
            vertex_labels: self.labels,
            vertex_dims: self.dims,
            hom_dims: h,
        }
    }
}

/// Squid algebra: arms e_i(p_i−1)…e_i(1), then F, G.
pub fn cartan_squid(s: &Symbol) -> DimPresentation {
    let eps = s.epsilon as u64;
    let mut b = Builder::new();
    for (i, a) in s.arms.iter().enumerate() {
        let d = r(eps * a.f as u64, a.e as u64);
        for j in (1..a.p as usize).rev() {
            let l = arm_label(i + 1, j);
            b.vertex(l.clone(), d.clone());
            for jj in 1..j {
                b.hom(&l, &arm_label(i + 1, jj), d.clone());
            }
            b.hom(&l, "F", int((eps * a.f as u64) as i64));
            b.hom(&l, "G", int((eps * eps * a.f as u64) as i64));
        }
    }
    b.vertex("F".into(), int(1));
    b.vertex("G".into(), int((eps * eps) as i64));
    b.hom("F", "G", int(2 * eps as i64));
    b.build(AlgebraTag::Squid)
}

/// Coxeter-Dynkin algebra: F, arms e_i(p_i−1)…e_i(1), G.
pub fn cartan_cd(s: &Symbol) -> Result<DimPresentation, SpeciesError> {
    if !s.condition6() {
        return Err(SpeciesError::Condition6Violated);
    }
    let eps = s.epsilon as i64;
    let sum_d: i64 = s.arms.iter().map(|a| a.d() as i64).sum();
    let mut b = Builder::new();
    b.vertex("F".into(), int(1));
    for (i, a) in s.arms.iter().enumerate() {
        let d = r(eps as u64 * a.f as u64, a.e as u64);
        for j in (1..a.p as usize).rev() {
            let l = arm_label(i + 1, j);
            b.vertex(l.clone(), d.clone());
            for jj in 1..j {
                b.hom(&l, &arm_label(i + 1, jj), d.clone());
            }
            b.hom(&l, "G", int(eps * eps * a.f as i64));
        }
        b.hom("F", &arm_label(i + 1, 1), int(eps * a.f as i64));
    }
    b.vertex("G".into(), int(eps * eps));
    b.hom("F", "G", int(eps * eps * sum_d - 2 * eps));
    Ok(b.build(AlgebraTag::CoxeterDynkin))
}

/// Canonical algebra: F, arms c_i(1)…c_i(p_i−1), G.
pub fn cartan_canonical(s: &Symbol) -> DimPresentation {
    let eps = s.epsilon as i64;
    let mut b = Builder::new();
    b.vertex("F".into(), int(1));
    for (i, a) in s.arms.iter().enumerate() {
        let d = r(eps as u64 * a.f as u64, a.e as u64);
        let top = a.p as usize - 1;
        for j in 1..=top {
            let l = canonical_arm_label(i + 1, j);
            b.vertex(l.clone(), d.clone());
            for jj in j + 1..=top {
                b.hom(&l, &canonical_arm_label(i + 1, jj), d.clone());
            }
            b.hom("F", &l, int(eps * a.f as i64));
            b.hom(&l, "G", int(eps * eps * a.f as i64));
        }
    }
    b.vertex("G".into(), int(eps * eps));
    b.hom("F", "G", int(2 * eps));
    b.build(AlgebraTag::Canonical)
}

/// Composition multiplicities: entry (i, j) is [P_i : S_j].
pub fn multiplicity_matrix(p: &DimPresentation) -> Matrix {
    let n = p.size();
    let mut m = Matrix::zeros(Q, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, p.hom_dims.get(i, j) / &p.vertex_dims[j]);
        }
    }
    m
}

/// Euler form in the basis of simple modules.
pub fn gram_simple_basis(p: &DimPresentation) -> Result<Matrix, SpeciesError> {
    let m = multiplicity_matrix(p);
    let minv = m.inverse().map_err(|_| SpeciesError::SingularCartan)?;
    Ok(minv.mul(&p.projective_gram()).mul(&minv.transpose()))
}

/// Σ dimDU_i · dimUF_i ≥ 2.
pub fn check_condition6(points: &[(u32, u32)]) -> bool {
    points.iter().map(|&(du, uf)| du * uf).sum::<u32>() >= 2
}

/// True iff `base_change` is unimodular and transforms `g1` into `g2`.
pub fn congruence_check(g1: &Matrix, g2: &Matrix, base_change: &Matrix) -> Result<bool, SpeciesError> {
    let n = g1.rows();
    let same = |m: &Matrix| m.rows() == n && m.cols() == n;
    if !(same(g1) && same(g2) && same(base_change)) {
        return Err(SpeciesError::SizeMismatch);
    }
    if !base_change.is_integral() || !base_change.is_unimodular()? {
        return Ok(false);
    }
    Ok(&base_change.transpose().mul(g1).mul(base_change) == g2)
}

/// Integer scaling of a presentation's projective Gram by κ.
pub fn scaled_projective_gram(s: &Symbol, p: &DimPresentation) -> Matrix {
    p.projective_gram().scale(&int(s.kappa() as i64))
}

/// Classes of the APR tilting summands in the squid's projective basis,
/// one column per Coxeter-Dynkin vertex: X = Σ e_i P_i(1) − P_F, the other
/// summands are the projectives of the same label.
pub fn base_change_squid_to_cd(s: &Symbol) -> Matrix {
    let a = cartan_squid(s);
    let n = a.size();
    let cd_labels = cd_labels(s);
    let mut m = Matrix::zeros(Q, n, n);
    for (c, l) in cd_labels.iter().enumerate() {
        if l == "F" {
            m.set(a.index("F").unwrap(), c, int(-1));
            for (i, arm) in s.arms.iter().enumerate() {
                m.set(a.index(&arm_label(i + 1, 1)).unwrap(), c, int(arm.e as i64));
            }
        } else {
            m.set(a.index(l).unwrap(), c, int(1));
        }
    }
    m
}

/// Class of the injective D(Ae_v) in the simple basis.
pub fn injective_class(p: &DimPresentation, v: usize) -> Vec<Scalar> {
    (0..p.size()).map(|w| p.hom_dims.get(w, v) / &p.vertex_dims[w]).collect()
}

/// Classes of the cotilting summands D(Ae_F), τ^j D(Ae_i(j)), D(Ae_G) of the
/// squid in its simple basis, one column per canonical vertex. The arm summand
/// c_i(j) has class εf_i·[D(Ae_F)] − Σ [S_i(m)] over the j arm vertices
/// farthest from F.
pub fn simple_classes_squid_to_canonical(s: &Symbol) -> Matrix {
    let a = cartan_squid(s);
    let c = cartan_canonical(s);
    let n = a.size();
    let (f, g) = (a.index("F").unwrap(), a.index("G").unwrap());
    let i_f = injective_class(&a, f);
    let mut m = Matrix::zeros(Q, n, n);
    for (col, l) in c.vertex_labels.iter().enumerate() {
        let v = match l.as_str() {
            "F" => i_f.clone(),
            "G" => injective_class(&a, g),
            _ => {
                let (i, j) = l[1..l.len() - 1].split_once('(').unwrap();
                let (i, j): (usize, usize) = (i.parse().unwrap(), j.parse().unwrap());
                let p = s.arms[i - 1].p as usize;
                let mult = int(s.epsilon as i64 * s.arms[i - 1].f as i64);
                let mut v: Vec<Scalar> = i_f.iter().map(|x| x * &mult).collect();
                for m in p - j..p {
                    let k = a.index(&arm_label(i, m)).unwrap();
                    v[k] = &v[k] - &int(1);
                }
                v
            }
        };
        m.set_block(0, col, &Matrix::from_columns(Q, n, &[v]));
    }
    m
}

/// The same classes in the squid's projective basis.
pub fn base_change_squid_to_canonical(s: &Symbol) -> Result<Matrix, SpeciesError> {
    let minv_t = multiplicity_matrix(&cartan_squid(s)).inverse()?.transpose();
    Ok(minv_t.mul(&simple_classes_squid_to_canonical(s)))
}

/// Composite base change from the Coxeter-Dynkin to the canonical projective basis.
pub fn base_change_cd_to_canonical(s: &Symbol) -> Result<Matrix, SpeciesError> {
    let ab_inv = base_change_squid_to_cd(s).inverse()?;
    Ok(ab_inv.mul(&base_change_squid_to_canonical(s)?))
}

fn cd_labels(s: &Symbol) -> Vec<String> {
    let mut v = vec!["F".to_string()];
    for (i, a) in s.arms.iter().enumerate() {
        for j in (1..a.p as usize).rev() {
            v.push(arm_label(i + 1, j));
        }
    }
    v.push("G".into());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Arm;

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_i64(Q, rows)
    }

    fn real_complex() -> Symbol {
        Symbol::new(1, vec![Arm::new(2, 1, 2)]).unwrap()
    }

    #[test]
    fn squid_examples() {
        let p = cartan_squid(&Symbol::simply_laced(&[2, 2]).unwrap());
        let expected = m(&[
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 2],
            vec![0, 0, 0, 1],
        ]);
        assert_eq!(p.hom_dims, expected);
        let p = cartan_squid(&real_complex());
        assert_eq!(p.hom_dims, m(&[vec![2, 2, 2], vec![0, 1, 2], vec![0, 0, 1]]));
        for i in 0..p.size() {
            assert_eq!(p.hom_dims.get(i, i), &p.vertex_dims[i]);
        }
    }

    #[test]
    fn cd_examples() {
        for w in [vec![2, 2], vec![2, 3, 4], vec![3, 3, 3, 3]] {
            let p = cartan_cd(&Symbol::simply_laced(&w).unwrap()).unwrap();
            let (f, g) = (p.index("F").unwrap(), p.index("G").unwrap());
            assert_eq!(p.hom_dims.get(f, g), &int(w.len() as i64 - 2));
        }
        let p = cartan_cd(&real_complex()).unwrap();
        assert_eq!(p.hom_dims, m(&[vec![1, 2, 0], vec![0, 2, 2], vec![0, 0, 1]]));
        let one = Symbol::simply_laced(&[3]).unwrap();
        assert_eq!(cartan_cd(&one), Err(SpeciesError::Condition6Violated));
    }

    #[test]
    fn canonical_examples() {
        let p = cartan_canonical(&real_complex());
        assert_eq!(p.hom_dims, m(&[vec![1, 2, 2], vec![0, 2, 2], vec![0, 0, 1]]));
        let p = cartan_canonical(&Symbol::simply_laced(&[2, 2]).unwrap());
        assert_eq!(p.hom_dims.get(0, 3), &int(2));
    }

    #[test]
    fn simple_basis_examples() {
        let p = cartan_cd(&Symbol::simply_laced(&[2, 2]).unwrap()).unwrap();
        let g = gram_simple_basis(&p).unwrap();
        let (f, gg) = (p.index("F").unwrap(), p.index("G").unwrap());
        assert_eq!(g.get(f, gg), &int(2));
        let one = DimPresentation {
            algebra: AlgebraTag::Squid,
            vertex_labels: vec!["v".into()],
            vertex_dims: vec![int(1)],
            hom_dims: Matrix::identity(Q, 1),
        };
        assert_eq!(gram_simple_basis(&one).unwrap(), Matrix::identity(Q, 1));
    }

    #[test]
    fn simple_basis_a2() {
        // 1 -> 2: the only off-diagonal value is <S_1, S_2> = -1
        let p = DimPresentation {
            algebra: AlgebraTag::Squid,
            vertex_labels: vec!["1".into(), "2".into()],
            vertex_dims: vec![int(1), int(1)],
            hom_dims: m(&[vec![1, 1], vec![0, 1]]),
        };
        assert_eq!(gram_simple_basis(&p).unwrap(), m(&[vec![1, -1], vec![0, 1]]));
    }

    #[test]
    fn condition6_examples() {
        assert!(!check_condition6(&[(1, 1)]));
        assert!(check_condition6(&[(1, 2)]));
        assert!(check_condition6(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn congruence_examples() {
        let g = m(&[vec![1, 2], vec![0, 3]]);
        let id = Matrix::identity(Q, 2);
        assert_eq!(congruence_check(&g, &g, &id), Ok(true));
        assert_eq!(congruence_check(&g, &g, &id.scale(&int(2))), Ok(false));
        assert_eq!(
            congruence_check(&g, &g, &Matrix::identity(Q, 3)),
            Err(SpeciesError::SizeMismatch)
        );
    }

    #[test]
    fn squid_to_cd_real_complex() {
        let s = real_complex();
        let a = scaled_projective_gram(&s, &cartan_squid(&s));
        let b = scaled_projective_gram(&s, &cartan_cd(&s).unwrap());
        assert_eq!(congruence_check(&a, &b, &base_change_squid_to_cd(&s)), Ok(true));
    }

    #[test]
    fn pairwise_congruences_over_enumerated_symbols() {
        for s in crate::lattice::enumerate_symbols(6, 3) {
            let a = scaled_projective_gram(&s, &cartan_squid(&s));
            let c = scaled_projective_gram(&s, &cartan_canonical(&s));
            let ac = base_change_squid_to_canonical(&s).unwrap();
            assert_eq!(congruence_check(&a, &c, &ac), Ok(true), "{s:?}");
            if let Ok(cd) = cartan_cd(&s) {
                let b = scaled_projective_gram(&s, &cd);
                assert_eq!(congruence_check(&a, &b, &base_change_squid_to_cd(&s)), Ok(true), "{s:?}");
                let bc = base_change_cd_to_canonical(&s).unwrap();
                assert_eq!(congruence_check(&b, &c, &bc), Ok(true), "{s:?}");
            }
        }
    }
}
