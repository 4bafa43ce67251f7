//! Gram matrices of canonical bilinear lattices in the s-basis and the two
//! canonical bases, plus the Coxeter transformation.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{LatticeError, Symbol};
use crate::exactalg::{Field, Matrix, Scalar};

const Q: Field = Field::Rational;

fn rat(n: u64, d: u64) -> Scalar {
    Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn int(n: i64) -> Scalar {
    Q.from_i64(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearLattice {
    pub symbol: Symbol,
    pub gram: Matrix,
    pub basis_labels: Vec<String>,
}

impl BilinearLattice {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// Index of s_i^{(j)} (arm `i` counted from 0).
    pub fn s_index(&self, i: usize, j: usize) -> usize {
        2 + self.symbol.arms[..i].iter().map(|a| a.p as usize - 1).sum::<usize>() + j
    }

    pub fn form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).fold(Q.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "symbol": self.symbol.to_json(),
            "basis_labels": self.basis_labels,
            "gram": self.gram.to_json(),
        })
    }
}

/// Gram matrix in the basis (a, w, s_i^{(j)}).
pub fn gram_s_basis(s: &Symbol) -> BilinearLattice {
    let n = s.rank();
    let k = s.kappa();
    let eps = s.epsilon as u64;
    let mut g = Matrix::zeros(Q, n, n);
    g.set(0, 0, int(k as i64));
    g.set(0, 1, int((k * eps) as i64));
    g.set(1, 0, int(-((k * eps) as i64)));
    let mut labels = vec!["a".to_string(), "w".to_string()];
    let mut idx = 2;
    for (i, arm) in s.arms.iter().enumerate() {
        let f = arm.f as u64;
        g.set(0, idx, int((k * eps * f) as i64));
        let c = rat(k * eps * f, arm.e as u64);
        assert!(c.is_integer(), "kappa*eps*f/e must be integral");
        for j in 0..arm.p as usize - 1 {
            g.set(idx + j, idx + j, c.clone());
            if j > 0 {
                g.set(idx + j - 1, idx + j, -&c);
            }
            labels.push(format!("s_{}^({})", i + 1, j));
        }
        idx += arm.p as usize - 1;
    }
    BilinearLattice {
        symbol: s.clone(),
        gram: g,
        basis_labels: labels,
    }
}

/// τ = −G⁻¹Gᵀ, the unique matrix with ⟨y,x⟩ = −⟨x,τy⟩ for ⟨x,y⟩ = xᵀGy.
pub fn coxeter_matrix(l: &BilinearLattice) -> Result<Matrix, LatticeError> {
    let ginv = l.gram.inverse()?;
    let tau = ginv.mul(&l.gram.transpose()).neg();
    if !tau.is_integral() {
        return Err(LatticeError::NonIntegralCoxeter);
    }
    Ok(tau)
}

/// Which range of j indexes the vectors a_i(j) = Σ_{l=1}^{j} τ^{−l}s_i + (..)·a.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexConvention {
    /// 0 ≤ j ≤ p_i − 2, literally as displayed.
    ZeroBased,
    /// 1 ≤ j ≤ p_i − 1.
    OneBased,
}

impl IndexConvention {
    pub fn range(self, p: u32) -> std::ops::RangeInclusive<usize> {
        match self {
            IndexConvention::ZeroBased => 0..=p as usize - 2,
            IndexConvention::OneBased => 1..=p as usize - 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexConvention::ZeroBased => "j=0..p-2",
            IndexConvention::OneBased => "j=1..p-1",
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisGram {
    pub gram: Matrix,
    pub convention: IndexConvention,
    /// Columns are the new basis vectors in s-basis coordinates.
    pub base_change: Matrix,
    pub basis_labels: Vec<String>,
}

impl BasisGram {
    pub fn to_json(&self) -> Value {
        json!({
            "convention": self.convention.name(),
            "basis_labels": self.basis_labels,
            "gram": self.gram.to_json(),
            "base_change": self.base_change.to_json(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Canonical,
    Opposite,
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Q.zero(); n];
    v[i] = Q.one();
    v
}

fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a = &*a + &(c * b);
    }
}

fn basis_vectors(l: &BilinearLattice, tau_inv: &Matrix, kind: Kind, conv: IndexConvention) -> Matrix {
    let s = &l.symbol;
    let n = l.rank();
    let eps = int(s.epsilon as i64);
    let a = unit(n, 0);
    let w = unit(n, 1);
    // anchor: a for the canonical basis, εa − w for the opposite one
    let mut anchor = vec![Q.zero(); n];
    match kind {
        Kind::Canonical => axpy(&mut anchor, &Q.one(), &a),
        Kind::Opposite => {
            axpy(&mut anchor, &eps, &a);
            axpy(&mut anchor, &int(-1), &w);
        }
    }
    let mut cols = vec![anchor.clone()];
    for (i, arm) in s.arms.iter().enumerate() {
        let si = unit(n, l.s_index(i, 0));
        let coeff = match kind {
            Kind::Canonical => int((s.epsilon * arm.f) as i64),
            Kind::Opposite => int(arm.f as i64),
        };
        for j in conv.range(arm.p) {
            let mut v = vec![Q.zero(); n];
            let mut cur = si.clone();
            for _ in 1..=j {
                cur = tau_inv.mul_vec(&cur);
                axpy(&mut v, &Q.one(), &cur);
            }
            axpy(&mut v, &coeff, &anchor);
            cols.push(v);
        }
    }
    let last = match kind {
        Kind::Canonical => {
            let mut v = w.clone();
            axpy(&mut v, &eps, &a);
            v
        }
        Kind::Opposite => a,
    };
    cols.push(last);
    Matrix::from_columns(Q, n, &cols)
}

/// The matrix of the first display: first row (κ, κεf_i…, 2κε), arm blocks
/// upper triangular and constant κεf_i/e_i, last column κε²f_i, corner κε².
pub fn display_canonical(s: &Symbol) -> Matrix {
    display(s, Kind::Canonical)
}

/// The matrix of the second display: first row (κε², κε²f_i…, 2κε), arm
/// blocks κεf_i/e_i, last column κεf_i, corner κ.
pub fn display_opposite(s: &Symbol) -> Matrix {
    display(s, Kind::Opposite)
}

fn display(s: &Symbol, kind: Kind) -> Matrix {
    let n = s.rank();
    let k = s.kappa() as i64;
    let eps = s.epsilon as i64;
    let (top, bottom) = match kind {
        Kind::Canonical => (k, k * eps * eps),
        Kind::Opposite => (k * eps * eps, k),
    };
    let mut m = Matrix::zeros(Q, n, n);
    m.set(0, 0, int(top));
    m.set(n - 1, n - 1, int(bottom));
    m.set(0, n - 1, int(2 * k * eps));
    let mut idx = 1;
    for arm in &s.arms {
        let f = arm.f as i64;
        let (row, col) = match kind {
            Kind::Canonical => (k * eps * f, k * eps * eps * f),
            Kind::Opposite => (k * eps * eps * f, k * eps * f),
        };
        let c = rat((k * eps * f) as u64, arm.e as u64);
        let len = arm.p as usize - 1;
        for j in 0..len {
            m.set(0, idx + j, int(row));
            m.set(idx + j, n - 1, int(col));
            for jj in j..len {
                m.set(idx + j, idx + jj, c.clone());
            }
        }
        idx += len;
    }
    m
}

fn labels(s: &Symbol, kind: Kind, conv: IndexConvention) -> Vec<String> {
    let (first, arm, last) = match kind {
        Kind::Canonical => ("a", "a", "w+eps*a"),
        Kind::Opposite => ("eps*a-w", "b", "a"),
    };
    let mut v = vec![first.to_string()];
    for (i, a) in s.arms.iter().enumerate() {
        for j in conv.range(a.p) {
            v.push(format!("{arm}_{}({j})", i + 1));
        }
    }
    v.push(last.to_string());
    v
}

fn change_basis(l: &BilinearLattice, tau_inv: &Matrix, kind: Kind) -> Result<BasisGram, LatticeError> {
    let s = &l.symbol;
    let expected = display(s, kind);
    for conv in [IndexConvention::ZeroBased, IndexConvention::OneBased] {
        let b = basis_vectors(l, tau_inv, kind, conv);
        let g = b.transpose().mul(&l.gram).mul(&b);
        if g == expected {
            return Ok(BasisGram {
                gram: g,
                convention: conv,
                base_change: b,
                basis_labels: labels(s, kind, conv),
            });
        }
    }
    Err(LatticeError::NoConventionMatches)
}

/// τ⁻¹ = −G⁻ᵀG, after checking that τ is integral.
fn inverse_coxeter(l: &BilinearLattice) -> Result<Matrix, LatticeError> {
    let ginv = l.gram.inverse()?;
    if !ginv.mul(&l.gram.transpose()).is_integral() {
        return Err(LatticeError::NonIntegralCoxeter);
    }
    Ok(ginv.transpose().mul(&l.gram).neg())
}

/// Gram matrix in the canonical basis (a, a_i(j), w+εa).
pub fn gram_canonical_basis(s: &Symbol) -> Result<BasisGram, LatticeError> {
    let l = gram_s_basis(s);
    change_basis(&l, &inverse_coxeter(&l)?, Kind::Canonical)
}

/// Gram matrix in the basis (εa−w, b_i(j), a).
pub fn gram_opposite_basis(s: &Symbol) -> Result<BasisGram, LatticeError> {
    let l = gram_s_basis(s);
    change_basis(&l, &inverse_coxeter(&l)?, Kind::Opposite)
}

/// Both of the above, sharing one inversion.
pub fn gram_both_bases(s: &Symbol) -> Result<(BasisGram, BasisGram), LatticeError> {
    let l = gram_s_basis(s);
    let tau_inv = inverse_coxeter(&l)?;
    Ok((change_basis(&l, &tau_inv, Kind::Canonical)?, change_basis(&l, &tau_inv, Kind::Opposite)?))
}

/// Inertia of the symmetrized form G + Gᵀ.
pub fn signature(s: &Symbol) -> (usize, usize, usize) {
    let g = gram_s_basis(s).gram;
    g.add(&g.transpose())
        .signature_symmetric()
        .expect("symmetrized Gram is symmetric")
}

/// The signature the representation-type table predicts from δ.
pub fn expected_signature(s: &Symbol) -> (usize, usize, usize) {
    let n = s.rank();
    match s.delta() {
        d if d < 0 => (n - 1, 1, 0),
        0 => (n - 2, 2, 0),
        _ => (n - 2, 1, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Arm;

    fn sym(eps: u32, arms: &[(u32, u32, u32)]) -> Symbol {
        Symbol::new(eps, arms.iter().map(|&(p, e, f)| Arm::new(p, e, f)).collect()).unwrap()
    }

    #[test]
    fn s_basis_examples() {
        let l = gram_s_basis(&sym(1, &[(2, 1, 2)]));
        assert_eq!(l.gram, Matrix::from_i64(Q, &[vec![1, 1, 2], vec![-1, 0, 0], vec![0, 0, 2]]));
        let l = gram_s_basis(&sym(1, &[(2, 1, 1)]));
        assert_eq!(l.gram, Matrix::from_i64(Q, &[vec![1, 1, 1], vec![-1, 0, 0], vec![0, 0, 1]]));
        assert!(l.gram.get(1, 1).is_zero());
        assert_eq!(l.basis_labels, vec!["a", "w", "s_1^(0)"]);
    }

    #[test]
    fn coxeter_defining_identity() {
        for s in [sym(1, &[(2, 1, 1)]), sym(2, &[(3, 2, 1), (2, 1, 3)]), sym(1, &[(2, 1, 1); 4])] {
            let l = gram_s_basis(&s);
            let tau = coxeter_matrix(&l).unwrap();
            let n = l.rank();
            for x in 0..n {
                for y in 0..n {
                    let (ex, ey) = (unit(n, x), unit(n, y));
                    assert_eq!(l.form(&ey, &ex), -l.form(&ex, &tau.mul_vec(&ey)));
                }
            }
        }
    }

    #[test]
    fn coxeter_period_two() {
        let l = gram_s_basis(&sym(1, &[(2, 1, 1)]));
        let tau = coxeter_matrix(&l).unwrap();
        let s = unit(3, 2);
        assert_eq!(tau.mul_vec(&tau.mul_vec(&s)), s);
    }

    #[test]
    fn coxeter_shifts_arm() {
        let s = sym(2, &[(4, 1, 2), (3, 2, 1)]);
        let l = gram_s_basis(&s);
        let tau = coxeter_matrix(&l).unwrap();
        for (i, arm) in s.arms.iter().enumerate() {
            for j in 0..arm.p as usize - 2 {
                let v = tau.mul_vec(&unit(l.rank(), l.s_index(i, j)));
                assert_eq!(v, unit(l.rank(), l.s_index(i, j + 1)));
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let g = gram_canonical_basis(&sym(1, &[(2, 1, 1)])).unwrap();
        assert_eq!(g.gram, Matrix::from_i64(Q, &[vec![1, 1, 2], vec![0, 1, 1], vec![0, 0, 1]]));
        assert_eq!(g.convention, IndexConvention::OneBased);
        let g = gram_canonical_basis(&sym(1, &[(2, 1, 2)])).unwrap();
        assert_eq!(g.gram, Matrix::from_i64(Q, &[vec![1, 2, 2], vec![0, 2, 2], vec![0, 0, 1]]));
    }

    #[test]
    fn opposite_examples() {
        let g = gram_opposite_basis(&sym(1, &[(2, 1, 1)])).unwrap();
        assert_eq!(g.gram, Matrix::from_i64(Q, &[vec![1, 1, 2], vec![0, 1, 1], vec![0, 0, 1]]));
        let s = sym(2, &[(2, 1, 2)]);
        let g = gram_opposite_basis(&s).unwrap();
        let k = s.kappa() as i64;
        assert_eq!(g.gram.get(0, 0), &int(k * 4));
        let c = gram_canonical_basis(&s).unwrap();
        assert_eq!(g.gram.det(), c.gram.det());
    }

    #[test]
    fn signature_examples() {
        let sl = |w: &[u32]| Symbol::simply_laced(w).unwrap();
        // ranks 9, 10, 11
        assert_eq!(signature(&sl(&[2, 3, 5])), (8, 1, 0));
        assert_eq!(signature(&sl(&[2, 3, 6])), (8, 2, 0));
        assert_eq!(signature(&sl(&[2, 3, 7])), (9, 1, 1));
        for w in [[2, 3, 5], [2, 3, 6], [2, 3, 7]] {
            assert_eq!(signature(&sl(&w)), expected_signature(&sl(&w)));
        }
    }
}
