//! Isomorphism and indecomposability tests, and tilting verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::homological::{ext_dim, hom_dim, hom_space, projective_dimension};
use super::{BoundQuiverAlgebra, Morphism, Representation};
use crate::exactalg::poly::{char_poly, roots_in_field};
use crate::exactalg::{Field, Matrix, Scalar};

const SEED: u64 = 0x5eed_7111;

fn random_combination(field: Field, basis: &[Morphism], rng: &mut ChaCha8Rng) -> Morphism {
    let mut acc = basis[0].scale(&field.zero());
    for b in basis {
        let c = field.from_i64(rng.gen_range(-1000..=1000));
        acc = acc.add(&b.scale(&c));
    }
    acc
}

/// Exhaustive enumeration is used over 𝔽_p when p^(dim Hom) is at most this.
const EXHAUSTIVE_LIMIT: u64 = 4096;

pub fn is_isomorphic(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let basis = hom_space(alg, m, n);
    if basis.is_empty() {
        return false;
    }
    if let Field::Prime(p) = alg.field() {
        let d = basis.len() as u32;
        if p.checked_pow(d).is_some_and(|n| n <= EXHAUSTIVE_LIMIT) {
            let total = p.pow(d);
            return (1..total).any(|mut k| {
                let mut acc = basis[0].scale(&alg.field().zero());
                for b in &basis {
                    acc = acc.add(&b.scale(&alg.field().from_i64((k % p) as i64)));
                    k /= p;
                }
                acc.is_iso()
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..2 * basis.len() + 8).any(|_| random_combination(alg.field(), &basis, &mut rng).is_iso())
}

/// Fitting decomposition test for one endomorphism: true if x splits M.
fn fitting_splits(x: &Morphism, dims: &[usize]) -> bool {
    let total: usize = dims.iter().sum();
    let mut pow = x.clone();
    let mut k = 1;
    while k < total {
        pow = pow.compose(&pow);
        k *= 2;
    }
    let r: usize = pow.blocks.iter().map(Matrix::rank).sum();
    r > 0 && r < total
}

/// Whether M is indecomposable. Bricks are accepted at once; otherwise
/// endomorphisms and their shifts by eigenvalues in the base field are
/// searched for a nontrivial Fitting decomposition. A module whose
/// endomorphisms have no eigenvalues in the base field is reported
/// indecomposable.
pub fn is_indecomposable(alg: &BoundQuiverAlgebra, m: &Representation) -> bool {
    if m.is_zero() {
        return false;
    }
    let basis = hom_space(alg, m, m);
    if basis.len() == 1 {
        return true;
    }
    let f = alg.field();
    let id = Morphism::identity(m);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut candidates: Vec<Morphism> = basis.clone();
    for _ in 0..basis.len() + 4 {
        candidates.push(random_combination(f, &basis, &mut rng));
    }
    for x in &candidates {
        let total = x.total_matrix(f);
        for c in roots_in_field(&char_poly(&total)) {
            let shifted = x.add(&id.scale(&-c));
            if fitting_splits(&shifted, &m.dims) {
                return false;
            }
        }
    }
    true
}

/// dim Hom(T_j, T_i) at (i, j).
pub fn end_dims(alg: &BoundQuiverAlgebra, summands: &[Representation]) -> Matrix {
    let n = summands.len();
    let mut m = Matrix::zeros(Field::Rational, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, Field::Rational.from_i64(hom_dim(alg, &summands[j], &summands[i]) as i64));
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingReport {
    /// Projective (or injective, for cotilting) dimension of each summand.
    pub dims: Vec<Option<usize>>,
    pub homological_dim_ok: bool,
    pub ext1_vanishes: bool,
    pub indecomposable: bool,
    pub pairwise_non_isomorphic: bool,
    pub count_ok: bool,
}

impl TiltingReport {
    pub fn holds(&self) -> bool {
        self.homological_dim_ok && self.ext1_vanishes && self.indecomposable && self.pairwise_non_isomorphic && self.count_ok
    }
}

fn common_report(alg: &BoundQuiverAlgebra, summands: &[Representation], dims: Vec<Option<usize>>) -> TiltingReport {
    let homological_dim_ok = dims.iter().all(|d| d.is_some_and(|d| d <= 1));
    let ext1_vanishes = summands
        .iter()
        .all(|a| summands.iter().all(|b| ext_dim(alg, a, b, 1) == 0));
    let indecomposable = summands.iter().all(|t| is_indecomposable(alg, t));
    let pairwise_non_isomorphic = (0..summands.len())
        .all(|i| (0..i).all(|j| !is_isomorphic(alg, &summands[i], &summands[j])));
    TiltingReport {
        dims,
        homological_dim_ok,
        ext1_vanishes,
        indecomposable,
        pairwise_non_isomorphic,
        count_ok: summands.len() == alg.vertex_count(),
    }
}

pub fn tilting_report(alg: &BoundQuiverAlgebra, summands: &[Representation]) -> TiltingReport {
    let dims = summands.iter().map(|t| projective_dimension(alg, t)).collect();
    common_report(alg, summands, dims)
}

/// Injective dimensions are projective dimensions of the duals over the opposite algebra.
pub fn cotilting_report(alg: &BoundQuiverAlgebra, summands: &[Representation]) -> TiltingReport {
    let op = alg.opposite();
    let dims = summands.iter().map(|t| projective_dimension(&op, &t.dual())).collect();
    common_report(alg, summands, dims)
}

/// Basic tilting: pd ≤ 1, no self-extensions, and as many pairwise
/// non-isomorphic indecomposable summands as vertices.
pub fn is_tilting(alg: &BoundQuiverAlgebra, summands: &[Representation]) -> bool {
    tilting_report(alg, summands).holds()
}

pub fn is_cotilting(alg: &BoundQuiverAlgebra, summands: &[Representation]) -> bool {
    cotilting_report(alg, summands).holds()
}

/// Dimension vectors of the summands as the columns of a matrix.
pub fn dimension_matrix(summands: &[Representation]) -> Matrix {
    let n = summands.first().map_or(0, |t| t.dims.len());
    let cols: Vec<Vec<Scalar>> = summands
        .iter()
        .map(|t| t.dims.iter().map(|&d| Field::Rational.from_i64(d as i64)).collect())
        .collect();
    Matrix::from_columns(Field::Rational, n, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundquiver::homological::{injective, projective};
    use crate::boundquiver::Quiver;

    fn kronecker(field: Field) -> BoundQuiverAlgebra {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("x".into(), "1".into(), "2".into()), ("y".into(), "1".into(), "2".into())],
        )
        .unwrap();
        BoundQuiverAlgebra::new(q, vec![], field).unwrap()
    }

    fn regular(alg: &BoundQuiverAlgebra, x: [i64; 4], y: [i64; 4]) -> Representation {
        let mut m = Representation::with_dims(alg, vec![2, 2]);
        let f = alg.field();
        m.maps[0] = Matrix::from_i64(f, &[vec![x[0], x[1]], vec![x[2], x[3]]]);
        m.maps[1] = Matrix::from_i64(f, &[vec![y[0], y[1]], vec![y[2], y[3]]]);
        m
    }

    #[test]
    fn free_module_is_tilting() {
        let a = kronecker(Field::Rational);
        let t: Vec<_> = (0..2).map(|v| projective(&a, v)).collect();
        assert!(is_tilting(&a, &t));
        let i: Vec<_> = (0..2).map(|v| injective(&a, v)).collect();
        assert!(is_cotilting(&a, &i));
    }

    #[test]
    fn detects_decomposable_regular_modules() {
        for f in [Field::Rational, Field::prime(5).unwrap(), Field::prime(101).unwrap()] {
            let a = kronecker(f);
            // (1:0) ⊕ (1:1): decomposable, End = k × k
            let split = regular(&a, [1, 0, 0, 1], [0, 0, 0, 1]);
            assert!(!is_indecomposable(&a, &split));
            // a Jordan block at (1:0): indecomposable with End = k[t]/t²
            let jordan = regular(&a, [1, 0, 0, 1], [0, 1, 0, 0]);
            assert!(is_indecomposable(&a, &jordan));
            assert!(!is_isomorphic(&a, &split, &jordan));
        }
    }

    #[test]
    fn isomorphism_after_base_change() {
        let a = kronecker(Field::Rational);
        let m = regular(&a, [1, 0, 0, 1], [2, 0, 0, 3]);
        let n = regular(&a, [1, 0, 0, 1], [3, 0, 0, 2]);
        assert!(is_isomorphic(&a, &m, &n));
        let o = regular(&a, [1, 0, 0, 1], [2, 0, 0, 4]);
        assert!(!is_isomorphic(&a, &m, &o));
    }
}
