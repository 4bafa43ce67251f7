use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn q(rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_i64(Q, rows)
}

/// Characteristic polynomial by Faddeev-LeVerrier, coefficients c_n..c_0 of
/// det(xI - A) with c_n = 1.
fn char_poly(a: &Matrix) -> Vec<BigRational> {
    let n = a.rows();
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(1))];
    let mut m = Matrix::zeros(Q, n, n);
    let id = Matrix::identity(Q, n);
    for k in 1..=n {
        let c_prev = Q.from_rational(coeffs.last().unwrap()).unwrap();
        m = a.mul(&m).add(&id.scale(&c_prev));
        let am = a.mul(&m);
        let mut tr = BigRational::zero();
        for i in 0..n {
            tr += am.get(i, i).as_rational().unwrap();
        }
        coeffs.push(-tr / BigRational::from_integer(BigInt::from(k as i64)));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let s: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial: all roots are real for a
/// symmetric matrix, so Descartes' rule counts them exactly.
fn oracle_inertia(a: &Matrix) -> (usize, usize, usize) {
    let c = char_poly(a);
    let n = a.rows();
    let zero = c.iter().rev().take_while(|x| x.is_zero()).count();
    let plus = sign_changes(&c);
    let neg: Vec<BigRational> = c
        .iter()
        .enumerate()
        .map(|(i, x)| if (n - i) % 2 == 1 { -x.clone() } else { x.clone() })
        .collect();
    let minus = sign_changes(&neg);
    (plus, zero, minus)
}

#[test]
fn rank_examples() {
    assert_eq!(Matrix::identity(Q, 2).rank(), 2);
    assert_eq!(Matrix::zeros(Q, 3, 4).rank(), 0);
    assert_eq!(q(&[vec![1, 0], vec![1, 1]]).rank(), 2);
}

#[test]
fn kernel_examples() {
    assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
    let k = q(&[vec![1, 1]]).kernel_basis();
    assert_eq!(k, vec![vec![Q.from_i64(1), Q.from_i64(-1)]]);
    // rows (1, l1), (1, l2) with l1 = 2, l2 = 5
    assert!(q(&[vec![1, 2], vec![1, 5]]).kernel_basis().is_empty());
}

#[test]
fn kernel_is_column_echelon() {
    let m = q(&[vec![0, 1, 2, 3], vec![0, 2, 4, 6]]);
    let k = m.kernel_matrix();
    assert_eq!(k.cols(), 3);
    let (e, _) = k.transpose().rref();
    assert_eq!(e, k.transpose());
}

#[test]
fn inverse_examples() {
    assert_eq!(Matrix::identity(Q, 3).inverse().unwrap(), Matrix::identity(Q, 3));
    let inv = Matrix::diagonal(Q, &[2, 3]).inverse().unwrap();
    assert_eq!(inv.get(0, 0), &Q.parse("1/2").unwrap());
    assert_eq!(inv.get(1, 1), &Q.parse("1/3").unwrap());
    assert_eq!(q(&[vec![1, 2], vec![2, 4]]).inverse(), Err(MatrixError::SingularMatrix));
}

#[test]
fn signature_examples() {
    assert_eq!(Matrix::diagonal(Q, &[1, -1, 0]).signature_symmetric(), Ok((1, 1, 1)));
    assert_eq!(Matrix::zeros(Q, 2, 2).signature_symmetric(), Ok((0, 2, 0)));
    assert_eq!(q(&[vec![0, 1], vec![1, 0]]).signature_symmetric(), Ok((1, 0, 1)));
    assert_eq!(q(&[vec![0, 1], vec![2, 0]]).signature_symmetric(), Err(MatrixError::NotSymmetric));
}

#[test]
fn signature_matches_oracle_on_fixed_cases() {
    let cases = [
        q(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]),
        q(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
        q(&[vec![0, 0, 3], vec![0, 0, 0], vec![3, 0, 0]]),
    ];
    for c in cases {
        assert_eq!(c.signature_symmetric().unwrap(), oracle_inertia(&c));
    }
}

#[test]
fn unimodular_examples() {
    assert_eq!(Matrix::identity(Q, 4).is_unimodular(), Ok(true));
    assert_eq!(Matrix::diagonal(Q, &[2, 1]).is_unimodular(), Ok(false));
    let half = Matrix::identity(Q, 2).scale(&Q.parse("1/2").unwrap());
    assert_eq!(half.is_unimodular(), Err(MatrixError::NonIntegerEntries));
}

#[test]
fn solve_and_det() {
    let a = q(&[vec![2, 1], vec![1, 3]]);
    assert_eq!(a.det().unwrap(), Q.from_i64(5));
    let x = a.solve(&[Q.from_i64(3), Q.from_i64(4)]).unwrap();
    assert_eq!(a.mul_vec(&x), vec![Q.from_i64(3), Q.from_i64(4)]);
    assert!(q(&[vec![1, 1], vec![1, 1]]).solve(&[Q.from_i64(0), Q.from_i64(1)]).is_none());
}

#[test]
fn prime_field_rank() {
    let f = Field::prime(3).unwrap();
    // determinant 3 vanishes mod 3
    let m = Matrix::from_i64(f, &[vec![1, 2], vec![2, 7]]);
    assert_eq!(m.rank(), 1);
    assert_eq!(Matrix::from_i64(Q, &[vec![1, 2], vec![2, 7]]).rank(), 2);
}

#[test]
fn json_round_trip_and_errors() {
    let m = Matrix::from_rows(
        Q,
        2,
        vec![
            vec![Q.parse("1/2").unwrap(), Q.from_i64(-3)],
            vec![Q.from_i64(0), Q.parse("-7/5").unwrap()],
        ],
    );
    let v = m.to_json();
    assert_eq!(v["entries"][0][0], "1/2");
    assert_eq!(Matrix::from_json(&v, Q).unwrap(), m);
    let bad = serde_json::json!({"rows": 1, "cols": 2, "entries": [["1"]]});
    assert!(Matrix::from_json(&bad, Q).is_err());
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
            q(&rows)
        })
    })
}

fn symmetric(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    rows[i][j] = v[i * n + j];
                    rows[j][i] = v[i * n + j];
                }
            }
            q(&rows)
        })
    })
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut s = Matrix::identity(Q, n);
        for (i, j, c, neg) in ops {
            let mut e = Matrix::identity(Q, n);
            if i != j {
                e.set(i, j, Q.from_i64(c));
            } else if neg {
                e.set(i, i, Q.from_i64(-1));
            }
            s = s.mul(&e);
        }
        s
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(5)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        let k = m.kernel_matrix();
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_two_sided(m in small_matrix(4)) {
        if let Ok(inv) = m.inverse() {
            let id = Matrix::identity(Q, m.rows());
            prop_assert_eq!(m.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(&m), id);
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn signature_matches_char_poly(m in symmetric(5)) {
        prop_assert_eq!(m.signature_symmetric().unwrap(), oracle_inertia(&m));
    }

    #[test]
    fn signature_congruence_invariant((m, s) in (2usize..=5).prop_flat_map(|n| (symmetric(n).prop_filter("size", move |m| m.rows() == n), unimodular(n)))) {
        prop_assert_eq!(s.is_unimodular(), Ok(true));
        let c = s.transpose().mul(&m).mul(&s);
        prop_assert_eq!(c.signature_symmetric().unwrap(), m.signature_symmetric().unwrap());
    }

    #[test]
    fn json_round_trip(m in small_matrix(4)) {
        let s = serde_json::to_string(&m.to_json()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(Matrix::from_json(&v, Q).unwrap(), m);
    }
}
