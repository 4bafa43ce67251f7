//! Characteristic polynomials and roots in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Matrix, Scalar};

/// Coefficients of det(xI − A), leading coefficient first (Berkowitz, division free).
pub fn char_poly(a: &Matrix) -> Vec<Scalar> {
    assert!(a.is_square());
    let f = a.field();
    let mut v = vec![f.one()];
    for r in 0..a.rows() {
        let sub = a.submatrix(0, r, 0, r);
        let row = a.submatrix(r, r + 1, 0, r);
        let mut col = a.submatrix(0, r, r, r + 1);
        let mut t = vec![f.one(), -a.get(r, r)];
        for _ in 0..r {
            t.push(-row.mul(&col).get(0, 0));
            col = sub.mul(&col);
        }
        let mut next = vec![f.zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, c) in v.iter().enumerate().take(i + 1) {
                *out = &*out + &(&t[i - j] * c);
            }
        }
        v = next;
    }
    v
}

pub fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Largest prime for which roots are found by exhaustive search.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 100_000;

/// Distinct roots lying in the base field. Over ℚ this uses the rational root
/// test and gives up on constant terms beyond 10^12; over 𝔽_p it is exhaustive
/// up to `EXHAUSTIVE_ROOT_LIMIT`.
pub fn roots_in_field(poly: &[Scalar]) -> Vec<Scalar> {
    let Some(first) = poly.first() else { return vec![] };
    match first.field() {
        Field::Prime(p) => {
            let f = Field::Prime(p);
            (0..p.min(EXHAUSTIVE_ROOT_LIMIT))
                .map(|c| f.from_i64(c as i64))
                .filter(|c| eval(poly, c).is_zero())
                .collect()
        }
        Field::Rational => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let q: Vec<BigRational> = poly.iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let lcm = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = q.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.len() > 1 && ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
    }
    let mut roots = Vec::new();
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
        if roots.is_empty() {
            roots.push(Field::Rational.zero());
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(lead), Some(cst)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let ipoly: Vec<Scalar> = ints.iter().map(|c| Scalar::Q(BigRational::from_integer(c.clone()))).collect();
    for a in &cst {
        for b in &lead {
            for s in [1i64, -1] {
                let c = Scalar::Q(BigRational::new(BigInt::from(s * a), BigInt::from(*b)));
                if !roots.contains(&c) && eval(&ipoly, &c).is_zero() {
                    roots.push(c);
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_two_by_two() {
        let a = Matrix::from_i64(Field::Rational, &[vec![1, 2], vec![3, 4]]);
        let c: Vec<i64> = char_poly(&a).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(c, vec![1, -5, -2]);
    }

    #[test]
    fn rational_and_modular_roots() {
        let a = Matrix::from_i64(Field::Rational, &[vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, -3]]);
        let mut r: Vec<i64> = roots_in_field(&char_poly(&a)).iter().map(|x| x.to_i64().unwrap()).collect();
        r.sort();
        assert_eq!(r, vec![-3, 2]);
        let f = Field::prime(7).unwrap();
        let b = Matrix::from_i64(f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(roots_in_field(&char_poly(&b)).len(), 2);
        let rot = Matrix::from_i64(f, &[vec![0, -1], vec![1, 0]]);
        assert!(roots_in_field(&char_poly(&rot)).is_empty());
    }

    #[test]
    fn half_is_found() {
        let a = Matrix::from_rows(
            Field::Rational,
            1,
            vec![vec![Field::Rational.parse("1/2").unwrap()]],
        );
        assert_eq!(roots_in_field(&char_poly(&a)), vec![Field::Rational.parse("1/2").unwrap()]);
    }
}
