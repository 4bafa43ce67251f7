//! Field elements over ℚ and 𝔽_p.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MatrixError;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// A prime field, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, MatrixError> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(MatrixError::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Map a rational into this field. Fails in 𝔽_p when p divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, MatrixError> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let num = q.numer().mod_floor(&pm).to_u64().unwrap();
                let den = q.denom().mod_floor(&pm).to_u64().unwrap();
                if den == 0 {
                    return Err(MatrixError::Parse(format!(
                        "denominator of {q} vanishes mod {p}"
                    )));
                }
                Ok(Scalar::Fp {
                    v: mulmod(num, inv_mod(den, p), p),
                    p,
                })
            }
        }
    }

    /// Parse "a", "-a" or "a/b".
    pub fn parse(self, s: &str) -> Result<Scalar, MatrixError> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, MatrixError> {
    let s = s.trim();
    let bad = || MatrixError::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

/// An exact scalar. Operations on mismatched fields panic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: inv_mod(*v, *p),
                p: *p,
            },
        }
    }

    /// The rational value, if this lives in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_integer(),
            Scalar::Fp { .. } => true,
        }
    }

    /// Sign in ℚ; `None` over 𝔽_p.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Q(q) if q.is_zero() => Some(0),
            Scalar::Q(q) if q.is_positive() => Some(1),
            Scalar::Q(_) => Some(-1),
            Scalar::Fp { .. } => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, .. } => Some(*v as i64),
        }
    }

    fn check(&self, other: &Scalar) -> u64 {
        match (self, other) {
            (Scalar::Fp { p, .. }, Scalar::Fp { p: q, .. }) if p == q => *p,
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => {
                let p = self.check(rhs);
                Scalar::Fp { v: (a + b) % p, p }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => {
                let p = self.check(rhs);
                Scalar::Fp { v: (a + p - b) % p, p }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => {
                let p = self.check(rhs);
                Scalar::Fp { v: mulmod(*a, *b, p), p }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arith() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a - &b, f.from_i64(5));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(-&a, f.from_i64(4));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(101).is_ok());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rational.parse("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert!(Field::Rational.parse("1/0").is_err());
        assert!(Field::Rational.parse("x").is_err());
    }

    #[test]
    fn denominator_divisible_by_p() {
        assert!(Field::Prime(5).parse("1/5").is_err());
    }
}
