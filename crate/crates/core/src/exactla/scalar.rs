//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse field spec `{0}` (expected `q` or `fp:<p>`)")]
    BadFieldSpec(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// The base field of every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Parses `q` or `fp:<p>`.
    pub fn parse(spec: &str) -> Result<Self, FieldError> {
        let s = spec.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        match s.strip_prefix("fp:") {
            Some(p) => {
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| FieldError::BadFieldSpec(spec.to_string()))?;
                Field::prime(p)
            }
            None => Err(FieldError::BadFieldSpec(spec.to_string())),
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den`; errors when `den` vanishes in this field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    u64::try_from(r).expect("residue fits in u64")
                };
                let n = Scalar::Prime { value: reduce(num), modulus: p };
                let d = Scalar::Prime { value: reduce(den), modulus: p };
                let inv = d.inv().ok_or(FieldError::DivisionByZero)?;
                Ok(&n * &inv)
            }
        }
    }

    /// Parses an exact scalar such as `3`, `-3/2` or `−3/2` (Unicode minus).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, FieldError> {
        let cleaned: String = text.trim().replace('\u{2212}', "-");
        let bad = || FieldError::BadScalar(text.to_string());
        let (num, den) = match cleaned.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (cleaned.as_str(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.ratio(&num, &den)
    }

    pub fn name(self) -> String {
        match self {
            Field::Rational => "q".to_string(),
            Field::Prime(p) => format!("fp:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An element of [`Field`]. Values are always kept in canonical form, so
/// derived equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalars from different fields combined"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Scalar {
    /// `self += a * b`, the inner operation of every elimination and product.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = &*self + &(a * b);
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("-3/2").unwrap(), q.parse_scalar("\u{2212}3/2").unwrap());
        assert_eq!(q.parse_scalar("4/2").unwrap(), q.from_i64(2));
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
        assert_eq!(q.parse_scalar("-3/2").unwrap().to_string(), "-3/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        let inv = three.inv().unwrap();
        assert!((&three * &inv).is_one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse_scalar("1/7").is_err());
        assert!(Field::prime(8).is_err());
    }

    #[test]
    fn field_specs() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("fp:5").unwrap(), Field::Prime(5));
        assert!(Field::parse("fp:6").is_err());
        assert!(Field::parse("r").is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::Prime(3).zero().inv().is_none());
    }
}
