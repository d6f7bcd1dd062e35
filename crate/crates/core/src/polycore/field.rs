use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible prime modulus; products of two residues must fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported maximum {MAX_PRIME}")]
    PrimeTooLarge(u64),
    #[error("denominator of {0} is not invertible modulo {1}")]
    NotInvertible(String, u64),
}

/// Coefficient field of a polynomial ring: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Field of the given characteristic (0 means the rationals).
    pub fn of_characteristic(ch: u64) -> Result<Self, FieldError> {
        if ch == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(ch)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let m = *p as i64;
                FieldElem::Mod {
                    value: v.rem_euclid(m) as u64,
                    modulus: *p,
                }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                FieldElem::Mod {
                    value: r.to_u64().unwrap_or(0),
                    modulus: *p,
                }
            }
        }
    }

    /// Maps a rational number into this field.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElem, FieldError> {
        match self {
            Field::Rational => Ok(FieldElem::Rational(q.clone())),
            Field::Prime(p) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den
                    .inv()
                    .ok_or_else(|| FieldError::NotInvertible(q.to_string(), *p))?;
                Ok(&num * &inv)
            }
        }
    }

    /// Re-expresses an element of any field in this one. Residues are lifted to
    /// their least non-negative representative first.
    pub fn coerce(&self, e: &FieldElem) -> Result<FieldElem, FieldError> {
        match e {
            FieldElem::Rational(q) => self.from_rational(q),
            FieldElem::Mod { value, .. } => Ok(self.from_i64(*value as i64)),
        }
    }

    pub fn contains(&self, e: &FieldElem) -> bool {
        matches!(
            (self, e),
            (Field::Rational, FieldElem::Rational(_))
        ) || matches!((self, e), (Field::Prime(p), FieldElem::Mod { modulus, .. }) if p == modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element. Rationals are kept reduced with positive
/// denominator; residues satisfy `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Mod { value, .. } => *value == 1,
        }
    }

    /// True for strictly negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_negative(),
            FieldElem::Mod { .. } => false,
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Rational(q) => FieldElem::Rational(q.recip()),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, e: u32) -> FieldElem {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(num_traits::pow(q.clone(), e as usize)),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: mod_pow(*value, e as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(q) => Some(q),
            FieldElem::Mod { .. } => None,
        }
    }

    /// Total order used only for deterministic output (numeric for
    /// rationals, by residue for prime fields).
    pub fn canonical_cmp(&self, other: &FieldElem) -> std::cmp::Ordering {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => a.cmp(b),
            (FieldElem::Mod { value: a, .. }, FieldElem::Mod { value: b, .. }) => a.cmp(b),
            (FieldElem::Rational(_), _) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modop:expr) => {
        impl<'a> $trait<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                match (self, rhs) {
                    (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational($rat(a, b)),
                    (
                        FieldElem::Mod { value: a, modulus: p },
                        FieldElem::Mod { value: b, modulus: q },
                    ) => {
                        assert_eq!(p, q, "field mismatch in coefficient arithmetic");
                        FieldElem::Mod {
                            value: $modop(*a, *b, *p),
                            modulus: *p,
                        }
                    }
                    _ => panic!("field mismatch in coefficient arithmetic"),
                }
            }
        }
        impl $trait for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| {
    (a + b) % p
});
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| {
    (a + p - b) % p
});
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| {
    a * b % p
});

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &'a FieldElem) -> FieldElem {
        let inv = rhs.inv().expect("division by zero field element");
        self * &inv
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        &self / &rhs
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parses an integer or fraction literal `a/b` as a rational number.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = FieldElem::Rational(BigRational::new(2.into(), 4.into()));
        let b = q.from_i64(1);
        let s = &a + &a;
        assert_eq!(s, b);
        let h = FieldElem::Rational(BigRational::new((-3).into(), (-6).into()));
        assert_eq!(h.to_string(), "1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let three = f.from_i64(3);
        assert_eq!(three.inv().unwrap(), f.from_i64(2));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert_eq!(&three * &three, f.from_i64(4));
        assert_eq!(-&three, f.from_i64(2));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
        assert!(matches!(Field::prime(1 << 40), Err(FieldError::PrimeTooLarge(_))));
        assert_eq!(Field::of_characteristic(0), Ok(Field::Rational));
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::prime(7).unwrap();
        let half = parse_rational("1/2").unwrap();
        assert_eq!(f.from_rational(&half).unwrap(), f.from_i64(4));
        let seventh = parse_rational("3/7").unwrap();
        assert!(f.from_rational(&seventh).is_err());
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("-3/6").unwrap().to_string(), "-1/2");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
