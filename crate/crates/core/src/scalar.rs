//! Exact coefficient arithmetic: prime fields `F_p`, the rationals, and
//! the integers.
//!
//! [`Scalar`] values are self-describing (a prime-field element carries
//! its modulus), so mixing elements of different domains is detected at
//! run time. Prime-field values are kept reduced to `0..p`, rationals in
//! lowest terms; equality is therefore structural.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Coefficient domain of a [`Scalar`], a [`crate::ring::Ring`] or a
/// [`crate::matrix::FieldMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// The prime field `F_p`.
    Prime(u64),
    /// The field of rational numbers.
    Rational,
    /// The ring of integers (not a field; used by the generic-ring
    /// verification code).
    Integer,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("domain mismatch: {0} vs {1}")]
    Mismatch(Domain, Domain),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible over {1}")]
    NotInvertible(Scalar, Domain),
}

impl Domain {
    /// Constructs `F_p`, checking that `p` is prime.
    pub fn prime(p: u64) -> Result<Self, DomainError> {
        if is_prime(p) {
            Ok(Domain::Prime(p))
        } else {
            Err(DomainError::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Integer)
    }

    /// Characteristic of the domain (0 for `Q` and `Z`).
    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::Prime(p) => *p,
            Domain::Rational | Domain::Integer => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::Prime(p) => Scalar::Prime { value: 0, modulus: *p },
            Domain::Rational => Scalar::Rational(BigRational::zero()),
            Domain::Integer => Scalar::Integer(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Embeds a machine integer, reducing modulo `p` for prime fields.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Domain::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Prime { value: r, modulus: *p }
            }
            Domain::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Domain::Integer => Scalar::Integer(BigInt::from(n)),
        }
    }

    /// Embeds an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Domain::Prime(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.sign() == Sign::Minus {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Prime { value: digits.first().copied().unwrap_or(0), modulus: *p }
            }
            Domain::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Domain::Integer => Scalar::Integer(n.clone()),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Prime(p) => write!(f, "F{}", p),
            Domain::Rational => write!(f, "Q"),
            Domain::Integer => write!(f, "Z"),
        }
    }
}

/// An exact coefficient: an element of `F_p`, `Q` or `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime { value: u64, modulus: u64 },
    Rational(BigRational),
    Integer(BigInt),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Prime { modulus, .. } => Domain::Prime(*modulus),
            Scalar::Rational(_) => Domain::Rational,
            Scalar::Integer(_) => Domain::Integer,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
            Scalar::Integer(n) => n.is_one(),
        }
    }

    fn check_domain(&self, other: &Scalar) -> Result<(), DomainError> {
        let (a, b) = (self.domain(), other.domain());
        if a == b {
            Ok(())
        } else {
            Err(DomainError::Mismatch(a, b))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, DomainError> {
        self.check_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: add_mod(*a, *b, *p), modulus: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, DomainError> {
        self.check_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Prime { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus - value };
                Scalar::Prime { value: v, modulus: *modulus }
            }
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Integer(n) => Scalar::Integer(-n),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, DomainError> {
        self.checked_add(&other.neg())
    }

    /// Multiplicative inverse. Errors on zero and on non-unit integers.
    pub fn inverse(&self) -> Result<Scalar, DomainError> {
        if self.is_zero() {
            return Err(DomainError::DivisionByZero);
        }
        match self {
            Scalar::Prime { value, modulus } => Ok(Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Integer(n) => {
                if n.is_one() || (-n).is_one() {
                    Ok(Scalar::Integer(n.clone()))
                } else {
                    Err(DomainError::NotInvertible(self.clone(), Domain::Integer))
                }
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, DomainError> {
        self.checked_mul(&other.inverse()?)
    }

    /// Exact division: over a field this is ordinary division; over the
    /// integers it succeeds only when the quotient is integral.
    pub fn div_exact(&self, other: &Scalar) -> Option<Scalar> {
        if other.is_zero() {
            return None;
        }
        match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => {
                if (a % b).is_zero() {
                    Some(Scalar::Integer(a / b))
                } else {
                    None
                }
            }
            _ => self.checked_div(other).ok(),
        }
    }

    /// Panicking sum, for internal use where domains are known equal.
    pub fn add(&self, other: &Scalar) -> Scalar {
        self.checked_add(other).expect("scalar domain mismatch")
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.checked_sub(other).expect("scalar domain mismatch")
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("scalar domain mismatch")
    }

    /// True for rationals/integers strictly below zero; prime-field
    /// elements are never negative (they are stored reduced).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Prime { .. } => false,
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Integer(n) => n.is_negative(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime { value, .. } => write!(f, "{}", value),
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Integer(n) => write!(f, "{}", n),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse mod a prime, by extended Euclid.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus not prime");
    s0.rem_euclid(p as i128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic_wraps() {
        let f5 = Domain::prime(5).unwrap();
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a.add(&b), f5.from_i64(2));
        assert_eq!(a.mul(&b), f5.from_i64(2));
        assert_eq!(a.neg(), f5.from_i64(2));
        assert_eq!(a.inverse().unwrap(), f5.from_i64(2)); // 3*2 = 6 = 1
    }

    #[test]
    fn negative_embedding_reduces() {
        let f2 = Domain::prime(2).unwrap();
        assert_eq!(f2.from_i64(-1), f2.from_i64(1));
        assert_eq!(f2.from_bigint(&BigInt::from(-3)), f2.from_i64(1));
    }

    #[test]
    fn rational_inverse_and_reduction() {
        let q = Domain::Rational;
        let half = q.from_i64(1).checked_div(&q.from_i64(2)).unwrap();
        assert_eq!(half.mul(&q.from_i64(2)), q.one());
        assert_eq!(format!("{}", half), "1/2");
    }

    #[test]
    fn integer_units_only() {
        let z = Domain::Integer;
        assert!(z.from_i64(-1).inverse().is_ok());
        assert!(matches!(
            z.from_i64(2).inverse(),
            Err(DomainError::NotInvertible(..))
        ));
    }

    #[test]
    fn domain_mismatch_detected() {
        let a = Domain::prime(2).unwrap().one();
        let b = Domain::prime(5).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(DomainError::Mismatch(..))));
    }

    #[test]
    fn primality_check() {
        assert!(Domain::prime(2).is_ok());
        assert!(Domain::prime(7919).is_ok());
        assert!(Domain::prime(1).is_err());
        assert!(Domain::prime(9).is_err());
        assert!(Domain::prime(0).is_err());
    }

    #[test]
    fn large_prime_products_do_not_overflow() {
        let p = 2147483647; // 2^31 - 1
        let f = Domain::prime(p).unwrap();
        let a = f.from_i64(p as i64 - 1);
        assert_eq!(a.mul(&a), f.one()); // (-1)^2
    }
}
