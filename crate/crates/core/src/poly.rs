//! Sparse multivariate polynomials in canonical form.
//!
//! A [`Poly`] stores a map from monomials to nonzero coefficients, so
//! structural equality is semantic equality. All operations return
//! canonical values.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ring::{Monomial, Ring};
use crate::scalar::{Domain, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different rings ({0} vs {1})")]
    RingMismatch(Ring, Ring),
    #[error("variable index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("coefficient does not embed into {0}")]
    BadCoefficient(Domain),
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// A sparse multivariate polynomial over the ring's coefficient domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Poly::constant(ring, ring.domain().one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        assert_eq!(c.domain(), ring.domain(), "constant from wrong domain");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.num_variables()), c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// The variable with the given 0-based index.
    pub fn variable(ring: &Ring, index: usize) -> Self {
        assert!(index < ring.num_variables());
        let mut terms = BTreeMap::new();
        terms.insert(
            Monomial::variable(ring.num_variables(), index),
            ring.domain().one(),
        );
        Poly { ring: ring.clone(), terms }
    }

    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, coeff: Scalar) {
        assert_eq!(
            mono.exponents().len(),
            self.ring.num_variables(),
            "monomial arity does not match ring"
        );
        assert_eq!(coeff.domain(), self.ring.domain(), "coefficient from wrong domain");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(self.ring.clone(), other.ring.clone()))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(PolyError::ExponentOverflow)?;
                out.add_term(m, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Poly {
        assert_eq!(c.domain(), self.ring.domain(), "scalar from wrong domain");
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<Poly, PolyError> {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Coefficient of the constant monomial (zero when absent).
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::one(self.ring.num_variables()))
            .cloned()
            .unwrap_or_else(|| self.ring.domain().zero())
    }

    /// Coefficient of the single variable `z_l`, `l` 1-based.
    pub fn linear_coefficient(&self, l: usize) -> Result<Scalar, PolyError> {
        let n = self.ring.num_variables();
        if l == 0 || l > n {
            return Err(PolyError::IndexOutOfRange { index: l, count: n });
        }
        Ok(self
            .terms
            .get(&Monomial::variable(n, l - 1))
            .cloned()
            .unwrap_or_else(|| self.ring.domain().zero()))
    }

    /// Maximal term under the ring's degree-reverse-lexicographic order.
    pub fn leading_term(&self) -> Result<(Monomial, Scalar), PolyError> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    ///
    /// Works over fields and over the integers (each quotient step must
    /// divide exactly in the coefficient domain).
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        self.check_ring(divisor).ok()?;
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading_term().unwrap();
        let mut quotient = Poly::zero(&self.ring);
        let mut rem = self.clone();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().unwrap();
            if !dm.divides(&rm) {
                return None;
            }
            let qc = rc.div_exact(&dc)?;
            let qm = dm.quotient_into(&rm);
            let term = Poly::from_terms(&self.ring, [(qm, qc)]);
            quotient = quotient.checked_add(&term).ok()?;
            rem = rem.checked_sub(&term.checked_mul(divisor).ok()?).ok()?;
        }
        Some(quotient)
    }

    /// Evaluates at a point, embedding coefficients into `target`.
    ///
    /// Integer coefficients embed into every domain; field coefficients
    /// only into their own. Used to specialize generic-ring identities
    /// to a finite field.
    pub fn evaluate(&self, target: &Domain, point: &[Scalar]) -> Result<Scalar, PolyError> {
        let n = self.ring.num_variables();
        if point.len() != n {
            return Err(PolyError::IndexOutOfRange { index: point.len(), count: n });
        }
        for v in point {
            if v.domain() != *target {
                return Err(PolyError::BadCoefficient(*target));
            }
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = convert_scalar(c, target).ok_or(PolyError::BadCoefficient(*target))?;
            for (idx, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[idx]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

fn convert_scalar(c: &Scalar, target: &Domain) -> Option<Scalar> {
    if c.domain() == *target {
        return Some(c.clone());
    }
    match c {
        Scalar::Integer(n) => Some(target.from_bigint(n)),
        _ => None,
    }
}

/// Divides by the unsigned direction of the leading coefficient: the
/// result has leading coefficient `1` when the original was `±1`.
/// Returns `None` when the leading coefficient is not a unit.
pub fn monic(p: &Poly) -> Option<Poly> {
    let (_, lc) = p.leading_term().ok()?;
    let inv = lc.inverse().ok()?;
    Some(p.scalar_mul(&inv))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.variables();
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let (sep, c) = if coeff.is_negative() {
                ("-", coeff.abs())
            } else {
                ("+", coeff.clone())
            };
            if i > 0 || sep == "-" {
                write!(f, "{}", sep)?;
            }
            if mono.is_one() {
                write!(f, "{}", c)?;
            } else {
                let mut parts: Vec<String> = Vec::new();
                if !c.is_one() {
                    parts.push(c.to_string());
                }
                for (idx, &e) in mono.exponents().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(vars[idx].clone()),
                        _ => parts.push(format!("{}^{}", vars[idx], e)),
                    }
                }
                write!(f, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn f2_ring() -> Ring {
        Ring::new(Domain::prime(2).unwrap(), &["x", "y", "z"]).unwrap()
    }

    fn q_ring() -> Ring {
        Ring::new(Domain::Rational, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn char_two_cancellation() {
        let r = f2_ring();
        let x = Poly::variable(&r, 0);
        assert!(x.checked_add(&x).unwrap().is_zero());
    }

    #[test]
    fn distribute_over_f2() {
        let r = f2_ring();
        let p = parse_poly("(1+x)*x^2", &r).unwrap();
        assert_eq!(p, parse_poly("x^2+x^3", &r).unwrap());
    }

    #[test]
    fn frobenius_square() {
        let r = f2_ring();
        let s = parse_poly("(x+y)*(x+y)", &r).unwrap();
        assert_eq!(s, parse_poly("x^2+y^2", &r).unwrap());
    }

    #[test]
    fn constant_term_examples() {
        let r = f2_ring();
        assert!(parse_poly("x+y+z+z^2", &r).unwrap().constant_term().is_zero());
        assert!(Poly::one(&r).constant_term().is_one());
        assert!(Poly::zero(&r).constant_term().is_zero());
    }

    #[test]
    fn linear_coefficient_examples() {
        let r = f2_ring();
        let one = r.domain().one();
        let zero = r.domain().zero();
        assert_eq!(parse_poly("y+z", &r).unwrap().linear_coefficient(2).unwrap(), one);
        // y^2 is not linear
        assert_eq!(parse_poly("z+y^2", &r).unwrap().linear_coefficient(2).unwrap(), zero);
        assert_eq!(Poly::zero(&r).linear_coefficient(1).unwrap(), zero);
        assert!(Poly::zero(&r).linear_coefficient(4).is_err());
        assert!(Poly::zero(&r).linear_coefficient(0).is_err());
    }

    #[test]
    fn leading_term_examples() {
        let q = q_ring();
        let p = parse_poly("x^2+x^3", &q).unwrap();
        let (m, c) = p.leading_term().unwrap();
        assert_eq!(m.exponents(), &[3, 0, 0]);
        assert!(c.is_one());

        let p = parse_poly("x*y - y*z", &q).unwrap();
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.exponents(), &[1, 1, 0]);

        let five = parse_poly("5", &q).unwrap();
        let (m, c) = five.leading_term().unwrap();
        assert!(m.is_one());
        assert_eq!(c, Domain::Rational.from_i64(5));

        assert!(Poly::zero(&q).leading_term().is_err());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Poly::one(&f2_ring());
        let b = Poly::one(&q_ring());
        assert!(matches!(a.checked_add(&b), Err(PolyError::RingMismatch(..))));
    }

    #[test]
    fn additive_inverse() {
        let q = q_ring();
        let p = parse_poly("3*x^2*y - 7*z + 1", &q).unwrap();
        assert!(p.checked_add(&p.neg()).unwrap().is_zero());
    }

    #[test]
    fn display_descending_order() {
        let r = f2_ring();
        let p = parse_poly("x*z + x^3 + x^2 + z^3 + x*y", &r).unwrap();
        assert_eq!(p.to_string(), "x^3+z^3+x^2+x*y+x*z");
    }

    #[test]
    fn display_signs_and_coefficients() {
        let q = q_ring();
        let p = parse_poly("-2*x + y - 1", &q).unwrap();
        assert_eq!(p.to_string(), "-2*x+y-1");
        assert_eq!(Poly::zero(&q).to_string(), "0");
    }

    #[test]
    fn exact_division_roundtrip() {
        let q = q_ring();
        let a = parse_poly("x^2 - y^2", &q).unwrap();
        let b = parse_poly("x + y", &q).unwrap();
        let c = a.div_exact(&b).unwrap();
        assert_eq!(c, parse_poly("x - y", &q).unwrap());
        assert!(parse_poly("x^2+y", &q).unwrap().div_exact(&b).is_none());
    }

    #[test]
    fn integer_division_requires_divisible_coefficients() {
        let z = Ring::new(Domain::Integer, &["x"]).unwrap();
        let a = parse_poly("2*x^2", &z).unwrap();
        assert!(a.div_exact(&parse_poly("2*x", &z).unwrap()).is_some());
        assert!(a.div_exact(&parse_poly("3*x", &z).unwrap()).is_none());
    }

    #[test]
    fn evaluate_integer_poly_over_f5() {
        let z = Ring::new(Domain::Integer, &["a", "b"]).unwrap();
        let p = parse_poly("a^2*b - 7", &z).unwrap();
        let f5 = Domain::prime(5).unwrap();
        let v = p.evaluate(&f5, &[f5.from_i64(2), f5.from_i64(3)]).unwrap();
        assert_eq!(v, f5.from_i64(0)); // 4*3 - 7 = 5
    }
}
