//! Polynomial rings: a coefficient domain, an ordered list of variable
//! names, and the degree-reverse-lexicographic monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::Domain;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("variable names must be distinct and nonempty")]
    BadVariables,
    #[error("variable name {0:?} starts with a non-letter")]
    BadVariableStart(String),
}

#[derive(Debug)]
struct RingInner {
    domain: Domain,
    variables: Vec<String>,
}

/// A polynomial ring. Cheap to clone; two rings compare equal when their
/// domain and variable lists agree.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new(domain: Domain, variables: &[&str]) -> Result<Self, RingError> {
        let vars: Vec<String> = variables.iter().map(|v| v.to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(RingError::BadVariables);
            }
            let c = v.chars().next().unwrap();
            if !(c.is_alphabetic() || c == '_') {
                return Err(RingError::BadVariableStart(v.clone()));
            }
        }
        Ok(Ring(Arc::new(RingInner { domain, variables: vars })))
    }

    pub fn domain(&self) -> Domain {
        self.0.domain
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn num_variables(&self) -> usize {
        self.0.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.domain == other.0.domain && self.0.variables == other.0.variables)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.domain, self.0.variables.join(","))
    }
}

/// A monomial: one exponent per ring variable.
///
/// `Ord` is the degree-reverse-lexicographic order: higher total degree
/// wins; on equal degree the monomial whose trailing exponents are
/// smaller wins (the last nonzero entry of the exponent difference is
/// negative for the larger monomial).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The single variable `z_index` (0-based).
    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must have checked divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len(), "monomials from different rings");
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // smaller trailing exponent means larger monomial
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
