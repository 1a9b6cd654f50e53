//! Shared generators for the property suites.

use gortrim::poly::Poly;
use gortrim::ring::{Monomial, Ring};
use gortrim::scalar::Domain;
use gortrim::SkewMatrix;
use proptest::prelude::*;
use rand::Rng;

pub fn f2() -> Domain {
    Domain::prime(2).unwrap()
}

pub fn f5() -> Domain {
    Domain::prime(5).unwrap()
}

pub fn test_domains() -> Vec<Domain> {
    vec![f2(), f5(), Domain::Rational]
}

pub fn ring3(domain: Domain) -> Ring {
    Ring::new(domain, &["x", "y", "z"]).unwrap()
}

/// All monomials in 3 variables with total degree in `lo..=hi`.
pub fn monomials_of_degree(lo: u32, hi: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=hi {
        for b in 0..=hi - a {
            for c in 0..=hi - a - b {
                let d = a + b + c;
                if d >= lo && d <= hi {
                    out.push(Monomial::new(vec![a, b, c]));
                }
            }
        }
    }
    out
}

/// Random polynomial with monomial degrees in `lo..=hi` and small
/// integer coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, lo: u32, hi: u32) -> Poly {
    let monos = monomials_of_degree(lo, hi);
    let terms = monos.into_iter().filter_map(|m| {
        let c = rng.gen_range(-3i64..=3);
        if c == 0 {
            None
        } else {
            Some((m, ring.domain().from_i64(c)))
        }
    });
    Poly::from_terms(ring, terms)
}

/// Random skew presenter of odd size `m` with constant-free entries.
pub fn random_skew<R: Rng>(rng: &mut R, ring: &Ring, m: usize, max_deg: u32) -> SkewMatrix {
    let mut upper = Vec::with_capacity(m * (m - 1) / 2);
    for _ in 0..m * (m - 1) / 2 {
        upper.push(random_poly(rng, ring, 1, max_deg));
    }
    SkewMatrix::from_upper_triangle(ring, m, &upper).unwrap()
}

/// Proptest strategy: a polynomial over `ring` with up to `max_terms`
/// terms of degree at most `max_deg`.
pub fn arb_poly(ring: Ring, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let n = ring.num_variables();
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, n), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |raw| {
        Poly::from_terms(
            &ring,
            raw.into_iter().filter_map(|(exps, c)| {
                if c == 0 || exps.iter().sum::<u32>() > max_deg {
                    None
                } else {
                    Some((Monomial::new(exps), ring.domain().from_i64(c)))
                }
            }),
        )
    })
}
