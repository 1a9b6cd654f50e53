//! Exact computer algebra for skew-symmetric presentations of grade-3
//! Gorenstein ideals.
//!
//! The crate computes, over `F_p` or `Q` (and over `Z` where noted):
//!
//! * sparse multivariate polynomial arithmetic with a text parser and a
//!   canonical printer ([`poly`], [`parse`]),
//! * dense exact linear algebra: reduced row echelon form, rank,
//!   determinants of field and polynomial matrices ([`matrix`]),
//! * pfaffians and sub-pfaffians of skew-symmetric polynomial matrices,
//!   the associated length-3 resolution and its degree-one products
//!   ([`pfaffian`]),
//! * the trimming classification of five-generated Gorenstein ideals:
//!   the stacked linear-coefficient matrix, the G-trimming condition,
//!   the p-invariant and the Tor class tables ([`trim`]),
//! * symbolic verification of the determinant identities relating the
//!   product matrix E to the stacked matrix, over a generic
//!   21-variable integer ring ([`lemmas`]),
//! * an embedded worked example over `F_2[x,y,z]` exercising all of the
//!   above ([`example`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.
//! Public row/column indices are 1-based throughout.

pub mod check;
pub mod example;
pub mod lemmas;
pub mod matrix;
pub mod parse;
pub mod pfaffian;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod trim;

pub use matrix::{FieldMatrix, PolyMatrix, Selector};
pub use parse::{parse_poly, ParseError};
pub use pfaffian::{pfaffian, sigma3, sigma5, theta, EeProduct, Resolution, SkewMatrix};
pub use poly::Poly;
pub use ring::{Monomial, Ring};
pub use scalar::{Domain, Scalar};
pub use trim::{LinearCoeffs, Permutation, ProductMatrix, TorClass, TrimMatrix, TrimReport};
