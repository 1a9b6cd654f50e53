//! Skew-symmetric polynomial matrices, their pfaffians, and the
//! length-3 resolution presented by an odd skew matrix.
//!
//! The pfaffian convention is fixed by `pf([[0,a],[-a,0]]) = a`
//! together with expansion along the first row. Two checks pin the
//! convention operationally: the complex identities `D1*D2 = 0` and
//! `D2*D3 = 0` of [`Resolution`], and the reproduction of the embedded
//! worked example's generator list.

use std::collections::HashMap;

use thiserror::Error;

use crate::matrix::{MatrixError, PolyMatrix, Selector};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PfaffianError {
    #[error("theta is undefined at 0")]
    ThetaZero,
    #[error("indices must be pairwise distinct")]
    RepeatedIndex,
    #[error("index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("pfaffians require an even-size matrix, got {0}")]
    OddSize(usize),
    #[error("a skew presenter must have odd size >= 3, got {0}")]
    BadPresenterSize(usize),
    #[error("matrix is not skew-symmetric at ({row},{col})")]
    NotSkew { row: usize, col: usize },
    #[error("nonzero diagonal entry at ({0},{0})")]
    NonzeroDiagonal(usize),
    #[error("entry ({row},{col}) has a nonzero constant term")]
    NonzeroConstantTerm { row: usize, col: usize },
    #[error("removed index count has the wrong parity for size {size}")]
    ParityViolation { size: usize },
    #[error("product requires i < j, got ({0},{1})")]
    OrderViolation(usize, usize),
    #[error("complex identity {0} failed; pfaffian sign convention is broken")]
    ComplexPropertyFailed(&'static str),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Unit step: 0 for negative arguments, 1 for positive; undefined at 0.
pub fn theta(x: i64) -> Result<u32, PfaffianError> {
    match x {
        0 => Err(PfaffianError::ThetaZero),
        n if n < 0 => Ok(0),
        _ => Ok(1),
    }
}

/// The three-index sign `(-1)^(i+j+r+1+theta(r-i)+theta(r-j)+theta(j-i))`.
pub fn sigma3(i: usize, j: usize, r: usize) -> Result<i64, PfaffianError> {
    if i == j || i == r || j == r {
        return Err(PfaffianError::RepeatedIndex);
    }
    let (i, j, r) = (i as i64, j as i64, r as i64);
    let exp = i + j + r + 1
        + theta(r - i)? as i64
        + theta(r - j)? as i64
        + theta(j - i)? as i64;
    Ok(if exp % 2 == 0 { 1 } else { -1 })
}

/// The five-index sign
/// `(-1)^(h+k+1+theta(k-i)+theta(k-j)+theta(k-r)+theta(k-h)+theta(h-i)+theta(h-j)+theta(h-r))`.
pub fn sigma5(i: usize, j: usize, r: usize, h: usize, k: usize) -> Result<i64, PfaffianError> {
    let all = [i, j, r, h, k];
    for (a, &x) in all.iter().enumerate() {
        if all[..a].contains(&x) {
            return Err(PfaffianError::RepeatedIndex);
        }
    }
    let (i, j, r, h, k) = (i as i64, j as i64, r as i64, h as i64, k as i64);
    let exp = h + k + 1
        + theta(k - i)? as i64
        + theta(k - j)? as i64
        + theta(k - r)? as i64
        + theta(k - h)? as i64
        + theta(h - i)? as i64
        + theta(h - j)? as i64
        + theta(h - r)? as i64;
    Ok(if exp % 2 == 0 { 1 } else { -1 })
}

fn check_skew(m: &PolyMatrix) -> Result<(), PfaffianError> {
    for i in 1..=m.rows() {
        if !m.entry(i, i).is_zero() {
            return Err(PfaffianError::NonzeroDiagonal(i));
        }
        for j in i + 1..=m.cols() {
            if *m.entry(j, i) != m.entry(i, j).neg() {
                return Err(PfaffianError::NotSkew { row: j, col: i });
            }
        }
    }
    Ok(())
}

/// Pfaffian of an even-size skew-symmetric matrix with zero diagonal.
/// The empty matrix has pfaffian 1.
pub fn pfaffian(m: &PolyMatrix) -> Result<Poly, PfaffianError> {
    if m.rows() != m.cols() {
        return Err(MatrixError::NonSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    if !m.rows().is_multiple_of(2) {
        return Err(PfaffianError::OddSize(m.rows()));
    }
    check_skew(m)?;
    let mask = if m.rows() == 0 { 0 } else { (1u64 << m.rows()) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_mask(m, mask, &mut memo))
}

/// Pfaffian of the principal submatrix on the 0-based index set `mask`,
/// by expansion along the smallest surviving index.
fn pf_mask(m: &PolyMatrix, mask: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    if mask == 0 {
        return Poly::one(m.ring());
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let first = mask.trailing_zeros() as usize;
    let mut acc = Poly::zero(m.ring());
    let mut positive = true; // sign (-1)^t for the t-th surviving index, t = 2, 3, ...
    for j in first + 1..m.rows() {
        if mask & (1 << j) == 0 {
            continue;
        }
        let e = m.entry(first + 1, j + 1);
        if !e.is_zero() {
            let rest = pf_mask(m, mask & !(1 << first) & !(1 << j), memo);
            let term = e.checked_mul(&rest).expect("same ring");
            acc = if positive {
                acc.checked_add(&term).expect("same ring")
            } else {
                acc.checked_sub(&term).expect("same ring")
            };
        }
        positive = !positive;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// An odd skew-symmetric matrix with zero diagonal whose entries have
/// zero constant term: the presenter of a grade-3 Gorenstein ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    matrix: PolyMatrix,
}

impl SkewMatrix {
    pub fn new(matrix: PolyMatrix) -> Result<Self, PfaffianError> {
        let m = matrix.rows();
        if matrix.cols() != m {
            return Err(MatrixError::NonSquare { rows: m, cols: matrix.cols() }.into());
        }
        if m.is_multiple_of(2) || m < 3 {
            return Err(PfaffianError::BadPresenterSize(m));
        }
        check_skew(&matrix)?;
        for i in 1..=m {
            for j in 1..=m {
                if !matrix.entry(i, j).constant_term().is_zero() {
                    return Err(PfaffianError::NonzeroConstantTerm { row: i, col: j });
                }
            }
        }
        Ok(SkewMatrix { matrix })
    }

    /// Builds from the strict upper triangle, row by row
    /// (`(1,2), (1,3), .., (1,m), (2,3), ..`), skew-symmetrizing.
    pub fn from_upper_triangle(
        ring: &Ring,
        size: usize,
        upper: &[Poly],
    ) -> Result<Self, PfaffianError> {
        assert_eq!(upper.len(), size * (size - 1) / 2, "upper triangle length");
        let mut grid = vec![vec![Poly::zero(ring); size]; size];
        let mut it = upper.iter();
        for i in 0..size {
            for j in i + 1..size {
                let e = it.next().unwrap().clone();
                grid[j][i] = e.neg();
                grid[i][j] = e;
            }
        }
        let entries = grid.into_iter().flatten().collect();
        SkewMatrix::new(PolyMatrix::new(size, size, ring, entries)?)
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.matrix.entry(i, j)
    }

    /// Pfaffian of the principal submatrix with the listed rows and
    /// columns removed. The removed set is order-insensitive; its size
    /// must leave an even matrix behind.
    pub fn sub_pfaffian(&self, removed: &[usize]) -> Result<Poly, PfaffianError> {
        let m = self.size();
        let mut mask = (1u64 << m) - 1;
        for &idx in removed {
            if idx == 0 || idx > m {
                return Err(PfaffianError::IndexOutOfRange { index: idx, count: m });
            }
            if mask & (1 << (idx - 1)) == 0 {
                return Err(PfaffianError::RepeatedIndex);
            }
            mask &= !(1 << (idx - 1));
        }
        if (m - removed.len()) % 2 != 0 {
            return Err(PfaffianError::ParityViolation { size: m });
        }
        let mut memo = HashMap::new();
        Ok(pf_mask(&self.matrix, mask, &mut memo))
    }

    /// The generators `y_i = (-1)^(i+1) pf_i(T)` of the presented ideal.
    pub fn generators(&self) -> Vec<Poly> {
        let m = self.size();
        let mut memo = HashMap::new();
        let full = (1u64 << m) - 1;
        (1..=m)
            .map(|i| {
                let pf = pf_mask(&self.matrix, full & !(1 << (i - 1)), &mut memo);
                if i % 2 == 1 {
                    pf
                } else {
                    pf.neg()
                }
            })
            .collect()
    }

    /// The minimal free resolution `0 -> R -> R^m -> R^m -> R` with
    /// `D1 = (y_1 .. y_m)`, `D2 = T`, `D3 = D1^t`. Validates the
    /// complex identities before returning.
    pub fn resolution(&self) -> Result<Resolution, PfaffianError> {
        let ring = self.ring();
        let gens = self.generators();
        let m = self.size();
        let d1 = PolyMatrix::new(1, m, ring, gens.clone())?;
        let d2 = self.matrix.clone();
        let d3 = d1.transpose();
        if !d1.mul(&d2)?.is_zero() {
            return Err(PfaffianError::ComplexPropertyFailed("D1*D2 = 0"));
        }
        if !d2.mul(&d3)?.is_zero() {
            return Err(PfaffianError::ComplexPropertyFailed("D2*D3 = 0"));
        }
        Ok(Resolution { d1, d2, d3, generators: gens })
    }

    /// Coordinates of the degree-one product `e_i * e_j` in the middle
    /// basis `f_1, .., f_m`: the coefficient of `f_r` is
    /// `sigma3(i,j,r) * pf_{i,j,r}(T)`, and 0 for `r` in `{i, j}`.
    pub fn product_ee(&self, i: usize, j: usize) -> Result<EeProduct, PfaffianError> {
        let m = self.size();
        for idx in [i, j] {
            if idx == 0 || idx > m {
                return Err(PfaffianError::IndexOutOfRange { index: idx, count: m });
            }
        }
        if i >= j {
            return Err(PfaffianError::OrderViolation(i, j));
        }
        let ring = self.ring();
        let full = (1u64 << m) - 1;
        let mut memo = HashMap::new();
        let mut coefficients = Vec::with_capacity(m);
        for r in 1..=m {
            if r == i || r == j {
                coefficients.push(Poly::zero(ring));
                continue;
            }
            let mask = full & !(1 << (i - 1)) & !(1 << (j - 1)) & !(1 << (r - 1));
            let pf = pf_mask(&self.matrix, mask, &mut memo);
            let sign = ring.domain().from_i64(sigma3(i, j, r)?);
            coefficients.push(pf.scalar_mul(&sign));
        }
        Ok(EeProduct { i, j, coefficients })
    }

    /// Simultaneous row/column permutation: entry `(a, b)` of the
    /// result is entry `(perm^-1(a), perm^-1(b))` of `self`, so the
    /// generator at old position `s` moves to position `perm(s)` (up to
    /// sign). See [`crate::trim::Permutation`].
    pub fn conjugate(&self, perm: &crate::trim::Permutation) -> Result<SkewMatrix, PfaffianError> {
        let m = self.size();
        if perm.len() != m {
            return Err(PfaffianError::IndexOutOfRange { index: perm.len(), count: m });
        }
        let inv = perm.inverse();
        let matrix = PolyMatrix::from_fn(m, m, self.ring(), |a, b| {
            self.entry(inv.apply(a), inv.apply(b)).clone()
        });
        SkewMatrix::new(matrix)
    }

    /// Submatrix access in the keep/remove notation (delegates to the
    /// underlying polynomial matrix).
    pub fn submatrix(&self, sel: &Selector) -> Result<PolyMatrix, PfaffianError> {
        Ok(self.matrix.submatrix(sel)?)
    }
}

/// The Kronecker pairing `e_i * f_j = delta_{i,j} g`: the coefficient
/// of `g` is 1 exactly when `i = j`.
pub fn ef_pairing(i: usize, j: usize) -> u64 {
    u64::from(i == j)
}

/// The resolution data of a skew presenter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub d1: PolyMatrix,
    pub d2: PolyMatrix,
    pub d3: PolyMatrix,
    pub generators: Vec<Poly>,
}

/// Coordinates of `e_i * e_j` (for `i < j`) in the `f_r` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EeProduct {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<Poly>,
}
