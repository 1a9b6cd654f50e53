//! Dense exact linear algebra over the coefficient field, and
//! determinants of polynomial matrices over the ring.
//!
//! All public row/column indices are 1-based, matching the submatrix
//! notation `M_{i_1,..;j_1,..}` used throughout the classification.

use std::fmt;

use thiserror::Error;

use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::{Domain, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={count}")]
    OutOfBounds { index: usize, count: usize },
    #[error("duplicate index {0} in selector")]
    DuplicateIndex(usize),
    #[error("entry count {got} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, got: usize },
    #[error("domain {0} is not a field")]
    NotAField(Domain),
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("entry ({row},{col}) has the wrong domain or ring")]
    ForeignEntry { row: usize, col: usize },
}

/// Shared row-per-line rendering for both matrix types.
macro_rules! fmt_matrix_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let strings: Vec<Vec<String>> = (1..=self.rows)
                .map(|i| (1..=self.cols).map(|j| self.entry(i, j).to_string()).collect())
                .collect();
            let mut widths = vec![0usize; self.cols];
            for row in &strings {
                for (j, s) in row.iter().enumerate() {
                    widths[j] = widths[j].max(s.len());
                }
            }
            for (i, row) in strings.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "[")?;
                for (j, s) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{:>width$}", s, width = widths[j])?;
                }
                write!(f, "]")?;
            }
            Ok(())
        }
    };
}

/// Row or column selection for submatrices: either the listed indices
/// are kept, or they are removed. Indices are 1-based and a selection
/// always preserves the original ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selector {
    pub keep: bool,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Selector {
    pub fn keep(rows: &[usize], cols: &[usize]) -> Self {
        Selector { keep: true, rows: rows.to_vec(), cols: cols.to_vec() }
    }

    pub fn remove(rows: &[usize], cols: &[usize]) -> Self {
        Selector { keep: false, rows: rows.to_vec(), cols: cols.to_vec() }
    }

    /// Resolves one axis to the sorted list of kept 0-based indices.
    fn resolve(indices: &[usize], keep: bool, count: usize) -> Result<Vec<usize>, MatrixError> {
        let mut seen = vec![false; count];
        for &i in indices {
            if i == 0 || i > count {
                return Err(MatrixError::OutOfBounds { index: i, count });
            }
            if seen[i - 1] {
                return Err(MatrixError::DuplicateIndex(i));
            }
            seen[i - 1] = true;
        }
        let kept = (0..count).filter(|&i| seen[i] == keep).collect();
        Ok(kept)
    }
}

/// A dense matrix over a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    domain: Domain,
    entries: Vec<Scalar>,
}

impl FieldMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        domain: Domain,
        entries: Vec<Scalar>,
    ) -> Result<Self, MatrixError> {
        if !domain.is_field() {
            return Err(MatrixError::NotAField(domain));
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::BadEntryCount { rows, cols, got: entries.len() });
        }
        for (k, e) in entries.iter().enumerate() {
            if e.domain() != domain {
                return Err(MatrixError::ForeignEntry {
                    row: k / cols.max(1) + 1,
                    col: k % cols.max(1) + 1,
                });
            }
        }
        Ok(FieldMatrix { rows, cols, domain, entries })
    }

    pub fn zero(rows: usize, cols: usize, domain: Domain) -> Self {
        FieldMatrix::new(rows, cols, domain, vec![domain.zero(); rows * cols])
            .expect("valid zero matrix")
    }

    pub fn identity(n: usize, domain: Domain) -> Self {
        let mut m = FieldMatrix::zero(n, n, domain);
        for i in 0..n {
            m.entries[i * n + i] = domain.one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        domain: Domain,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        FieldMatrix::new(rows, cols, domain, entries).expect("valid entries")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> FieldMatrix {
        FieldMatrix::from_fn(self.cols, self.rows, self.domain, |i, j| {
            self.entry(j, i).clone()
        })
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(FieldMatrix::from_fn(self.rows, other.cols, self.domain, |i, j| {
            let mut acc = self.domain.zero();
            for k in 1..=self.cols {
                acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
            }
            acc
        }))
    }

    pub fn submatrix(&self, sel: &Selector) -> Result<FieldMatrix, MatrixError> {
        let rows = Selector::resolve(&sel.rows, sel.keep, self.rows)?;
        let cols = Selector::resolve(&sel.cols, sel.keep, self.cols)?;
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in &rows {
            for &j in &cols {
                entries.push(self.at(i, j).clone());
            }
        }
        FieldMatrix::new(rows.len(), cols.len(), self.domain, entries)
    }

    /// Reduced row echelon form and the 1-based pivot column list.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(row, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(row, j) = a;
                }
            }
            let inv = m.at(row, col).inverse().expect("nonzero pivot over a field");
            for j in 0..m.cols {
                *m.at_mut(row, j) = m.at(row, j).mul(&inv);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.at(r, j).sub(&factor.mul(m.at(row, j)));
                        *m.at_mut(r, j) = v;
                    }
                }
            }
            pivots.push(col + 1);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Scalar, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.domain.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(self.domain.zero());
            };
            if p != col {
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(col, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(col, j) = a;
                }
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inverse().expect("nonzero pivot over a field");
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).mul(&inv);
                    for j in col..n {
                        let v = m.at(r, j).sub(&factor.mul(m.at(col, j)));
                        *m.at_mut(r, j) = v;
                    }
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for FieldMatrix {
    fmt_matrix_body!();
}

/// A dense matrix of polynomials over a shared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        ring: &Ring,
        entries: Vec<Poly>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::BadEntryCount { rows, cols, got: entries.len() });
        }
        for (k, e) in entries.iter().enumerate() {
            if e.ring() != ring {
                return Err(MatrixError::ForeignEntry {
                    row: k / cols.max(1) + 1,
                    col: k % cols.max(1) + 1,
                });
            }
        }
        Ok(PolyMatrix { rows, cols, ring: ring.clone(), entries })
    }

    pub fn zero(rows: usize, cols: usize, ring: &Ring) -> Self {
        PolyMatrix::new(rows, cols, ring, vec![Poly::zero(ring); rows * cols])
            .expect("valid zero matrix")
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        ring: &Ring,
        mut f: impl FnMut(usize, usize) -> Poly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix::new(rows, cols, ring, entries).expect("valid entries")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, &self.ring, |i, j| {
            self.entry(j, i).clone()
        })
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows, self.cols, &self.ring, |i, j| self.entry(i, j).neg())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, &self.ring, |i, j| {
            let mut acc = Poly::zero(&self.ring);
            for k in 1..=self.cols {
                let prod = self
                    .entry(i, k)
                    .checked_mul(other.entry(k, j))
                    .expect("same ring");
                acc = acc.checked_add(&prod).expect("same ring");
            }
            acc
        }))
    }

    pub fn submatrix(&self, sel: &Selector) -> Result<PolyMatrix, MatrixError> {
        let rows = Selector::resolve(&sel.rows, sel.keep, self.rows)?;
        let cols = Selector::resolve(&sel.cols, sel.keep, self.cols)?;
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in &rows {
            for &j in &cols {
                entries.push(self.entries[i * self.cols + j].clone());
            }
        }
        PolyMatrix::new(rows.len(), cols.len(), &self.ring, entries)
    }

    /// Exact determinant over the ring.
    ///
    /// Memoized cofactor expansion for small matrices and over the
    /// integers; Bareiss fraction-free elimination for larger field
    /// matrices. Both are exact and agree, so the dispatch is invisible
    /// in results; the crossover is set where measurement put it.
    pub fn det(&self) -> Result<Poly, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(&self.ring));
        }
        if n <= 6 || matches!(self.ring.domain(), Domain::Integer) {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_bareiss())
        }
    }

    fn det_cofactor(&self) -> Poly {
        // Expansion along rows with memoization on the surviving column
        // set; works over any commutative coefficient ring.
        let n = self.rows;
        let mut memo: std::collections::HashMap<u32, Poly> = std::collections::HashMap::new();
        memo.insert(0, Poly::one(&self.ring));
        self.det_cofactor_rec((1u32 << n) - 1, n, &mut memo)
    }

    fn det_cofactor_rec(
        &self,
        colmask: u32,
        size: usize,
        memo: &mut std::collections::HashMap<u32, Poly>,
    ) -> Poly {
        if let Some(hit) = memo.get(&colmask) {
            return hit.clone();
        }
        let row = self.rows - size; // expand along the first surviving row
        let mut acc = Poly::zero(&self.ring);
        let mut sign_positive = true;
        for col in 0..self.cols {
            if colmask & (1 << col) == 0 {
                continue;
            }
            let e = &self.entries[row * self.cols + col];
            if !e.is_zero() {
                let minor = self.det_cofactor_rec(colmask & !(1 << col), size - 1, memo);
                let term = e.checked_mul(&minor).expect("same ring");
                acc = if sign_positive {
                    acc.checked_add(&term).expect("same ring")
                } else {
                    acc.checked_sub(&term).expect("same ring")
                };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(colmask, acc.clone());
        acc
    }

    fn det_bareiss(&self) -> Poly {
        let n = self.rows;
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.entries[i * n + j].clone()).collect())
            .collect();
        let mut negated = false;
        let mut prev = Poly::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Poly::zero(&self.ring);
                };
                m.swap(k, p);
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[k][k].checked_mul(&m[i][j]).expect("same ring");
                    let b = m[i][k].checked_mul(&m[k][j]).expect("same ring");
                    let num = a.checked_sub(&b).expect("same ring");
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                m[i][k] = Poly::zero(&self.ring);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negated {
            d.neg()
        } else {
            d
        }
    }

    /// Specializes every entry at `point` (see [`Poly::evaluate`]).
    pub fn evaluate(&self, target: Domain, point: &[Scalar]) -> Result<FieldMatrix, MatrixError> {
        if !target.is_field() {
            return Err(MatrixError::NotAField(target));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (k, e) in self.entries.iter().enumerate() {
            entries.push(e.evaluate(&target, point).map_err(|_| MatrixError::ForeignEntry {
                row: k / self.cols + 1,
                col: k % self.cols + 1,
            })?);
        }
        FieldMatrix::new(self.rows, self.cols, target, entries)
    }

    /// Reads a constant matrix down into the coefficient field.
    pub fn to_field_matrix(&self) -> Result<FieldMatrix, MatrixError> {
        let domain = self.ring.domain();
        if !domain.is_field() {
            return Err(MatrixError::NotAField(domain));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (k, e) in self.entries.iter().enumerate() {
            if !e.is_constant() {
                return Err(MatrixError::ForeignEntry {
                    row: k / self.cols + 1,
                    col: k % self.cols + 1,
                });
            }
            entries.push(e.constant_term());
        }
        FieldMatrix::new(self.rows, self.cols, domain, entries)
    }
}

impl fmt::Display for PolyMatrix {
    fmt_matrix_body!();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn f2() -> Domain {
        Domain::prime(2).unwrap()
    }

    fn fm(rows: usize, cols: usize, domain: Domain, vals: &[i64]) -> FieldMatrix {
        let entries = vals.iter().map(|&v| domain.from_i64(v)).collect();
        FieldMatrix::new(rows, cols, domain, entries).unwrap()
    }

    #[test]
    fn rref_of_identity() {
        let id = FieldMatrix::identity(3, Domain::Rational);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![1, 2, 3]);
    }

    #[test]
    fn rref_of_zero() {
        let z = FieldMatrix::zero(2, 4, f2());
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn repeated_row_drops_rank() {
        let m = fm(3, 3, Domain::Rational, &[1, 2, 3, 1, 2, 3, 0, 1, 1]);
        assert!(m.rank() < 3);
    }

    #[test]
    fn det_examples() {
        assert!(FieldMatrix::identity(4, f2()).det().unwrap().is_one());
        // two equal columns
        let m = fm(2, 2, Domain::Rational, &[5, 5, 7, 7]);
        assert!(m.det().unwrap().is_zero());
        // non-square rejected
        assert!(FieldMatrix::zero(2, 3, f2()).det().is_err());
    }

    #[test]
    fn det_row_swap_flips_sign() {
        let q = Domain::Rational;
        let a = fm(2, 2, q, &[1, 2, 3, 5]);
        let b = fm(2, 2, q, &[3, 5, 1, 2]);
        assert_eq!(a.det().unwrap(), b.det().unwrap().neg());
    }

    #[test]
    fn submatrix_selection() {
        let m = fm(6, 3, Domain::Rational, &(0..18).map(|v| v as i64).collect::<Vec<_>>());
        let tail = m.submatrix(&Selector::remove(&[1], &[])).unwrap();
        assert_eq!((tail.rows(), tail.cols()), (5, 3));
        assert_eq!(tail.entry(1, 1), m.entry(2, 1));

        let keep_all = m.submatrix(&Selector::keep(&[1, 2, 3, 4, 5, 6], &[1, 2, 3])).unwrap();
        assert_eq!(keep_all, m);

        assert!(m.submatrix(&Selector::keep(&[7], &[])).is_err());
        assert!(m.submatrix(&Selector::keep(&[2, 2], &[1])).is_err());
    }

    #[test]
    fn unsorted_keep_selection_is_ascending() {
        let m = fm(3, 3, Domain::Rational, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let a = m.submatrix(&Selector::keep(&[3, 1], &[2, 1])).unwrap();
        let b = m.submatrix(&Selector::keep(&[1, 3], &[1, 2])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn symbolic_two_by_two_det() {
        let ring = Ring::new(Domain::Rational, &["a", "b", "c", "d"]).unwrap();
        let m = PolyMatrix::from_fn(2, 2, &ring, |i, j| {
            Poly::variable(&ring, (i - 1) * 2 + (j - 1))
        });
        let det = m.det().unwrap();
        assert_eq!(det, parse_poly("a*d - b*c", &ring).unwrap());
    }

    #[test]
    fn bareiss_and_cofactor_agree() {
        let ring = Ring::new(Domain::prime(5).unwrap(), &["x", "y"]).unwrap();
        let vals = [
            "x+1", "y", "2*x", "x*y", "3", "x+y", "y^2", "x", "1", "x", "y+2", "x^2", "4*y", "x+3",
            "0", "y", "x", "1", "x*y+1", "2", "x", "y", "3*x", "y^2+x", "2*y",
        ];
        let m = PolyMatrix::from_fn(5, 5, &ring, |i, j| {
            parse_poly(vals[(i - 1) * 5 + (j - 1)], &ring).unwrap()
        });
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }

    #[test]
    fn det_of_constant_poly_matrix_matches_field_det() {
        let ring = Ring::new(Domain::Rational, &["x"]).unwrap();
        let m = PolyMatrix::from_fn(3, 3, &ring, |i, j| {
            Poly::constant(&ring, Domain::Rational.from_i64((i * j + i) as i64))
        });
        let via_poly = m.det().unwrap().constant_term();
        let via_field = m.to_field_matrix().unwrap().det().unwrap();
        assert_eq!(via_poly, via_field);
    }

    #[test]
    fn empty_determinant_is_one() {
        let ring = Ring::new(Domain::Rational, &["x"]).unwrap();
        let m = PolyMatrix::zero(0, 0, &ring);
        assert!(m.det().unwrap().is_one());
    }
}
