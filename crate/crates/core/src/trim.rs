//! Classification of trimmed five-generated Gorenstein ideals.
//!
//! From a 5x5 skew presenter over a 3-variable ring this module builds
//! the residue table of linear coefficients, the stacked 3t x 5 matrix
//! whose pivot structure controls minimality of the trimmed resolution,
//! the G-trimming condition, the p-invariant, the degree-one product
//! matrix (the 6x3 matrix `E` when t = 2), and finally the Tor class of
//! the ideal obtained by trimming a chosen set of generators.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::{FieldMatrix, MatrixError};
use crate::pfaffian::{sigma3, sigma5, PfaffianError, SkewMatrix};
use crate::scalar::{Domain, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrimError {
    #[error("classification requires a 5x5 presenter, got {0}x{0}")]
    NotFiveGenerated(usize),
    #[error("classification requires exactly 3 ring variables, got {0}")]
    WrongVariableCount(usize),
    #[error("trim count {0} out of range 1..=5")]
    TrimCountOutOfRange(usize),
    #[error("trim set must be a nonempty subset of 1..=5, offending index {0}")]
    BadTrimIndex(usize),
    #[error("trim set contains a repeated index {0}")]
    RepeatedTrimIndex(usize),
    #[error("images {0:?} do not form a permutation")]
    NotAPermutation(Vec<usize>),
    #[error(
        "no classification row for t={t}, p={p}, rank={rank}: \
         input violates the grade-3 Gorenstein hypotheses"
    )]
    TableMiss { t: usize, p: usize, rank: usize },
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A permutation of `1..=n`, stored as the image list (`apply(i)` is
/// the image of `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, TrimError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(TrimError::NotAPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The permutation moving the trim set to the leading positions:
    /// the k-th smallest element of `set` maps to `k`, the complement
    /// follows in ascending order.
    pub fn for_trim_set(set: &[usize], n: usize) -> Result<Self, TrimError> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(TrimError::RepeatedTrimIndex(w[0]));
            }
        }
        if sorted.is_empty() {
            return Err(TrimError::BadTrimIndex(0));
        }
        if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s > n) {
            return Err(TrimError::BadTrimIndex(bad));
        }
        let mut images = vec![0; n];
        for (k, &s) in sorted.iter().enumerate() {
            images[s - 1] = k + 1;
        }
        let mut next = sorted.len() + 1;
        for img in images.iter_mut() {
            if *img == 0 {
                *img = next;
                next += 1;
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.0.len()];
        let mut sign = 1;
        for start in 0..self.0.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !visited[at] {
                visited[at] = true;
                at = self.0[at] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", images.join(","))
    }
}

/// Residues of the linear coefficients of a 5x5 skew presenter over a
/// 3-variable ring: `c(i, j, l)` is the coefficient of the l-th
/// variable in the degree-1 part of the entry at row `j`, column `i`.
///
/// Only the residues are stored; every classification quantity depends
/// on them alone, so no lift is ever chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCoeffs {
    domain: Domain,
    // index (i-1)*15 + (j-1)*3 + (l-1)
    values: Vec<Scalar>,
}

pub const PRESENTER_SIZE: usize = 5;
const NUM_VARS: usize = 3;

impl LinearCoeffs {
    pub fn from_presenter(t: &SkewMatrix) -> Result<Self, TrimError> {
        if t.size() != PRESENTER_SIZE {
            return Err(TrimError::NotFiveGenerated(t.size()));
        }
        if t.ring().num_variables() != NUM_VARS {
            return Err(TrimError::WrongVariableCount(t.ring().num_variables()));
        }
        let domain = t.ring().domain();
        let mut values = Vec::with_capacity(PRESENTER_SIZE * PRESENTER_SIZE * NUM_VARS);
        for i in 1..=PRESENTER_SIZE {
            for j in 1..=PRESENTER_SIZE {
                for l in 1..=NUM_VARS {
                    values.push(
                        t.entry(j, i)
                            .linear_coefficient(l)
                            .expect("l in range"),
                    );
                }
            }
        }
        Ok(LinearCoeffs { domain, values })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// `c(i, j, l)`, all indices 1-based.
    pub fn c(&self, i: usize, j: usize, l: usize) -> &Scalar {
        debug_assert!((1..=PRESENTER_SIZE).contains(&i));
        debug_assert!((1..=PRESENTER_SIZE).contains(&j));
        debug_assert!((1..=NUM_VARS).contains(&l));
        &self.values[(i - 1) * PRESENTER_SIZE * NUM_VARS + (j - 1) * NUM_VARS + (l - 1)]
    }

    /// The stacked 3t x 5 matrix: block `k` (rows `3(k-1)+1 ..= 3k`)
    /// holds the linear coefficients of presenter row `k`, one ring
    /// variable per block row.
    pub fn q_matrix(&self, t: usize) -> Result<TrimMatrix, TrimError> {
        if t == 0 || t > PRESENTER_SIZE {
            return Err(TrimError::TrimCountOutOfRange(t));
        }
        let matrix = FieldMatrix::from_fn(3 * t, PRESENTER_SIZE, self.domain, |row, i| {
            let k = (row - 1) / 3 + 1;
            let l = (row - 1) % 3 + 1;
            self.c(i, k, l).clone()
        });
        Ok(TrimMatrix { t, matrix })
    }

    /// True when every prescribed 2x2 minor of the linear-coefficient
    /// blocks vanishes: for all `k <= t < i < j` the 3x2 matrix with
    /// columns `c(h, k, .)`, `c(r, k, .)` (`{h, r}` the complement of
    /// `{k, i, j}`) has rank at most 1. Vacuously true for t = 4, 5.
    pub fn g_trimming_condition(&self, t: usize) -> Result<bool, TrimError> {
        if t == 0 || t > PRESENTER_SIZE {
            return Err(TrimError::TrimCountOutOfRange(t));
        }
        for k in 1..=t {
            for i in t + 1..=PRESENTER_SIZE {
                for j in i + 1..=PRESENTER_SIZE {
                    let comp = complement(&[k, i, j]);
                    let (a, b) = (comp[0], comp[1]);
                    for alpha in 1..=NUM_VARS {
                        for beta in alpha + 1..=NUM_VARS {
                            let det = self
                                .c(a, k, alpha)
                                .mul(self.c(b, k, beta))
                                .sub(&self.c(b, k, alpha).mul(self.c(a, k, beta)));
                            if !det.is_zero() {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// A single product coefficient `d` with the complement `{r, h}` of
    /// `{k, i, j}` taken in ascending order. The value is independent
    /// of that order (a property the test suite checks): swapping `r`
    /// and `h` flips both the sign product and the determinant.
    pub fn d_coefficient(
        &self,
        k: usize,
        i: usize,
        j: usize,
        alpha: usize,
        beta: usize,
    ) -> Result<Scalar, TrimError> {
        let comp = complement(&[k, i, j]);
        self.d_coefficient_ordered(k, i, j, alpha, beta, comp[0], comp[1])
    }

    /// As [`Self::d_coefficient`], with an explicit complement order:
    /// `sigma3(i,j,r) * sigma5(i,j,r,h,k) * det [[c(r,k,a), c(h,k,a)],
    /// [c(r,k,b), c(h,k,b)]]`.
    pub fn d_coefficient_ordered(
        &self,
        k: usize,
        i: usize,
        j: usize,
        alpha: usize,
        beta: usize,
        r: usize,
        h: usize,
    ) -> Result<Scalar, TrimError> {
        let sign = sigma3(i, j, r)? * sigma5(i, j, r, h, k)?;
        let det = self
            .c(r, k, alpha)
            .mul(self.c(h, k, beta))
            .sub(&self.c(h, k, alpha).mul(self.c(r, k, beta)));
        Ok(det.mul(&self.domain.from_i64(sign)))
    }

    /// The 3t x C(5-t, 2) matrix of degree-one product coordinates:
    /// rows are indexed by `(k, (alpha, beta))` with `(1,2), (1,3),
    /// (2,3)` per block, columns by the pairs `t < i < j <= 5` in
    /// lexicographic order. Empty for t = 4, 5. For t = 2 this is the
    /// 6x3 matrix `E`.
    pub fn product_matrix(&self, t: usize) -> Result<ProductMatrix, TrimError> {
        if t == 0 || t > PRESENTER_SIZE {
            return Err(TrimError::TrimCountOutOfRange(t));
        }
        let mut column_pairs = Vec::new();
        for i in t + 1..=PRESENTER_SIZE {
            for j in i + 1..=PRESENTER_SIZE {
                column_pairs.push((i, j));
            }
        }
        const ROW_PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];
        let mut entries = Vec::with_capacity(3 * t * column_pairs.len());
        for k in 1..=t {
            for (alpha, beta) in ROW_PAIRS {
                for &(i, j) in &column_pairs {
                    entries.push(self.d_coefficient(k, i, j, alpha, beta)?);
                }
            }
        }
        let matrix = FieldMatrix::new(3 * t, column_pairs.len(), self.domain, entries)?;
        Ok(ProductMatrix { t, matrix, column_pairs })
    }

    /// The signed 3x3 determinant coefficients of the products
    /// `e_i * f_j` for `1 <= j <= t < i <= 5`, in lexicographic `(i, j)`
    /// order. Up to sign these are 3x3 minors of the stacked matrix
    /// (block `j`, complement columns).
    pub fn ef_product_coefficients(&self, t: usize) -> Result<Vec<EfProduct>, TrimError> {
        if t == 0 || t > PRESENTER_SIZE {
            return Err(TrimError::TrimCountOutOfRange(t));
        }
        let mut out = Vec::new();
        for i in t + 1..=PRESENTER_SIZE {
            for j in 1..=t {
                let comp = complement(&[i, j]);
                let (r, h, s) = (comp[0], comp[1], comp[2]);
                let sign = sigma3(i, r, h)? * sigma5(i, r, h, s, j)?;
                let cols = [h, s, r];
                let det3 = FieldMatrix::from_fn(3, 3, self.domain, |row, col| {
                    self.c(cols[col - 1], j, row).clone()
                })
                .det()
                .expect("square");
                out.push(EfProduct {
                    i,
                    j,
                    coefficient: det3.mul(&self.domain.from_i64(sign)),
                });
            }
        }
        Ok(out)
    }
}

fn complement(used: &[usize]) -> Vec<usize> {
    (1..=PRESENTER_SIZE).filter(|i| !used.contains(i)).collect()
}

/// The stacked linear-coefficient matrix for a trim of the first `t`
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrimMatrix {
    t: usize,
    matrix: FieldMatrix,
}

impl TrimMatrix {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The p-invariant: the number of pivot columns among the trailing
    /// `5 - t` columns.
    pub fn p_invariant(&self) -> usize {
        let (_, pivots) = self.matrix.rref();
        pivots.iter().filter(|&&c| c > self.t).count()
    }

    /// 1-based pivot column list of the reduced row echelon form.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.matrix.rref().1
    }
}

/// Coordinates of degree-one products, one column per pair of
/// untrimmed generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMatrix {
    t: usize,
    matrix: FieldMatrix,
    column_pairs: Vec<(usize, usize)>,
}

impl ProductMatrix {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn column_pairs(&self) -> &[(usize, usize)] {
        &self.column_pairs
    }

    pub fn is_zero(&self) -> bool {
        (1..=self.matrix.rows())
            .all(|i| (1..=self.matrix.cols()).all(|j| self.matrix.entry(i, j).is_zero()))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// One coefficient of a product `e_i * f_j` with `j` in the trimmed
/// range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfProduct {
    pub i: usize,
    pub j: usize,
    pub coefficient: Scalar,
}

/// A Tor algebra class tag. `G { r: None }` records a class-G trim
/// whose parameter the classification does not determine.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorClass {
    C3,
    T,
    B,
    G { r: Option<u64> },
    H { p: u64, q: u64 },
}

impl TorClass {
    /// Applies the identifications `H(0,0) = G(0)` and `H(0,1) = G(1)`.
    pub fn normalized(self) -> TorClass {
        match self {
            TorClass::H { p: 0, q: 0 } => TorClass::G { r: Some(0) },
            TorClass::H { p: 0, q: 1 } => TorClass::G { r: Some(1) },
            other => other,
        }
    }
}

impl fmt::Display for TorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorClass::C3 => write!(f, "C(3)"),
            TorClass::T => write!(f, "T"),
            TorClass::B => write!(f, "B"),
            TorClass::G { r: Some(r) } => write!(f, "G({})", r),
            TorClass::G { r: None } => write!(f, "G(?)"),
            TorClass::H { p, q } => write!(f, "H({},{})", p, q),
        }
    }
}

impl FromStr for TorClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "C(3)" => return Ok(TorClass::C3),
            "T" => return Ok(TorClass::T),
            "B" => return Ok(TorClass::B),
            "G(?)" => return Ok(TorClass::G { r: None }),
            _ => {}
        }
        let parse_args = |body: &str| -> Result<Vec<u64>, String> {
            body.split(',')
                .map(|a| a.trim().parse::<u64>().map_err(|e| e.to_string()))
                .collect()
        };
        if let Some(body) = s.strip_prefix("G(").and_then(|r| r.strip_suffix(')')) {
            let args = parse_args(body)?;
            if args.len() == 1 {
                return Ok(TorClass::G { r: Some(args[0]) });
            }
        }
        if let Some(body) = s.strip_prefix("H(").and_then(|r| r.strip_suffix(')')) {
            let args = parse_args(body)?;
            if args.len() == 2 {
                return Ok(TorClass::H { p: args[0], q: args[1] }.normalized());
            }
        }
        Err(format!("unrecognized Tor class {:?}", s))
    }
}

/// The full classification record for one trim of one presenter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrimReport {
    /// The trimmed generator indices, ascending, as given on the input
    /// presenter.
    pub trim_set: Vec<usize>,
    /// Conjugating permutation that moved the trim set to the leading
    /// positions.
    pub permutation: Permutation,
    pub t: usize,
    /// Stacked linear-coefficient matrix of the conjugated presenter.
    pub q_matrix: FieldMatrix,
    pub g_condition: bool,
    pub p_invariant: usize,
    pub rank: usize,
    pub class: TorClass,
    /// Resolution format `(1, mu, mu + n - 1, n)`.
    pub format: [usize; 4],
    pub mu: usize,
    /// True for t = 4, 5 where the format follows the extended pattern
    /// `(1, 5+2t-rank, 5+3t-rank, 1+t)` rather than a stated table row.
    pub format_pattern_extended: bool,
    /// Signs relating the conjugated sub-maximal pfaffians to the
    /// originals: `pf_k(T') = pf_signs[k-1] * pf_{perm^-1(k)}(T)`.
    pub pf_signs: Vec<i64>,
    /// Set when some sub-maximal pfaffian vanishes; the grade-3
    /// Gorenstein hypothesis is then suspect and the class tables may
    /// not apply.
    pub zero_pfaffian: bool,
}

/// Classifies the ideal obtained from the presenter `t` by trimming the
/// generators named in `trim_set` (1-based indices into the pfaffian
/// generator list).
pub fn classify(presenter: &SkewMatrix, trim_set: &[usize]) -> Result<TrimReport, TrimError> {
    if presenter.size() != PRESENTER_SIZE {
        return Err(TrimError::NotFiveGenerated(presenter.size()));
    }
    if presenter.ring().num_variables() != NUM_VARS {
        return Err(TrimError::WrongVariableCount(presenter.ring().num_variables()));
    }
    let perm = Permutation::for_trim_set(trim_set, PRESENTER_SIZE)?;
    let mut sorted_set = trim_set.to_vec();
    sorted_set.sort_unstable();
    let t = sorted_set.len();

    let conj = presenter.conjugate(&perm)?;

    // The conjugated pfaffians agree with the originals up to sign;
    // record the signs and watch for vanishing generators.
    let inv = perm.inverse();
    let mut pf_signs = Vec::with_capacity(PRESENTER_SIZE);
    let mut zero_pfaffian = false;
    for k in 1..=PRESENTER_SIZE {
        let new_pf = conj.sub_pfaffian(&[k])?;
        let old_pf = presenter.sub_pfaffian(&[inv.apply(k)])?;
        if new_pf.is_zero() && old_pf.is_zero() {
            zero_pfaffian = true;
            pf_signs.push(1);
        } else if new_pf == old_pf {
            pf_signs.push(1);
        } else if new_pf == old_pf.neg() {
            pf_signs.push(-1);
        } else {
            // conjugation cannot change the pfaffians beyond sign
            return Err(PfaffianError::ComplexPropertyFailed(
                "conjugated pfaffians match originals up to sign",
            )
            .into());
        }
    }

    let coeffs = LinearCoeffs::from_presenter(&conj)?;
    let q = coeffs.q_matrix(t)?;
    let g_condition = coeffs.g_trimming_condition(t)?;
    let rank = q.rank();
    let p = q.p_invariant();

    let class = if g_condition {
        match t {
            1..=3 => TorClass::G { r: None },
            4 => TorClass::G { r: Some(1u64.saturating_sub(p as u64)) }.normalized(),
            5 => TorClass::G { r: Some(0) },
            _ => unreachable!(),
        }
    } else {
        match (t, p) {
            (3, 0) => TorClass::B,
            (3, 1) => TorClass::H { p: 1, q: 1 },
            (3, 2) => TorClass::H { p: 1, q: 0 },
            (2, 1) => TorClass::B,
            (2, 2) => TorClass::H { p: 2, q: 1 },
            (2, 3) => TorClass::T,
            (1, 2) => TorClass::B,
            (1, 3) => TorClass::H { p: 3, q: 2 },
            _ => return Err(TrimError::TableMiss { t, p, rank }),
        }
    };

    let mu = 5 + 2 * t - rank;
    let format = [1, mu, 5 + 3 * t - rank, 1 + t];

    Ok(TrimReport {
        trim_set: sorted_set,
        permutation: perm,
        t,
        q_matrix: q.matrix().clone(),
        g_condition,
        p_invariant: p,
        rank,
        class,
        format,
        mu,
        format_pattern_extended: t >= 4,
        pf_signs,
        zero_pfaffian,
    })
}
