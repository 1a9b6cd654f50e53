//! Symbolic verification of the determinant identities behind the
//! two-generator trimming theorem, over a generic integer ring.
//!
//! The generic matrix `Q` is the 6x5 stacked linear-coefficient matrix
//! of a presenter whose 21 relevant coefficients are independent
//! variables `x_ijl` (the coefficient of variable `l` in entry `(j, i)`
//! of the presenter). From it the 6x3 product matrix `E` is built with
//! the same sign convention as [`crate::trim::LinearCoeffs::d_coefficient`]:
//! the complement `{r, h}` is taken ascending and pairs with the
//! determinant columns in that same order, which makes the value
//! independent of the order chosen.
//!
//! Three families of identities are verified by exact polynomial
//! equality:
//!
//! * twelve 3x3 minors of `E` equal to `+-x_21l` times a 5x5 minor of
//!   `Q`,
//! * eight further 3x3 minors (two of them zero, two with two-term
//!   right-hand sides),
//! * the monicized set of 2x2 minors of `E` equals the monicized set of
//!   4x4 minors of `Q` involving the first two columns.

use crate::check::Check;
use crate::matrix::{PolyMatrix, Selector};
use crate::pfaffian::{sigma3, sigma5};
use crate::poly::{monic, Poly};
use crate::ring::Ring;
use crate::scalar::Domain;

/// Number of presenter columns.
const N: usize = 5;

/// The 21 generic coefficient names, grouped exactly as the stacked
/// matrix reads them: block 1 columns 2..=5, then block 2 columns
/// 3..=5.
pub fn generic_variable_names() -> Vec<String> {
    let mut names = Vec::with_capacity(21);
    for i in 2..=N {
        for l in 1..=3 {
            names.push(format!("x_{}1{}", i, l));
        }
    }
    for i in 3..=N {
        for l in 1..=3 {
            names.push(format!("x_{}2{}", i, l));
        }
    }
    names
}

/// The polynomial ring `Z[x_211, .., x_523]` with the 21 generic
/// coefficients as variables.
pub fn generic_ring() -> Ring {
    let names = generic_variable_names();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    Ring::new(Domain::Integer, &refs).expect("valid generic ring")
}

/// The generic 6x5 stacked matrix: rows 1..=3 hold block 1
/// (`q(l, i) = x_i1l`, with column 1 zero), rows 4..=6 block 2
/// (column 2 zero, column 1 the negated block-1 column-2 variables).
pub fn generic_q(ring: &Ring) -> PolyMatrix {
    let var = |name: String| {
        Poly::variable(ring, ring.variable_index(&name).expect("generic variable"))
    };
    PolyMatrix::from_fn(6, N, ring, |row, col| {
        let (k, l) = ((row - 1) / 3 + 1, (row - 1) % 3 + 1);
        match (k, col) {
            (1, 1) => Poly::zero(ring),
            (1, i) => var(format!("x_{}1{}", i, l)),
            (2, 1) => var(format!("x_21{}", l)).neg(),
            (2, 2) => Poly::zero(ring),
            (2, i) => var(format!("x_{}2{}", i, l)),
            _ => unreachable!(),
        }
    })
}

/// One entry of the product matrix: for `k` in `{1, 2}`,
/// `i < j` in `{3, 4, 5}` and rows `alpha < beta` of block `k`, the
/// signed 2x2 determinant on the complement columns.
pub fn entry_in_e(
    q: &PolyMatrix,
    k: usize,
    i: usize,
    j: usize,
    alpha: usize,
    beta: usize,
) -> Poly {
    assert!(k == 1 || k == 2);
    assert!((3..=N).contains(&i) && (3..=N).contains(&j) && i < j);
    assert!((1..=3).contains(&alpha) && (1..=3).contains(&beta) && alpha < beta);
    let comp: Vec<usize> = (1..=N).filter(|&x| x != k && x != i && x != j).collect();
    let (r, h) = (comp[0], comp[1]);
    let row = |l: usize| 3 * (k - 1) + l;
    let a = q.entry(row(alpha), r);
    let b = q.entry(row(alpha), h);
    let c = q.entry(row(beta), r);
    let d = q.entry(row(beta), h);
    let det = a
        .checked_mul(d)
        .and_then(|ad| b.checked_mul(c).and_then(|bc| ad.checked_sub(&bc)))
        .expect("same ring");
    let sign = sigma3(i, j, r).unwrap() * sigma5(i, j, r, h, k).unwrap();
    det.scalar_mul(&q.ring().domain().from_i64(sign))
}

/// The 6x3 product matrix `E`: rows `(k, (1,2)), (k, (1,3)),
/// (k, (2,3))` for `k = 1, 2`; columns the pairs `(3,4), (3,5), (4,5)`.
pub fn e_matrix(q: &PolyMatrix) -> PolyMatrix {
    const ROW_PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];
    const COL_PAIRS: [(usize, usize); 3] = [(3, 4), (3, 5), (4, 5)];
    PolyMatrix::from_fn(6, 3, q.ring(), |row, col| {
        let k = (row - 1) / 3 + 1;
        let (alpha, beta) = ROW_PAIRS[(row - 1) % 3];
        let (i, j) = COL_PAIRS[col - 1];
        entry_in_e(q, k, i, j, alpha, beta)
    })
}

/// One verified identity: a 3x3 minor of `E` (three rows removed)
/// equals a signed combination of coefficient variables times 5x5
/// minors of `Q` (one row removed each).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorIdentity {
    /// Rows of `E` removed (1-based, ascending).
    pub e_rows_removed: [usize; 3],
    /// Right-hand terms `(sign, l, q_row_removed)` standing for
    /// `sign * x_21l * |Q with that row removed|`; empty means the
    /// minor vanishes.
    pub rhs_terms: Vec<(i64, usize, usize)>,
}

/// The first family: twelve single-term identities.
pub fn first_identities() -> Vec<MinorIdentity> {
    [
        ([1, 2, 5], vec![(1, 2, 1)]),
        ([1, 2, 4], vec![(1, 3, 1)]),
        ([1, 3, 6], vec![(1, 1, 2)]),
        ([1, 3, 4], vec![(1, 3, 2)]),
        ([2, 3, 6], vec![(1, 1, 3)]),
        ([2, 3, 5], vec![(1, 2, 3)]),
        ([2, 4, 5], vec![(-1, 2, 4)]),
        ([1, 4, 5], vec![(-1, 3, 4)]),
        ([3, 4, 6], vec![(-1, 1, 5)]),
        ([1, 4, 6], vec![(-1, 3, 5)]),
        ([3, 5, 6], vec![(-1, 1, 6)]),
        ([2, 5, 6], vec![(-1, 2, 6)]),
    ]
    .into_iter()
    .map(|(e_rows_removed, rhs_terms)| MinorIdentity { e_rows_removed, rhs_terms })
    .collect()
}

/// The second family: the remaining eight 3x3 minors, including the two
/// vanishing ones and the two two-term combinations.
pub fn second_identities() -> Vec<MinorIdentity> {
    [
        ([1, 2, 3], vec![]),
        ([4, 5, 6], vec![]),
        ([1, 2, 6], vec![(1, 1, 1)]),
        ([1, 3, 5], vec![(1, 2, 2)]),
        ([3, 4, 5], vec![(-1, 1, 4)]),
        ([2, 4, 6], vec![(-1, 2, 5)]),
        ([2, 3, 4], vec![(-1, 1, 1), (1, 2, 2)]),
        ([1, 5, 6], vec![(1, 1, 4), (-1, 2, 5)]),
    ]
    .into_iter()
    .map(|(e_rows_removed, rhs_terms)| MinorIdentity { e_rows_removed, rhs_terms })
    .collect()
}

impl MinorIdentity {
    pub fn label(&self) -> String {
        let [a, b, c] = self.e_rows_removed;
        let rhs = if self.rhs_terms.is_empty() {
            "0".to_string()
        } else {
            self.rhs_terms
                .iter()
                .enumerate()
                .map(|(idx, (sign, l, row))| {
                    let s = match (idx, sign) {
                        (0, s) if *s >= 0 => "",
                        (0, _) => "-",
                        (_, s) if *s >= 0 => " + ",
                        _ => " - ",
                    };
                    format!("{}x_21{}*|Q_rm{{{}}}|", s, l, row)
                })
                .collect()
        };
        format!("|E_rm{{{},{},{}}}| = {}", a, b, c, rhs)
    }

    /// Left-hand side: the 3x3 minor of `E`.
    pub fn lhs(&self, e: &PolyMatrix) -> Poly {
        e.submatrix(&Selector::remove(&self.e_rows_removed, &[]))
            .expect("rows in range")
            .det()
            .expect("square")
    }

    /// Right-hand side: the signed variable-times-minor combination.
    pub fn rhs(&self, q: &PolyMatrix) -> Poly {
        let ring = q.ring();
        let mut acc = Poly::zero(ring);
        for &(sign, l, row) in &self.rhs_terms {
            let var = Poly::variable(
                ring,
                ring.variable_index(&format!("x_21{}", l)).expect("variable"),
            );
            let minor = q
                .submatrix(&Selector::remove(&[row], &[]))
                .expect("row in range")
                .det()
                .expect("square");
            let term = var
                .checked_mul(&minor)
                .expect("same ring")
                .scalar_mul(&ring.domain().from_i64(sign));
            acc = acc.checked_add(&term).expect("same ring");
        }
        acc
    }

    pub fn check(&self, q: &PolyMatrix, e: &PolyMatrix) -> Check {
        let lhs = self.lhs(e);
        let rhs = self.rhs(q);
        Check::from_eq(self.label(), lhs, rhs)
    }
}

/// Verifies the first family of 3x3 minor identities symbolically.
pub fn verify_first_minor_identities() -> Vec<Check> {
    let ring = generic_ring();
    let q = generic_q(&ring);
    let e = e_matrix(&q);
    first_identities().iter().map(|id| id.check(&q, &e)).collect()
}

/// Verifies the second family of 3x3 minor identities symbolically.
pub fn verify_second_minor_identities() -> Vec<Check> {
    let ring = generic_ring();
    let q = generic_q(&ring);
    let e = e_matrix(&q);
    second_identities().iter().map(|id| id.check(&q, &e)).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

/// Monicizes, dedupes and sorts a minor list by its canonical text.
/// Fails (returns `Err` with the offending minor) when a leading
/// coefficient is not `+-1`.
fn monicized_sorted(minors: Vec<Poly>, what: &str) -> Result<Vec<String>, Check> {
    let mut out = Vec::with_capacity(minors.len());
    for m in minors {
        let Some(normalized) = monic(&m) else {
            return Err(Check::failed(
                format!("all {} have unit leading coefficient", what),
                format!("offending minor: {}", m),
            ));
        };
        out.push(normalized.to_string());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Verifies that, up to signs, the 2x2 minors of `E` and the 4x4 minors
/// of `Q` involving the first two columns coincide as sets.
pub fn verify_minor_set_equality() -> Vec<Check> {
    let ring = generic_ring();
    let q = generic_q(&ring);
    let e = e_matrix(&q);
    let mut checks = Vec::new();

    let col_sets: Vec<Vec<usize>> = subsets(5, 4)
        .into_iter()
        .filter(|s| s.contains(&1) && s.contains(&2))
        .collect();
    let row_sets = subsets(6, 4);
    checks.push(Check::from_eq(
        "4x4 minor enumeration count is 3 x 15 = 45",
        col_sets.len() * row_sets.len(),
        45,
    ));

    let mut minors4q = Vec::new();
    for rows in &row_sets {
        for cols in &col_sets {
            minors4q.push(
                q.submatrix(&Selector::keep(rows, cols))
                    .expect("in range")
                    .det()
                    .expect("square"),
            );
        }
    }
    let minors4q = match monicized_sorted(minors4q, "4x4 minors of Q") {
        Ok(list) => {
            checks.push(Check::passed("all 4x4 minors of Q have unit leading coefficient"));
            list
        }
        Err(fail) => {
            checks.push(fail);
            return checks;
        }
    };

    let mut minors2e = Vec::new();
    for rows in subsets(6, 2) {
        for cols in subsets(3, 2) {
            minors2e.push(
                e.submatrix(&Selector::keep(&rows, &cols))
                    .expect("in range")
                    .det()
                    .expect("square"),
            );
        }
    }
    let minors2e = match monicized_sorted(minors2e, "2x2 minors of E") {
        Ok(list) => {
            checks.push(Check::passed("all 2x2 minors of E have unit leading coefficient"));
            list
        }
        Err(fail) => {
            checks.push(fail);
            return checks;
        }
    };

    checks.push(Check::from_eq(
        "monicized 2x2 minors of E equal monicized 4x4 minors of Q",
        minors2e.join(" ; "),
        minors4q.join(" ; "),
    ));
    checks
}

/// Runs every identity family; the full symbolic verification suite.
pub fn verify_all() -> Vec<Check> {
    let mut checks = verify_first_minor_identities();
    checks.extend(verify_second_minor_identities());
    checks.extend(verify_minor_set_equality());
    checks
}
