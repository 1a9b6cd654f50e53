//! The embedded worked example: a five-generated Gorenstein ideal over
//! `F_2[x,y,z]` whose eight trims realize every class row of the
//! trimming tables.
//!
//! Everything this module asserts is checkable by the crate itself: the
//! generator list, the stacked matrices before and after conjugation,
//! three grade witnesses (polynomial identities exhibiting the regular
//! sequence `x^2, y^5, z^6` inside the ideal after clearing the units
//! `1+x` and `1+z^4`), and the eight-trim classification table.

use crate::check::Check;
use crate::matrix::FieldMatrix;
use crate::parse::parse_poly;
use crate::pfaffian::SkewMatrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::Domain;
use crate::trim::{classify, LinearCoeffs, Permutation, TorClass};

pub fn example_ring() -> Ring {
    Ring::new(Domain::prime(2).unwrap(), &["x", "y", "z"]).unwrap()
}

/// Upper triangle of the example presenter, row by row.
const UPPER: [&str; 10] = [
    "y+z", "z", "z+y^2", "z",      // (1,2) (1,3) (1,4) (1,5)
    "x", "x+y+z", "x+y+z+z^2",     // (2,3) (2,4) (2,5)
    "z", "x+z",                    // (3,4) (3,5)
    "x^2",                         // (4,5)
];

/// The 5x5 example presenter.
pub fn presenter() -> SkewMatrix {
    let ring = example_ring();
    let entries: Vec<Poly> = UPPER.iter().map(|s| parse_poly(s, &ring).unwrap()).collect();
    SkewMatrix::from_upper_triangle(&ring, 5, &entries).unwrap()
}

/// The five sub-maximal pfaffians (equal to the ideal generators over
/// `F_2`).
pub const EXPECTED_GENERATORS: [&str; 5] = [
    "x^3+z^3+x^2+x*y+x*z",
    "x*y^2+x^2*z+y^2*z+x*z",
    "y^2*z^2+x^2*y+x*y^2+y^3+x^2*z+y^2*z+z^3",
    "z^3+x*y+x*z",
    "x*y^2",
];

/// Stacked matrix of the trim of generators 1, 2, 3.
pub const Q_TRIM_123: [[u8; 5]; 9] = [
    [0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1],
    [1, 0, 0, 1, 1],
    [1, 0, 0, 1, 1],
    [0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0],
    [1, 0, 0, 1, 1],
];

/// The conjugating 5-cycle realizing the trim of generators 3, 4, 5
/// (image list: old position `i` moves to `images[i-1]`).
pub fn conjugation_permutation() -> Permutation {
    Permutation::new(vec![4, 5, 1, 2, 3]).unwrap()
}

/// The conjugated presenter, row by row.
pub const CONJUGATED: [[&str; 5]; 5] = [
    ["0", "z", "x+z", "z", "x"],
    ["z", "0", "x^2", "z+y^2", "x+y+z"],
    ["x+z", "x^2", "0", "z", "x+y+z+z^2"],
    ["z", "z+y^2", "z", "0", "y+z"],
    ["x", "x+y+z", "x+y+z+z^2", "y+z", "0"],
];

/// Stacked matrix of the conjugated presenter (trim of its generators
/// 1, 2, 3).
pub const Q_CONJUGATED: [[u8; 5]; 9] = [
    [0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1],
    [1, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [0, 0, 0, 0, 1],
    [1, 0, 0, 1, 1],
];

/// The eight-trim classification table: trim set, class, format, mu.
pub fn trim_table() -> Vec<(Vec<usize>, TorClass, [usize; 4], usize)> {
    vec![
        (vec![1, 2, 4], TorClass::B, [1, 8, 11, 4], 8),
        (vec![1, 2, 3], TorClass::H { p: 1, q: 1 }, [1, 7, 10, 4], 7),
        (vec![3, 4, 5], TorClass::H { p: 1, q: 0 }, [1, 6, 9, 4], 6),
        (vec![1, 2], TorClass::B, [1, 6, 8, 3], 6),
        (vec![3, 4], TorClass::H { p: 2, q: 1 }, [1, 5, 7, 3], 5),
        (vec![3, 5], TorClass::T, [1, 4, 6, 3], 4),
        (vec![1], TorClass::B, [1, 5, 6, 2], 5),
        (vec![5], TorClass::H { p: 3, q: 2 }, [1, 4, 5, 2], 4),
    ]
}

/// A grade witness: `unit * power == sum(coeff_i * generator_i)` over
/// `F_2[x,y,z]`, with 1-based generator indices.
pub type GradeWitness = (&'static str, &'static str, Vec<(usize, &'static str)>);

pub fn grade_witnesses() -> Vec<GradeWitness> {
    vec![
        ("1+x", "x^2", vec![(1, "1"), (4, "1")]),
        (
            "1",
            "y^5",
            vec![
                (2, "y^2*z+y^2"),
                (3, "y^2"),
                (4, "y^2"),
                (5, "y^2*z+x*z^2+x*y+z^2+y"),
            ],
        ),
        (
            "1+z^4",
            "z^6",
            vec![
                (2, "x*y^3+x^2*z+x*z"),
                (
                    4,
                    "z^7+x*y*z^4+x*z^5+x^2*y^2*z+x^2*z^3+x^3*y+x^3*z+z^3+x*y+x*z",
                ),
                (5, "x*y^3+y^3*z+x^2*z^2+x^3+x^2*z+x*y*z+x*z^2+x*z+z^2+x"),
            ],
        ),
    ]
}

fn field_matrix_from_bits(bits: &[[u8; 5]; 9]) -> FieldMatrix {
    let f2 = Domain::prime(2).unwrap();
    FieldMatrix::from_fn(9, 5, f2, |i, j| f2.from_i64(bits[i - 1][j - 1] as i64))
}

/// Runs every embedded check against `t` (normally [`presenter`]).
pub fn verify_with(t: &SkewMatrix) -> Vec<Check> {
    let ring = t.ring().clone();
    let mut checks = Vec::new();

    // 1. generator list
    let gens = t.generators();
    for (idx, expected) in EXPECTED_GENERATORS.iter().enumerate() {
        let want = parse_poly(expected, &ring).unwrap();
        checks.push(Check::from_eq(
            format!("generator {} = {}", idx + 1, expected),
            gens[idx].clone(),
            want,
        ));
    }

    // 2. stacked matrix of the first trim, entry for entry, and rank
    match LinearCoeffs::from_presenter(t).and_then(|c| c.q_matrix(3)) {
        Ok(q) => {
            checks.push(Check::from_eq(
                "stacked matrix of trim {1,2,3} matches",
                q.matrix().clone(),
                field_matrix_from_bits(&Q_TRIM_123),
            ));
            checks.push(Check::from_eq("rank of trim {1,2,3} matrix", q.rank(), 4));
        }
        Err(e) => checks.push(Check::failed("stacked matrix of trim {1,2,3}", e.to_string())),
    }

    // 3. conjugation by the 5-cycle
    let perm = conjugation_permutation();
    match t.conjugate(&perm) {
        Ok(conj) => {
            let mut all_entries_ok = true;
            let mut bad = String::new();
            for i in 1..=5 {
                for j in 1..=5 {
                    let want = parse_poly(CONJUGATED[i - 1][j - 1], &ring).unwrap();
                    if *conj.entry(i, j) != want {
                        all_entries_ok = false;
                        bad = format!("entry ({},{}) = {}, expected {}", i, j, conj.entry(i, j), want);
                    }
                }
            }
            checks.push(if all_entries_ok {
                Check::passed("conjugated presenter matches printed matrix")
            } else {
                Check::failed("conjugated presenter matches printed matrix", bad)
            });

            // pfaffian relabelling: pf_k(T') = pf_{3,4,5 -> 1,2,3}(T)
            for (k, old) in [(1usize, 3usize), (2, 4), (3, 5)] {
                checks.push(Check::from_eq(
                    format!("pfaffian {} of conjugate = pfaffian {} of original", k, old),
                    conj.sub_pfaffian(&[k]).unwrap(),
                    t.sub_pfaffian(&[old]).unwrap(),
                ));
            }

            match LinearCoeffs::from_presenter(&conj).and_then(|c| c.q_matrix(3)) {
                Ok(q) => {
                    checks.push(Check::from_eq(
                        "stacked matrix of conjugate matches",
                        q.matrix().clone(),
                        field_matrix_from_bits(&Q_CONJUGATED),
                    ));
                    checks.push(Check::from_eq("rank of conjugate matrix", q.rank(), 5));
                }
                Err(e) => checks.push(Check::failed("stacked matrix of conjugate", e.to_string())),
            }
        }
        Err(e) => checks.push(Check::failed("conjugation by the 5-cycle", e.to_string())),
    }

    // 4. grade witnesses after clearing units
    let gens = t.generators();
    for (unit, power, combo) in grade_witnesses() {
        let label = format!("grade witness ({})*{} = combination of generators", unit, power);
        let lhs = parse_poly(unit, &ring)
            .unwrap()
            .checked_mul(&parse_poly(power, &ring).unwrap())
            .unwrap();
        let mut rhs = Poly::zero(&ring);
        for (gen_idx, coeff) in combo {
            let term = parse_poly(coeff, &ring).unwrap().checked_mul(&gens[gen_idx - 1]).unwrap();
            rhs = rhs.checked_add(&term).unwrap();
        }
        checks.push(Check::from_eq(label, lhs, rhs));
    }

    // 5. the eight-trim table
    for (set, class, format, mu) in trim_table() {
        let label = format!("trim {:?} classifies as {}", set, class);
        match classify(t, &set) {
            Ok(report) => {
                if report.class == class && report.format == format && report.mu == mu {
                    checks.push(Check::passed(label));
                } else {
                    checks.push(Check::failed(
                        label,
                        format!(
                            "got {} format {:?} mu {}, expected {} {:?} {}",
                            report.class, report.format, report.mu, class, format, mu
                        ),
                    ));
                }
            }
            Err(e) => checks.push(Check::failed(label, e.to_string())),
        }
    }

    checks
}

/// Runs every embedded check against the canonical presenter.
pub fn verify() -> Vec<Check> {
    verify_with(&presenter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_pass;

    #[test]
    fn all_embedded_checks_pass() {
        let checks = verify();
        for c in &checks {
            assert!(c.pass, "{}", c);
        }
        assert!(checks.len() >= 20);
    }

    #[test]
    fn mutated_presenter_fails_some_check() {
        let ring = example_ring();
        let mut upper: Vec<Poly> =
            UPPER.iter().map(|s| parse_poly(s, &ring).unwrap()).collect();
        upper[0] = parse_poly("y", &ring).unwrap(); // drop the z from entry (1,2)
        let mutated = SkewMatrix::from_upper_triangle(&ring, 5, &upper).unwrap();
        assert!(!all_pass(&verify_with(&mutated)));
    }
}
