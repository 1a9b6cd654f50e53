//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime (visible under `--nocapture` / `--show-output`).
//!
//! All arithmetic is exact, so every comparison below is exact
//! equality; the only tolerances are the stated runtime budgets.

use std::time::{Duration, Instant};

use gortrim::check::all_pass;
use gortrim::example;
use gortrim::lemmas;
use gortrim::matrix::PolyMatrix;
use gortrim::parse_poly;
use gortrim::pfaffian::pfaffian;
use gortrim::poly::Poly;
use gortrim::ring::{Monomial, Ring};
use gortrim::scalar::Domain;
use gortrim::trim::{classify, LinearCoeffs, TorClass};
use gortrim::SkewMatrix;
use gortrim_cli::search::{run as run_search, SearchConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f2() -> Domain {
    Domain::prime(2).unwrap()
}

fn f5() -> Domain {
    Domain::prime(5).unwrap()
}

fn domains() -> [Domain; 3] {
    [f2(), f5(), Domain::Rational]
}

fn ring3(domain: Domain) -> Ring {
    Ring::new(domain, &["x", "y", "z"]).unwrap()
}

fn monomials(lo: u32, hi: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=hi {
        for b in 0..=hi - a {
            for c in 0..=hi - a - b {
                if (lo..=hi).contains(&(a + b + c)) {
                    out.push(Monomial::new(vec![a, b, c]));
                }
            }
        }
    }
    out
}

fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, lo: u32, hi: u32) -> Poly {
    Poly::from_terms(
        ring,
        monomials(lo, hi).into_iter().filter_map(|m| {
            let c = rng.gen_range(-2i64..=2);
            (c != 0).then(|| (m, ring.domain().from_i64(c)))
        }),
    )
}

fn random_presenter<R: Rng>(rng: &mut R, ring: &Ring, m: usize) -> SkewMatrix {
    let upper: Vec<Poly> =
        (0..m * (m - 1) / 2).map(|_| random_poly(rng, ring, 1, 2)).collect();
    SkewMatrix::from_upper_triangle(ring, m, &upper).unwrap()
}

fn random_even_skew<R: Rng>(rng: &mut R, ring: &Ring, n: usize) -> PolyMatrix {
    let mut grid = vec![vec![Poly::zero(ring); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = random_poly(rng, ring, 0, 2);
            grid[j][i] = e.neg();
            grid[i][j] = e;
        }
    }
    PolyMatrix::new(n, n, ring, grid.into_iter().flatten().collect()).unwrap()
}

fn finish(criterion: &str, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{} exceeded its runtime budget: {:?} >= {:?}",
        criterion,
        elapsed,
        budget
    );
    println!("ACCEPTANCE {}: PASS — {} ({:.2?})", criterion, what, elapsed);
}

#[test]
fn criterion_1_pfaffian_reproduction() {
    let started = Instant::now();
    let t = example::presenter();
    let ring = t.ring().clone();
    let gens = t.generators();
    for (i, expected) in example::EXPECTED_GENERATORS.iter().enumerate() {
        assert_eq!(
            gens[i],
            parse_poly(expected, &ring).unwrap(),
            "generator {} mismatch",
            i + 1
        );
    }
    finish(
        "1",
        "the five embedded generators match the printed polynomials exactly",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_stacked_matrices_and_conjugation() {
    let started = Instant::now();
    let t = example::presenter();
    let ring = t.ring().clone();
    let f2 = f2();

    let q = LinearCoeffs::from_presenter(&t).unwrap().q_matrix(3).unwrap();
    for i in 1..=9 {
        for j in 1..=5 {
            assert_eq!(
                *q.matrix().entry(i, j),
                f2.from_i64(example::Q_TRIM_123[i - 1][j - 1] as i64),
                "stacked matrix entry ({},{})",
                i,
                j
            );
        }
    }
    assert_eq!(q.rank(), 4);

    let conj = t.conjugate(&example::conjugation_permutation()).unwrap();
    for i in 1..=5 {
        for j in 1..=5 {
            assert_eq!(
                *conj.entry(i, j),
                parse_poly(example::CONJUGATED[i - 1][j - 1], &ring).unwrap(),
                "conjugated entry ({},{})",
                i,
                j
            );
        }
    }
    let qc = LinearCoeffs::from_presenter(&conj).unwrap().q_matrix(3).unwrap();
    for i in 1..=9 {
        for j in 1..=5 {
            assert_eq!(
                *qc.matrix().entry(i, j),
                f2.from_i64(example::Q_CONJUGATED[i - 1][j - 1] as i64),
                "conjugated stacked entry ({},{})",
                i,
                j
            );
        }
    }
    assert_eq!(qc.rank(), 5);
    finish(
        "2",
        "both stacked matrices match entry-for-entry with ranks 4 and 5",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_eight_trim_table() {
    let started = Instant::now();
    let t = example::presenter();
    for (set, class, format, mu) in example::trim_table() {
        let report = classify(&t, &set).unwrap();
        assert_eq!(report.class, class, "class for trim {:?}", set);
        assert_eq!(report.format, format, "format for trim {:?}", set);
        assert_eq!(report.mu, mu, "mu for trim {:?}", set);
    }
    finish(
        "3",
        "all eight trim classifications, formats and mu values match",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_4_grade_identities() {
    let started = Instant::now();
    let t = example::presenter();
    let ring = t.ring().clone();
    let gens = t.generators();
    for (unit, power, combo) in example::grade_witnesses() {
        let lhs = parse_poly(unit, &ring)
            .unwrap()
            .checked_mul(&parse_poly(power, &ring).unwrap())
            .unwrap();
        let mut rhs = Poly::zero(&ring);
        for (idx, coeff) in combo {
            rhs = rhs
                .checked_add(
                    &parse_poly(coeff, &ring).unwrap().checked_mul(&gens[idx - 1]).unwrap(),
                )
                .unwrap();
        }
        assert_eq!(lhs, rhs, "grade identity ({})*{}", unit, power);
    }
    finish(
        "4",
        "the three grade identities hold exactly after clearing units",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_5_lemma_suite() {
    let started = Instant::now();
    let first = lemmas::verify_first_minor_identities();
    let second = lemmas::verify_second_minor_identities();
    let sets = lemmas::verify_minor_set_equality();
    assert_eq!(first.len(), 12);
    assert_eq!(second.len(), 8);
    for c in first.iter().chain(&second).chain(&sets) {
        assert!(c.pass, "{}", c);
    }
    finish(
        "5",
        "12 + 8 minor identities and the 2x2/4x4 minor-set equality verify symbolically",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_6_property_suite() {
    let started = Instant::now();
    let budget = Duration::from_secs(300);

    // (a) complex identities on random 5x5 and 7x7 presenters
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for m in [5usize, 7] {
            for _ in 0..35 {
                let t = random_presenter(&mut rng, &ring, m);
                let res = t.resolution().expect("D1*D2 = 0 and D2*D3 = 0");
                assert!(res.d1.mul(&res.d2).unwrap().is_zero());
                assert!(res.d2.mul(&res.d3).unwrap().is_zero());
                instances += 1;
            }
        }
    }
    assert!(instances >= 200);
    println!("  complex identities: {} instances", instances);

    // (b) Leibniz rule for all i < j
    let mut rng = ChaCha8Rng::seed_from_u64(602);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for m in [5usize, 7] {
            for _ in 0..35 {
                let t = random_presenter(&mut rng, &ring, m);
                let gens = t.generators();
                for i in 1..=m {
                    for j in i + 1..=m {
                        let coeffs = t.product_ee(i, j).unwrap().coefficients;
                        let col = PolyMatrix::new(m, 1, &ring, coeffs).unwrap();
                        let image = t.matrix().mul(&col).unwrap();
                        for r in 1..=m {
                            let expect = if r == j {
                                gens[i - 1].clone()
                            } else if r == i {
                                gens[j - 1].neg()
                            } else {
                                Poly::zero(&ring)
                            };
                            assert_eq!(*image.entry(r, 1), expect);
                        }
                    }
                }
                instances += 1;
            }
        }
    }
    assert!(instances >= 200);
    println!("  Leibniz rule: {} instances", instances);

    // (c) pfaffian squared equals determinant, sizes 2, 4, 6
    let mut rng = ChaCha8Rng::seed_from_u64(603);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for n in [2usize, 4, 6] {
            for _ in 0..23 {
                let m = random_even_skew(&mut rng, &ring, n);
                let pf = pfaffian(&m).unwrap();
                assert_eq!(pf.checked_mul(&pf).unwrap(), m.det().unwrap());
                instances += 1;
            }
        }
    }
    assert!(instances >= 200);
    println!("  pfaffian^2 = det: {} instances", instances);

    // (d) complement-order invariance of the product coefficients
    let mut rng = ChaCha8Rng::seed_from_u64(604);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for _ in 0..70 {
            let t = random_presenter(&mut rng, &ring, 5);
            let c = LinearCoeffs::from_presenter(&t).unwrap();
            for trim in 1..=3usize {
                for k in 1..=trim {
                    for i in trim + 1..=5 {
                        for j in i + 1..=5 {
                            let comp: Vec<usize> =
                                (1..=5).filter(|&x| x != k && x != i && x != j).collect();
                            for (a, b) in [(1, 2), (1, 3), (2, 3)] {
                                let fwd = c
                                    .d_coefficient_ordered(k, i, j, a, b, comp[0], comp[1])
                                    .unwrap();
                                let rev = c
                                    .d_coefficient_ordered(k, i, j, a, b, comp[1], comp[0])
                                    .unwrap();
                                assert_eq!(fwd, rev);
                            }
                        }
                    }
                }
            }
            instances += 1;
        }
    }
    assert!(instances >= 200);
    println!("  complement-order invariance: {} instances", instances);

    // (e) pivot lemmas for t = 2, 3 on instances failing the G-condition
    let mut rng = ChaCha8Rng::seed_from_u64(605);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for t in [2usize, 3] {
            let mut accepted = 0;
            while accepted < 35 {
                let presenter = random_presenter(&mut rng, &ring, 5);
                let c = LinearCoeffs::from_presenter(&presenter).unwrap();
                if c.g_trimming_condition(t).unwrap() {
                    continue;
                }
                let q = c.q_matrix(t).unwrap();
                let pivots = q.pivot_columns();
                for lead in 1..=t {
                    assert!(pivots.contains(&lead), "leading column {} not a pivot", lead);
                }
                assert_eq!(q.rank(), t + q.p_invariant());
                accepted += 1;
                instances += 1;
            }
        }
    }
    assert!(instances >= 200);
    println!("  pivot lemmas: {} instances", instances);

    // (f) rank bridge at t = 2: rank(E) = rank(Q) - 2 when G fails
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        let mut accepted = 0;
        while accepted < 70 {
            let presenter = random_presenter(&mut rng, &ring, 5);
            let c = LinearCoeffs::from_presenter(&presenter).unwrap();
            if c.g_trimming_condition(2).unwrap() {
                continue;
            }
            let q = c.q_matrix(2).unwrap();
            let e = c.product_matrix(2).unwrap();
            assert_eq!(e.rank(), q.rank() - 2);
            accepted += 1;
            instances += 1;
        }
    }
    assert!(instances >= 200);
    println!("  rank bridge: {} instances", instances);

    // (g) p-invariant ranges when the G-condition fails
    let mut rng = ChaCha8Rng::seed_from_u64(607);
    let mut instances = 0;
    for domain in domains() {
        let ring = ring3(domain);
        for t in [1usize, 2] {
            let mut accepted = 0;
            while accepted < 35 {
                let presenter = random_presenter(&mut rng, &ring, 5);
                let c = LinearCoeffs::from_presenter(&presenter).unwrap();
                if c.g_trimming_condition(t).unwrap() {
                    continue;
                }
                let p = c.q_matrix(t).unwrap().p_invariant();
                match t {
                    1 => assert!(p == 2 || p == 3, "p(T,1) = {}", p),
                    _ => assert!(p >= 1, "p(T,2) = {}", p),
                }
                accepted += 1;
                instances += 1;
            }
        }
    }
    assert!(instances >= 200);
    println!("  p-invariant ranges: {} instances", instances);

    finish(
        "6",
        "all structural properties hold with zero failures",
        started,
        budget,
    );
}

#[test]
fn criterion_7_realizability_search() {
    let started = Instant::now();
    let cfg = SearchConfig {
        domain: f2(),
        degree: 2,
        trials: 1000,
        seed: 42,
        trim_sizes: vec![1, 2, 3],
        include_example: true,
    };
    let outcome = run_search(&cfg).unwrap();
    assert_eq!(outcome.classify_errors, 0);

    let expected_rows: [(usize, TorClass); 8] = [
        (3, TorClass::B),
        (3, TorClass::H { p: 1, q: 1 }),
        (3, TorClass::H { p: 1, q: 0 }),
        (2, TorClass::B),
        (2, TorClass::H { p: 2, q: 1 }),
        (2, TorClass::T),
        (1, TorClass::B),
        (1, TorClass::H { p: 3, q: 2 }),
    ];
    for (t, class) in expected_rows {
        assert!(
            outcome.has_row(t, &class.to_string()),
            "census missing t={} class={}",
            t,
            class
        );
    }

    // byte-level reproducibility under the same seed
    let again = run_search(&cfg).unwrap();
    assert_eq!(outcome.to_json(), again.to_json());

    finish(
        "7",
        "census realizes all eight table rows and is byte-reproducible",
        started,
        Duration::from_secs(120),
    );
}
