//! Randomized realizability search: classify the trims of many random
//! presenters and tally which (t, class) rows show up.
//!
//! Determinism contract: a fixed seed yields a byte-identical census.
//! Each trial owns an independent RNG stream derived from the seed, so
//! the parallel schedule cannot influence the outcome; results are
//! folded in trial order.

use std::collections::BTreeMap;

use gortrim::example;
use gortrim::poly::Poly;
use gortrim::ring::{Monomial, Ring};
use gortrim::scalar::Domain;
use gortrim::trim::classify;
use gortrim::SkewMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::document::{field_name, MatrixDocument, WitnessInfo};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub domain: Domain,
    pub degree: u32,
    pub trials: u64,
    pub seed: u64,
    pub trim_sizes: Vec<usize>,
    pub include_example: bool,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !self.domain.is_field() {
            return Err("search requires a field".to_string());
        }
        if self.degree == 0 {
            return Err("degree bound must be at least 1".to_string());
        }
        if self.trials == 0 && !self.include_example {
            return Err("need at least one trial".to_string());
        }
        if self.trim_sizes.is_empty()
            || self.trim_sizes.iter().any(|&s| s == 0 || s > 5)
        {
            return Err("trim sizes must lie in 1..=5".to_string());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusRow {
    pub t: usize,
    pub class: String,
    pub count: u64,
    pub first_trial: u64,
    pub first_trim: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SearchOutcome {
    pub field: String,
    pub degree: u32,
    pub trials: u64,
    pub seed: u64,
    pub trim_sizes: Vec<usize>,
    pub include_example: bool,
    pub classify_errors: u64,
    pub census: Vec<CensusRow>,
}

impl SearchOutcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn has_row(&self, t: usize, class: &str) -> bool {
        self.census.iter().any(|r| r.t == t && r.class == class)
    }
}

/// All nonempty subsets of `1..=5` whose size is listed, ordered by
/// size then lexicographically.
pub fn trim_sets_of_sizes(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted_sizes: Vec<usize> = sizes.to_vec();
    sorted_sizes.sort_unstable();
    sorted_sizes.dedup();
    let mut out = Vec::new();
    for &k in &sorted_sizes {
        let mut current = Vec::new();
        fn rec(start: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == k {
                out.push(current.clone());
                return;
            }
            for v in start..=5 {
                current.push(v);
                rec(v + 1, k, current, out);
                current.pop();
            }
        }
        rec(1, k, &mut current, &mut out);
    }
    out
}

/// Monomials of degree `1..=bound` in three variables, in a fixed
/// enumeration order.
fn entry_monomials(bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound - a {
            for c in 0..=bound - a - b {
                if (1..=bound).contains(&(a + b + c)) {
                    out.push(Monomial::new(vec![a, b, c]));
                }
            }
        }
    }
    out
}

fn random_coefficient<R: Rng>(rng: &mut R, domain: Domain) -> gortrim::Scalar {
    match domain {
        Domain::Prime(p) => domain.from_i64(rng.gen_range(0..p) as i64),
        // no uniform distribution exists on Q; small integers keep the
        // search exact and well spread
        Domain::Rational => domain.from_i64(rng.gen_range(-2i64..=2)),
        Domain::Integer => unreachable!("validated as a field"),
    }
}

/// One random constant-free entry: every monomial of degree `1..=bound`
/// gets an independent uniform coefficient.
fn random_entry<R: Rng>(rng: &mut R, ring: &Ring, monomials: &[Monomial]) -> Poly {
    Poly::from_terms(
        ring,
        monomials
            .iter()
            .map(|m| (m.clone(), random_coefficient(rng, ring.domain()))),
    )
}

/// The deterministic presenter of a trial: upper-triangle entries in
/// row-major order, skew-symmetrized.
pub fn presenter_for_trial(cfg: &SearchConfig, ring: &Ring, trial: u64) -> SkewMatrix {
    if cfg.include_example && trial == 0 {
        return example::presenter();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let monomials = entry_monomials(cfg.degree);
    let upper: Vec<Poly> = (0..10).map(|_| random_entry(&mut rng, ring, &monomials)).collect();
    SkewMatrix::from_upper_triangle(ring, 5, &upper).expect("random presenter is valid")
}

pub fn run(cfg: &SearchConfig) -> Result<SearchOutcome, String> {
    cfg.validate()?;
    let ring = Ring::new(cfg.domain, &["x", "y", "z"]).map_err(|e| e.to_string())?;
    let sets = trim_sets_of_sizes(&cfg.trim_sizes);

    let first_trial = if cfg.include_example { 0u64 } else { 1 };
    let trials: Vec<u64> = (first_trial..=cfg.trials).collect();

    // per-trial classification, in parallel, folded in trial order below
    let per_trial: Vec<(u64, Vec<(Vec<usize>, Result<(usize, String), String>)>)> = trials
        .par_iter()
        .map(|&trial| {
            let t = presenter_for_trial(cfg, &ring, trial);
            let results = sets
                .iter()
                .map(|set| {
                    let outcome = classify(&t, set)
                        .map(|r| (r.t, r.class.to_string()))
                        .map_err(|e| e.to_string());
                    (set.clone(), outcome)
                })
                .collect();
            (trial, results)
        })
        .collect();

    let mut rows: BTreeMap<(usize, String), CensusRow> = BTreeMap::new();
    let mut classify_errors = 0u64;
    for (trial, results) in per_trial {
        for (set, outcome) in results {
            match outcome {
                Ok((t, class)) => {
                    rows.entry((t, class.clone()))
                        .and_modify(|r| r.count += 1)
                        .or_insert(CensusRow {
                            t,
                            class,
                            count: 1,
                            first_trial: trial,
                            first_trim: set.clone(),
                        });
                }
                Err(_) => classify_errors += 1,
            }
        }
    }

    Ok(SearchOutcome {
        field: field_name(cfg.domain),
        degree: cfg.degree,
        trials: cfg.trials,
        seed: cfg.seed,
        trim_sizes: cfg.trim_sizes.clone(),
        include_example: cfg.include_example,
        classify_errors,
        census: rows.into_values().collect(),
    })
}

/// Rebuilds the witness presenter for each census row as a matrix
/// document (deterministic re-generation from the seed).
pub fn witness_documents(
    cfg: &SearchConfig,
    outcome: &SearchOutcome,
) -> Vec<(CensusRow, MatrixDocument)> {
    let ring = Ring::new(cfg.domain, &["x", "y", "z"]).expect("valid ring");
    outcome
        .census
        .iter()
        .map(|row| {
            let presenter = presenter_for_trial(cfg, &ring, row.first_trial);
            let mut doc = MatrixDocument::from_presenter(&presenter);
            doc.witness = Some(WitnessInfo {
                trial: row.first_trial,
                trim: row.first_trim.clone(),
                t: row.t,
                class: row.class.clone(),
                seed: cfg.seed,
            });
            (row.clone(), doc)
        })
        .collect()
}

/// File name for one witness document.
pub fn witness_file_name(row: &CensusRow) -> String {
    let slug: String = row
        .class
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect();
    format!("witness_t{}_{}.json", row.t, slug.trim_end_matches('_'))
}
