//! Verification suites; each scans n = 1..=n_max and stops at the first
//! failure, which is therefore a smallest witness in scan order.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use sncoef::dimensions::{dim_irrep, naruse_lower_bound};
use sncoef::extremal;
use sncoef::kronecker::{kron_sum_squares, DEFAULT_BRUTE_CAP};
use sncoef::logspace::factorial;
use sncoef::lr::{hw_coefficient, lr_coefficient, lr_coefficient_hive, lr_expand, verify_lpp, verify_lr_identities};
use sncoef::partition::{enumerate_partitions, subpartitions};
use sncoef::skew::{skew_bounds_report, skew_sum_squares, skew_sum_squares_brute, skew_syt_count, skew_syt_count_direct, skew_syt_count_lr};
use sncoef::{Error, Partition, Result, SkewShape};

use crate::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Burnside,
    KronSquares,
    LrIdentities,
    Hw,
    SkewSquares,
    Lpp,
    Monotone,
    Naruse,
    Backends,
}

impl Suite {
    /// Largest n_max the suite accepts.
    pub fn cap(self) -> usize {
        match self {
            Suite::Burnside => 40,
            Suite::KronSquares => DEFAULT_BRUTE_CAP,
            Suite::LrIdentities | Suite::Hw => 10,
            Suite::SkewSquares => 10,
            Suite::Lpp | Suite::Backends => 10,
            Suite::Monotone => extremal::STRETCH_N_MAX,
            Suite::Naruse => 12,
        }
    }
}

fn fail(check: &str, witness: String) -> Error {
    Error::Verification {
        check: check.to_string(),
        witness,
    }
}

fn sized(n: usize) -> Vec<Partition> {
    if n == 0 {
        vec![Partition::empty()]
    } else {
        enumerate_partitions(n)
    }
}

/// Every (λ, μ, ν) with λ ⊢ n, μ ⊢ k, ν ⊢ n − k, in scan order.
fn triples(n: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for lambda in sized(n) {
        for k in 0..=n {
            for mu in sized(k) {
                for nu in sized(n - k) {
                    out.push((lambda.clone(), mu.clone(), nu));
                }
            }
        }
    }
    out
}

/// First failing triple in scan order.
fn first_failure<T: Sync>(items: &[T], bad: impl Fn(&T) -> Result<bool> + Sync) -> Result<Option<&T>> {
    let hit = items.par_iter().map(|t| bad(t).map(|b| b.then_some(t))).find_first(|r| !matches!(r, Ok(None)));
    match hit {
        Some(Ok(t)) => Ok(t),
        Some(Err(e)) => Err(e),
        None => Ok(None),
    }
}

pub fn run_suite(suite: Suite, n_max: usize, config: &RunConfig) -> Result<Vec<String>> {
    if n_max == 0 {
        return Err(Error::Argument("--n-max must be at least 1".into()));
    }
    if n_max > suite.cap() {
        return Err(Error::ResourceLimit {
            what: "verification suite",
            requested: n_max,
            cap: suite.cap(),
        });
    }
    let mut checks = 0usize;
    match suite {
        Suite::Burnside => {
            for n in 1..=n_max {
                let total: BigUint = enumerate_partitions(n).par_iter().map(|l| dim_irrep(l).pow(2)).sum();
                if total != factorial(n) {
                    return Err(fail("Σ(f^λ)² = n!", format!("n={n}")));
                }
                checks += 1;
            }
        }
        Suite::KronSquares => {
            for n in 1..=n_max {
                config.warm_characters(n)?;
                if !kron_sum_squares(n)?.verified {
                    return Err(fail("Σg² = Σz_α", format!("n={n}")));
                }
                checks += 1;
            }
        }
        Suite::LrIdentities => {
            for n in 0..=n_max {
                for k in 0..=n {
                    verify_lr_identities(n, k)?;
                    checks += 1;
                }
            }
        }
        Suite::Hw => {
            for n in 0..=n_max {
                for k in 0..=n {
                    if hw_coefficient(k, n - k) != verify_lr_identities(n, k)?.sum_squares {
                        return Err(fail("hw(k, n−k) = Σc²", format!("n={n} k={k}")));
                    }
                    checks += 1;
                }
            }
        }
        Suite::SkewSquares => {
            for n in 0..=n_max {
                for m in 0..=n {
                    if skew_sum_squares(n, m)? != skew_sum_squares_brute(n, m) {
                        return Err(fail("Σ(f^{λ/μ})² generating function", format!("n={n} m={m}")));
                    }
                    if m >= 1 && !skew_bounds_report(n, m)?.pass {
                        return Err(fail("skew sum-of-squares sandwich", format!("n={n} m={m}")));
                    }
                    checks += 1;
                }
            }
        }
        Suite::Lpp => {
            for n in 0..=n_max {
                let all = triples(n);
                if let Some((l, m, v)) = first_failure(&all, |(l, m, v)| verify_lpp(l, m, v).map(|ok| !ok))? {
                    return Err(fail("c^λ_{μν} ≤ c^λ_{μ∧ν, μ∨ν}", format!("({l}; {m}; {v})")));
                }
                checks += all.len();
            }
        }
        Suite::Monotone => {
            let r = extremal::monotonicity_scan_with(n_max, &config.scan_options())?;
            checks += r.maxima.len();
        }
        Suite::Naruse => {
            for n in 1..=n_max {
                for lambda in enumerate_partitions(n) {
                    for mu in subpartitions(&lambda) {
                        let straight = mu.is_empty();
                        let shape = SkewShape::new(lambda.clone(), mu)?;
                        let f = BigRational::from_integer(skew_syt_count(&shape).into());
                        let lower = naruse_lower_bound(&shape);
                        if lower > f || (straight && lower != f) {
                            return Err(fail("Naruse lower bound", shape.to_string()));
                        }
                        checks += 1;
                    }
                }
            }
        }
        Suite::Backends => {
            for n in 0..=n_max {
                let all = triples(n);
                let bad = first_failure(&all, |(l, m, v)| Ok(lr_coefficient(l, m, v)? != lr_coefficient_hive(l, m, v)?))?;
                if let Some((l, m, v)) = bad {
                    return Err(fail("LR rule = hive count", format!("({l}; {m}; {v})")));
                }
                checks += all.len();
                for lambda in sized(n) {
                    for mu in subpartitions(&lambda) {
                        let shape = SkewShape::new(lambda.clone(), mu.clone())?;
                        let det = skew_syt_count(&shape);
                        if det != skew_syt_count_lr(&shape) || det != skew_syt_count_direct(&shape) {
                            return Err(fail("skew determinant = LR expansion = enumeration", shape.to_string()));
                        }
                        let total: BigUint = lr_expand(&lambda, &mu)
                            .coeffs
                            .iter()
                            .map(|(nu, c)| c * dim_irrep(nu))
                            .sum();
                        if total != det {
                            return Err(fail("f^{λ/μ} = Σ c f^ν", shape.to_string()));
                        }
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(vec![
        format!("suite {}", suite.to_possible_value().expect("named").get_name()),
        format!("n_max {n_max}"),
        format!("checks {checks}"),
        "status ok".to_string(),
    ])
}
