//! Kronecker coefficients g(λ,μ,ν) = Σ_α z_α⁻¹ χ^λ(α)χ^μ(α)χ^ν(α).

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_table_with, CharTable, DEFAULT_TABLE_CAP};
use crate::dimensions::{dim_irrep, max_dim, merge_opt, MaxRecord};
use crate::error::{check_cap, Error, Result};
use crate::extremal::{BoundCheck, BoundReport};
use crate::logspace::{factorial, ln_biguint, ln_factorial};
use crate::partition::{centralizer_order, enumerate_partitions, meet_join, partition_count, Partition};

/// Default cap on n for [`max_kron`].
pub const DEFAULT_MAX_KRON_CAP: usize = 12;
/// Default cap on n for the brute-force check in [`kron_sum_squares`].
pub const DEFAULT_BRUTE_CAP: usize = 8;

/// Character table of S_n with integer rows and class weights n!/z_α, ready
/// for repeated triple sums.
pub struct KronContext {
    n: usize,
    table: Arc<CharTable>,
    rows: Vec<Vec<i64>>,
    weights: Vec<BigInt>,
    small_weights: Vec<i128>,
    factorial: BigInt,
}

impl KronContext {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("Kronecker coefficients need n ≥ 1"));
        }
        let table = character_table_with(n, cap, None)?;
        let p = table.partitions().len();
        let rows = (0..p)
            .map(|l| {
                table
                    .row(l)
                    .iter()
                    .map(|v| v.to_i64().expect("character values fit in i64 at table sizes"))
                    .collect()
            })
            .collect();
        let fact = BigInt::from(factorial(n));
        let weights: Vec<BigInt> = table
            .partitions()
            .iter()
            .map(|a| &fact / BigInt::from(centralizer_order(a)))
            .collect();
        let small_weights = weights.iter().map(|w| w.to_i128().expect("n!/z fits")).collect();
        Ok(KronContext {
            n,
            table,
            rows,
            weights,
            small_weights,
            factorial: fact,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.table.partitions()
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.table.index_of(p).ok_or_else(|| {
            Error::argument(format!("{p:?} is not a partition of {}", self.n))
        })
    }

    /// g by row indices.
    pub fn g(&self, a: usize, b: usize, c: usize) -> BigUint {
        let (ra, rb, rc) = (&self.rows[a], &self.rows[b], &self.rows[c]);
        let mut acc: Option<i128> = Some(0);
        for k in 0..ra.len() {
            let term = (ra[k] as i128)
                .checked_mul(rb[k] as i128)
                .and_then(|t| t.checked_mul(rc[k] as i128))
                .and_then(|t| t.checked_mul(self.small_weights[k]));
            acc = match (acc, term) {
                (Some(s), Some(t)) => s.checked_add(t),
                _ => None,
            };
            if acc.is_none() {
                break;
            }
        }
        let total = match acc {
            Some(s) => BigInt::from(s),
            None => (0..ra.len())
                .map(|k| BigInt::from(ra[k]) * rb[k] * rc[k] * &self.weights[k])
                .sum(),
        };
        let (q, r) = num_integer::Integer::div_rem(&total, &self.factorial);
        assert!(r.is_zero(), "Kronecker sum not integral");
        q.to_biguint().expect("Kronecker coefficient negative")
    }
}

fn same_size(ps: &[&Partition]) -> Result<usize> {
    let n = ps[0].size();
    if ps.iter().any(|p| p.size() != n) {
        let sizes: Vec<usize> = ps.iter().map(|p| p.size()).collect();
        return Err(Error::argument(format!("partition sizes differ: {sizes:?}")));
    }
    Ok(n)
}

pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = same_size(&[lambda, mu, nu])?;
    let ctx = KronContext::new(n)?;
    Ok(ctx.g(ctx.index_of(lambda)?, ctx.index_of(mu)?, ctx.index_of(nu)?))
}

/// Σ_α z_α and whether it was checked against Σ g² by brute force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KronSquares {
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub sum_z: BigUint,
    pub verified: bool,
}

pub fn kron_sum_squares(n: usize) -> Result<KronSquares> {
    kron_sum_squares_with_cap(n, DEFAULT_BRUTE_CAP)
}

pub fn kron_sum_squares_with_cap(n: usize, brute_cap: usize) -> Result<KronSquares> {
    if n == 0 {
        return Err(Error::argument("n must be positive"));
    }
    let sum_z: BigUint = enumerate_partitions(n).iter().map(centralizer_order).sum();
    if n > brute_cap {
        return Ok(KronSquares { sum_z, verified: false });
    }
    let ctx = KronContext::new(n)?;
    let p = ctx.partitions().len();
    let brute: BigUint = (0..p)
        .into_par_iter()
        .map(|a| {
            let mut s = BigUint::zero();
            for b in 0..p {
                for c in 0..p {
                    let g = ctx.g(a, b, c);
                    s += &g * &g;
                }
            }
            s
        })
        .sum();
    if brute != sum_z {
        return Err(Error::verification("Σ g² = Σ z_α", format!("n={n}")));
    }
    Ok(KronSquares { sum_z, verified: true })
}

/// K(λ,μ) = max_ν g(λ,μ,ν).
pub fn refined_max_kron(lambda: &Partition, mu: &Partition) -> Result<MaxRecord<Partition>> {
    same_size(&[lambda, mu])?;
    let ctx = KronContext::new(lambda.size())?;
    refined_in(&ctx, ctx.index_of(lambda)?, ctx.index_of(mu)?)
}

fn refined_in(ctx: &KronContext, a: usize, b: usize) -> Result<MaxRecord<Partition>> {
    let mut rec: Option<MaxRecord<Partition>> = None;
    for (c, nu) in ctx.partitions().iter().enumerate() {
        let g = ctx.g(a, b, c);
        match rec.as_mut() {
            Some(r) => r.offer(&g, nu.clone()),
            None => rec = Some(MaxRecord::new(g, nu.clone())),
        }
    }
    Ok(rec.expect("nonempty"))
}

/// K(n) = max g over all triples, scanning λ ⪰ μ ⪰ ν and expanding by symmetry.
pub fn max_kron(n: usize) -> Result<MaxRecord<(Partition, Partition, Partition)>> {
    max_kron_with_cap(n, DEFAULT_MAX_KRON_CAP)
}

pub fn max_kron_with_cap(n: usize, cap: usize) -> Result<MaxRecord<(Partition, Partition, Partition)>> {
    check_cap("max_kron", n, cap)?;
    let ctx = KronContext::new(n)?;
    let parts = ctx.partitions();
    let p = parts.len();
    let rec = (0..p)
        .into_par_iter()
        .map(|a| {
            let mut rec: Option<MaxRecord<(Partition, Partition, Partition)>> = None;
            for b in a..p {
                for c in b..p {
                    let g = ctx.g(a, b, c);
                    if let Some(r) = &rec {
                        if g < r.value {
                            continue;
                        }
                    }
                    let mut perms = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
                    perms.sort();
                    perms.dedup();
                    for [x, y, z] in perms {
                        let w = (parts[x].clone(), parts[y].clone(), parts[z].clone());
                        match rec.as_mut() {
                            Some(r) => r.offer(&g, w),
                            None => rec = Some(MaxRecord::new(g.clone(), w)),
                        }
                    }
                }
            }
            rec
        })
        .reduce(|| None, merge_opt);
    Ok(rec.expect("nonempty"))
}

/// √n!/p(n)^{3/2} ≤ K(n), D(n)²/√(p(n)n!) ≤ K(n) ≤ D(n); the asymptotic
/// band √n!e^{−3c₁√n} … √n!e^{−c₂√n} is reported without being asserted.
pub fn kron_bounds_report(n: usize) -> Result<BoundReport> {
    let k = max_kron(n)?;
    let d = max_dim(n)?.value;
    let ln_k = ln_biguint(&k.value);
    let ln_d = ln_biguint(&d);
    let ln_p = ln_biguint(&partition_count(n));
    let ln_fact = ln_factorial(n);
    let lower1 = 0.5 * ln_fact - 1.5 * ln_p;
    let lower2 = 2.0 * ln_d - 0.5 * (ln_p + ln_fact);
    let c = crate::shapes::constants();
    let sqrt_n = (n as f64).sqrt();
    let checks = vec![
        BoundCheck::log("√n!/p(n)^{3/2} ≤ K(n)", lower1, ln_k),
        BoundCheck::log("D(n)²/√(p(n)·n!) ≤ K(n)", lower2, ln_k),
        BoundCheck::exact("K(n) ≤ D(n)", &k.value, &d),
        BoundCheck::log("√n!·e^{−3c₁√n} ≤ K(n)", 0.5 * ln_fact - 3.0 * c.c1 * sqrt_n, ln_k).informational(),
        BoundCheck::log("K(n) ≤ √n!·e^{−c₂√n}", ln_k, 0.5 * ln_fact - c.c2 * sqrt_n).informational(),
    ];
    let witnesses = k.witnesses.iter().take(1).map(|(a, b, c)| format!("({a}; {b}; {c})")).collect();
    Ok(BoundReport::new(
        format!("K({n})"),
        Some(k.value),
        lower1.max(lower2),
        ln_d,
        checks,
        witnesses,
    ))
}

/// f^λf^μ/√(p(n)n!) ≤ K(λ,μ) ≤ min(f^λ, f^μ) and A(λ,μ) ≥ (f^λ f^μ)²/n!.
pub fn refined_kron_bounds(lambda: &Partition, mu: &Partition) -> Result<BoundReport> {
    let n = same_size(&[lambda, mu])?;
    let ctx = KronContext::new(n)?;
    let (a, b) = (ctx.index_of(lambda)?, ctx.index_of(mu)?);
    let rec = refined_in(&ctx, a, b)?;
    let a_sum: BigUint = (0..ctx.partitions().len()).map(|c| ctx.g(a, b, c).pow(2)).sum();
    let (fl, fm) = (dim_irrep(lambda), dim_irrep(mu));
    let ln_k = ln_biguint(&rec.value);
    let lower = ln_biguint(&fl) + ln_biguint(&fm) - 0.5 * (ln_biguint(&partition_count(n)) + ln_factorial(n));
    let upper = fl.clone().min(fm.clone());
    let prod = &fl * &fm;
    let checks = vec![
        BoundCheck::log("f^λf^μ/√(p(n)·n!) ≤ K(λ,μ)", lower, ln_k),
        BoundCheck::exact("K(λ,μ) ≤ min(f^λ,f^μ)", &rec.value, &upper),
        BoundCheck::exact("(f^λf^μ)² ≤ A(λ,μ)·n!", &(&prod * &prod), &(&a_sum * factorial(n))),
    ];
    let witnesses = rec.witnesses.iter().take(1).map(|nu| format!("ν={nu}")).collect();
    Ok(BoundReport::new(
        format!("K({lambda}; {mu})"),
        Some(rec.value),
        lower,
        ln_biguint(&upper),
        checks,
        witnesses,
    ))
}

/// The λ maximizing g(λ,μ,ν)·f^λ (smallest λ on ties) and its g; checks
/// g ≥ f^μf^ν/(p(n)D(n)) and (f^λ)² ≥ f^μf^ν/p(n).
pub fn find_large_kron(mu: &Partition, nu: &Partition) -> Result<(Partition, BigUint)> {
    let n = same_size(&[mu, nu])?;
    let ctx = KronContext::new(n)?;
    let (b, c) = (ctx.index_of(mu)?, ctx.index_of(nu)?);
    let mut best: Option<(BigUint, Partition, BigUint)> = None;
    for (a, lambda) in ctx.partitions().iter().enumerate() {
        let g = ctx.g(a, b, c);
        let score = &g * dim_irrep(lambda);
        let better = match &best {
            None => true,
            Some((s, l, _)) => score > *s || (score == *s && lambda < l),
        };
        if better {
            best = Some((score, lambda.clone(), g));
        }
    }
    let (_, lambda, g) = best.expect("nonempty");
    let target = dim_irrep(mu) * dim_irrep(nu);
    let p = partition_count(n);
    let d = max_dim(n)?.value;
    let fl = dim_irrep(&lambda);
    if &g * &p * &d < target {
        return Err(Error::verification("g ≥ f^μf^ν/(p(n)D(n))", format!("λ={lambda} μ={mu} ν={nu}")));
    }
    if &fl * &fl * &p < target {
        return Err(Error::verification("(f^λ)² ≥ f^μf^ν/p(n)", format!("λ={lambda} μ={mu} ν={nu}")));
    }
    Ok((lambda, g))
}

/// Σ_{ν: f^ν > √n!·e^{−β√n}} g(λ,μ,ν) f^ν / (f^λ f^μ).
pub fn concentration_fraction(lambda: &Partition, mu: &Partition, beta: f64) -> Result<BigRational> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(Error::argument(format!("β must be positive, got {beta}")));
    }
    let n = same_size(&[lambda, mu])?;
    let ctx = KronContext::new(n)?;
    let (a, b) = (ctx.index_of(lambda)?, ctx.index_of(mu)?);
    let threshold = 0.5 * ln_factorial(n) - beta * (n as f64).sqrt();
    let mut num = BigUint::zero();
    for (c, nu) in ctx.partitions().iter().enumerate() {
        let f = dim_irrep(nu);
        if ln_biguint(&f) > threshold {
            num += ctx.g(a, b, c) * f;
        }
    }
    let den = dim_irrep(lambda) * dim_irrep(mu);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// (ℓ(λ) > μ₁ν₁, ℓ(λ) > |μ ∩ ν′|); each forces g = 0. The meet is taken
/// with the conjugate ν′: with ν itself the condition fails, e.g. at
/// g(1³, 3, 1³) = 1.
pub fn vanishing_predicates(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<(bool, bool)> {
    same_size(&[lambda, mu, nu])?;
    let regev = lambda.len() > (mu.first() as usize) * (nu.first() as usize);
    let dvir = lambda.len() > meet_join(mu, &nu.conjugate()).0.size();
    Ok((regev, dvir))
}

/// Tensor square of the staircase δ_k = (k−1, …, 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaxlReport {
    pub k: usize,
    pub n: usize,
    /// ν with g(δ_k, δ_k, ν) = 0.
    pub zeros: Vec<Partition>,
    /// g(δ_k, δ_k, δ_k).
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub self_coefficient: BigUint,
}

pub fn saxl_scan(k: usize) -> Result<SaxlReport> {
    saxl_scan_with_cap(k, DEFAULT_TABLE_CAP)
}

pub fn saxl_scan_with_cap(k: usize, cap: usize) -> Result<SaxlReport> {
    if k < 2 {
        return Err(Error::argument("staircase needs k ≥ 2"));
    }
    let n = k * (k - 1) / 2;
    check_cap("saxl_scan", n, cap)?;
    let ctx = KronContext::with_cap(n, cap)?;
    let delta = Partition::staircase(k as u32);
    let d = ctx.index_of(&delta)?;
    let zeros = ctx
        .partitions()
        .iter()
        .enumerate()
        .filter(|(c, _)| ctx.g(d, d, *c).is_zero())
        .map(|(_, nu)| nu.clone())
        .collect();
    Ok(SaxlReport {
        k,
        n,
        zeros,
        self_coefficient: ctx.g(d, d, d),
    })
}

/// ln g and ½ ln n! for the triple (λ, λ, λ) with λ the smallest D(n) shape.
pub fn plancherel_triple_report(n: usize) -> Result<(Partition, BigUint, f64, f64)> {
    check_cap("plancherel triple report", n, DEFAULT_MAX_KRON_CAP)?;
    let lambda = max_dim(n)?.first().clone();
    let g = kronecker(&lambda, &lambda, &lambda)?;
    let ln_g = ln_biguint(&g);
    Ok((lambda, g, ln_g, 0.5 * ln_factorial(n)))
}
