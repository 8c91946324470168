//! Maxima and scans: C(n,k), C(n), C_ℓ(n), F(m,n), ζ/ρ, stabilization,
//! containment and monotonicity, and log-domain bound reports.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::dimensions::{dim_irrep, max_dim, merge_opt, MaxRecord, WITNESS_LIMIT};
use crate::error::{check_cap, Error, Result};
use crate::logspace::{binomial, factorial, ln_biguint, ln_binomial, ln_factorial, log_le};
use crate::lr::{lr_count, lr_expand_raw};
use crate::partition::{enumerate_partitions, partition_count, subpartitions, subpartitions_of_size, Partition};
use crate::skew::{skew_syt_count, SkewShape};

/// (λ, μ, ν) with |μ| = k.
pub type Triple = (Partition, Partition, Partition);

/// Default cap on n for C(n,k) tables.
pub const DEFAULT_TABLE_N_MAX: usize = 18;
/// Cap on n for C(n,k) tables in stretch mode.
pub const STRETCH_N_MAX: usize = 23;
/// Largest k accepted by [`stabilization_index`].
pub const STABILIZATION_K_CAP: usize = 6;
/// Default cap on n for [`max_skew_syt`].
pub const DEFAULT_SKEW_MAX_CAP: usize = 16;
/// Default cap on n for column scans outside the table range.
pub const COLUMN_N_MAX: usize = 23;

/// One inequality `lhs ≤ rhs`, both sides as natural logs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs_ln: f64,
    pub rhs_ln: f64,
    pub pass: bool,
    /// Informational checks (asymptotic statements) do not affect the report's verdict.
    pub asserted: bool,
}

impl BoundCheck {
    /// Compared in log domain with the shared relative tolerance.
    pub fn log(name: impl Into<String>, lhs_ln: f64, rhs_ln: f64) -> Self {
        BoundCheck {
            name: name.into(),
            lhs_ln,
            rhs_ln,
            pass: log_le(lhs_ln, rhs_ln),
            asserted: true,
        }
    }

    /// Compared exactly.
    pub fn exact(name: impl Into<String>, lhs: &BigUint, rhs: &BigUint) -> Self {
        BoundCheck {
            name: name.into(),
            lhs_ln: ln_biguint(lhs),
            rhs_ln: ln_biguint(rhs),
            pass: lhs <= rhs,
            asserted: true,
        }
    }

    pub fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }
}

/// An exact value compared against bound expressions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub subject: String,
    #[serde(serialize_with = "crate::serde_big::decimal_opt")]
    pub exact_value: Option<BigUint>,
    /// Natural log of the principal lower bound.
    pub lower: f64,
    /// Natural log of the principal upper bound.
    pub upper: f64,
    pub pass: bool,
    pub witnesses: Vec<String>,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn new(
        subject: String,
        exact_value: Option<BigUint>,
        lower: f64,
        upper: f64,
        checks: Vec<BoundCheck>,
        witnesses: Vec<String>,
    ) -> Self {
        let pass = checks.iter().filter(|c| c.asserted).all(|c| c.pass);
        BoundReport {
            subject,
            exact_value,
            lower,
            upper,
            pass,
            witnesses,
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Limits for table scans.
#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    /// Allows tables up to [`STRETCH_N_MAX`].
    pub stretch: bool,
    /// Wall-clock budget for the whole call.
    pub time_budget: Option<Duration>,
}

impl ScanOptions {
    fn n_cap(&self) -> usize {
        if self.stretch {
            STRETCH_N_MAX
        } else {
            DEFAULT_TABLE_N_MAX
        }
    }

    fn deadline(&self) -> Option<Instant> {
        self.time_budget.map(|d| Instant::now() + d)
    }
}

type Row = Arc<Vec<MaxRecord<Triple>>>;
type Column = Arc<MaxRecord<Triple>>;

static ROWS: Mutex<Option<HashMap<usize, Row>>> = Mutex::new(None);
static COLUMNS: Mutex<Option<HashMap<(usize, usize), Column>>> = Mutex::new(None);

fn budget_error(opts: &ScanOptions) -> Error {
    Error::TimeBudget(opts.time_budget.map_or(0, |d| d.as_secs()))
}

fn offer(slot: &mut Option<MaxRecord<Triple>>, c: u64, triple: impl FnOnce() -> Triple) {
    let c = BigUint::from(c);
    match slot {
        Some(r) => {
            if c >= r.value {
                r.offer(&c, triple());
            }
        }
        None => *slot = Some(MaxRecord::new(c, triple())),
    }
}

/// C(n,k) for all k, scanning λ ⊢ n and μ ⊆ λ; memoized per n.
fn scan_row(n: usize, deadline: Option<Instant>) -> Option<Vec<MaxRecord<Triple>>> {
    let expired = AtomicBool::new(false);
    let merged = enumerate_partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let mut slots: Vec<Option<MaxRecord<Triple>>> = vec![None; n + 1];
            if deadline.is_some_and(|d| Instant::now() > d) {
                expired.store(true, Ordering::Relaxed);
                return slots;
            }
            for mu in subpartitions(&lambda) {
                let k = mu.size();
                for (nu, c) in lr_expand_raw(&lambda, &mu) {
                    offer(&mut slots[k], c, || (lambda.clone(), mu.clone(), nu));
                }
            }
            slots
        })
        .reduce(
            || vec![None; n + 1],
            |a, b| a.into_iter().zip(b).map(|(x, y)| merge_opt(x, y)).collect(),
        );
    if expired.load(Ordering::Relaxed) {
        return None;
    }
    Some(merged.into_iter().map(|r| r.expect("every k is attained")).collect())
}

/// Row n of the C(n,k) table.
pub fn cnk_row(n: usize, opts: &ScanOptions) -> Result<Row> {
    if n == 0 {
        return Err(Error::argument("C(n,k) rows start at n = 1"));
    }
    check_cap("C(n,k) table", n, opts.n_cap())?;
    if let Some(r) = ROWS.lock().unwrap_or_else(|e| e.into_inner()).get_or_insert_with(HashMap::new).get(&n) {
        return Ok(r.clone());
    }
    let row = Arc::new(scan_row(n, opts.deadline()).ok_or_else(|| budget_error(opts))?);
    ROWS.lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert(n, row.clone());
    Ok(row)
}

/// C(n,k) for a single k, scanning only μ ⊢ k; reuses a finished row if any.
pub fn cnk_column(n: usize, k: usize, opts: &ScanOptions) -> Result<Arc<MaxRecord<Triple>>> {
    if k > n || n == 0 {
        return Err(Error::argument(format!("need 0 ≤ k ≤ n, n ≥ 1; got n={n} k={k}")));
    }
    check_cap("C(n,k) column", n, COLUMN_N_MAX)?;
    if let Some(row) = ROWS.lock().unwrap_or_else(|e| e.into_inner()).get_or_insert_with(HashMap::new).get(&n) {
        return Ok(Arc::new(row[k].clone()));
    }
    if let Some(c) = COLUMNS
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .get(&(n, k))
    {
        return Ok(c.clone());
    }
    let deadline = opts.deadline();
    let expired = AtomicBool::new(false);
    let rec = enumerate_partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let mut slot = None;
            if deadline.is_some_and(|d| Instant::now() > d) {
                expired.store(true, Ordering::Relaxed);
                return slot;
            }
            for mu in subpartitions_of_size(&lambda, k) {
                for (nu, c) in lr_expand_raw(&lambda, &mu) {
                    offer(&mut slot, c, || (lambda.clone(), mu.clone(), nu));
                }
            }
            slot
        })
        .reduce(|| None, merge_opt);
    if expired.load(Ordering::Relaxed) {
        return Err(budget_error(opts));
    }
    let rec = Arc::new(rec.expect("column attained"));
    COLUMNS
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert((n, k), rec.clone());
    Ok(rec)
}

/// C(n,k) for 1 ≤ n ≤ n_max, 0 ≤ k ≤ n.
#[derive(Debug, Clone)]
pub struct CnkTable {
    pub n_max: usize,
    rows: Vec<Row>,
}

impl CnkTable {
    /// Row n (1-based), indexed by k.
    pub fn row(&self, n: usize) -> &[MaxRecord<Triple>] {
        &self.rows[n - 1]
    }

    pub fn get(&self, n: usize, k: usize) -> &MaxRecord<Triple> {
        &self.rows[n - 1][k]
    }

    pub fn value(&self, n: usize, k: usize) -> u64 {
        let v = &self.get(n, k).value;
        u64::try_from(v).expect("table values are small")
    }
}

pub fn table_cnk(n_max: usize) -> Result<CnkTable> {
    table_cnk_with(n_max, &ScanOptions::default())
}

pub fn table_cnk_with(n_max: usize, opts: &ScanOptions) -> Result<CnkTable> {
    check_cap("C(n,k) table", n_max, opts.n_cap())?;
    let start = Instant::now();
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let remaining = match opts.time_budget {
            Some(b) => Some(b.checked_sub(start.elapsed()).ok_or_else(|| budget_error(opts))?),
            None => None,
        };
        let o = ScanOptions {
            stretch: opts.stretch,
            time_budget: remaining,
        };
        rows.push(cnk_row(n, &o).map_err(|e| match e {
            Error::TimeBudget(_) => budget_error(opts),
            e => e,
        })?);
    }
    Ok(CnkTable { n_max, rows })
}

/// C(n) = max_k C(n,k).
pub fn max_lr(n: usize) -> Result<MaxRecord<Triple>> {
    max_lr_with(n, &ScanOptions::default())
}

pub fn max_lr_with(n: usize, opts: &ScanOptions) -> Result<MaxRecord<Triple>> {
    let row = cnk_row(n, opts)?;
    Ok(row.iter().cloned().fold(None, |acc, r| merge_opt(acc, Some(r))).expect("row nonempty"))
}

/// C_ℓ(n) over λ with exactly ℓ rows; checks C_ℓ(n) ≤ (n+1)^{ℓ²/2},
/// ≤ (n+1)^{(ℓ−1)(ℓ−2)/2} and C(λ) ≤ (λ₁+ℓ)^{ℓ²/2} at the maximizers.
pub fn max_lr_rows(n: usize, ell: usize) -> Result<MaxRecord<Triple>> {
    if ell == 0 || ell > n {
        return Err(Error::argument(format!("need 1 ≤ ℓ ≤ n, got ℓ={ell} n={n}")));
    }
    check_cap("C_ℓ(n)", n, STRETCH_N_MAX)?;
    let rec = enumerate_partitions(n)
        .into_par_iter()
        .filter(|l| l.len() == ell)
        .map(|lambda| {
            let mut slot = None;
            for mu in subpartitions(&lambda) {
                for (nu, c) in lr_expand_raw(&lambda, &mu) {
                    offer(&mut slot, c, || (lambda.clone(), mu.clone(), nu));
                }
            }
            slot
        })
        .reduce(|| None, merge_opt)
        .expect("some λ has ℓ rows");
    let v = &rec.value;
    let e = (ell * ell) as u32;
    let np1 = BigUint::from(n + 1);
    if v * v > np1.pow(e) {
        return Err(Error::verification("C_ℓ(n) ≤ (n+1)^{ℓ²/2}", format!("n={n} ℓ={ell}")));
    }
    let hive_exp = ((ell - 1) * ell.saturating_sub(2) / 2) as u32;
    if *v > np1.pow(hive_exp) {
        return Err(Error::verification("C_ℓ(n) ≤ (n+1)^{(ℓ−1)(ℓ−2)/2}", format!("n={n} ℓ={ell}")));
    }
    for (lambda, _, _) in &rec.witnesses {
        let m = BigUint::from(lambda.first() as usize + ell);
        if v * v > m.pow(e) {
            return Err(Error::verification("C(λ) ≤ (λ₁+ℓ)^{ℓ²/2}", format!("λ={lambda}")));
        }
    }
    Ok(rec)
}

/// ζ(n) = smallest k with C(n,k) = C(n), and ρ(n) = n/2 − ζ(n).
pub fn zeta_rho(n: usize) -> Result<(usize, BigRational)> {
    zeta_rho_with(n, &ScanOptions::default())
}

pub fn zeta_rho_with(n: usize, opts: &ScanOptions) -> Result<(usize, BigRational)> {
    let row = cnk_row(n, opts)?;
    let top = row.iter().map(|r| &r.value).max().expect("row nonempty");
    let zeta = row.iter().position(|r| &r.value == top).expect("max attained");
    let rho = BigRational::new(BigInt::from(n), BigInt::from(2)) - BigRational::from(BigInt::from(zeta));
    Ok((zeta, rho))
}

/// Result of [`stabilization_index`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub k: usize,
    /// D(k).
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub target: BigUint,
    /// Smallest n₀ with C(n,k) = D(k) for every scanned n ≥ n₀.
    pub n0: usize,
    /// n₀ = C(k+1, 2).
    pub matches_binomial: bool,
    /// Largest n scanned.
    pub scanned_to: usize,
    /// C(n,k) for n = k, …, scanned_to.
    #[serde(serialize_with = "crate::serde_big::decimal_vec")]
    pub column: Vec<BigUint>,
    /// (λ, μ, ν) with λ = δ_{k+1}+(r), ν = δ_k+(r) at n = C(k+1,2), and c = f^μ = D(k).
    pub witness: Triple,
}

pub fn stabilization_index(k: usize) -> Result<StabilizationReport> {
    let bin = k * (k + 1) / 2;
    stabilization_index_with(k, bin.max(DEFAULT_TABLE_N_MAX), &ScanOptions::default())
}

pub fn stabilization_index_with(k: usize, scan_to: usize, opts: &ScanOptions) -> Result<StabilizationReport> {
    if k == 0 {
        return Err(Error::argument("stabilization needs k ≥ 1"));
    }
    check_cap("stabilization_index", k, STABILIZATION_K_CAP)?;
    let bin = k * (k + 1) / 2;
    let scan_to = scan_to.max(bin);
    let target = max_dim(k)?.value;
    let mut column = Vec::new();
    for n in k..=scan_to {
        column.push(cnk_column(n, k, opts)?.value.clone());
    }
    let mut n0 = scan_to + 1;
    for (i, v) in column.iter().enumerate().rev() {
        if *v != target {
            break;
        }
        n0 = k + i;
    }
    for (i, v) in column.iter().enumerate() {
        if *v > target {
            return Err(Error::verification("C(n,k) ≤ D(k)", format!("n={} k={k}", k + i)));
        }
    }
    let witness = stabilization_witness(k, bin)?;
    Ok(StabilizationReport {
        k,
        target,
        n0,
        matches_binomial: n0 == bin,
        scanned_to: scan_to,
        column,
        witness,
    })
}

/// λ = δ_{k+1}+(r), ν = δ_k+(r) for r = n − C(k+1,2); λ/ν is k separate cells,
/// so c^λ_{μν} = f^μ, maximal at a D(k) shape μ.
pub fn stabilization_witness(k: usize, n: usize) -> Result<Triple> {
    let bin = k * (k + 1) / 2;
    if n < bin {
        return Err(Error::argument(format!("n = {n} is below C(k+1,2) = {bin}")));
    }
    let r = (n - bin) as u32;
    let lambda = Partition::staircase(k as u32 + 1).add_to_first_row(r);
    let nu = Partition::staircase(k as u32).add_to_first_row(r);
    let best = max_dim(k)?;
    let mu = best.first().clone();
    let c = lr_count(&lambda, &mu, &nu);
    if BigUint::from(c) != best.value || dim_irrep(&mu) != best.value {
        return Err(Error::verification("c^λ_{μν} = f^μ = D(k)", format!("λ={lambda} μ={mu} ν={nu}")));
    }
    Ok((lambda, mu, nu))
}

/// Result of [`containment_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub n: usize,
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub value: BigUint,
    pub maximizers: usize,
    /// A maximizer with μ ⊆ ν or ν ⊆ μ.
    pub flag_witness: Triple,
    /// Maximizers with neither μ ⊆ ν nor ν ⊆ μ.
    pub counterexamples: Vec<Triple>,
}

impl ContainmentReport {
    pub fn conjecture_holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn nested(t: &Triple) -> bool {
    t.1.is_contained_in(&t.2) || t.2.is_contained_in(&t.1)
}

pub fn containment_scan(n: usize) -> Result<ContainmentReport> {
    containment_scan_with(n, &ScanOptions::default())
}

pub fn containment_scan_with(n: usize, opts: &ScanOptions) -> Result<ContainmentReport> {
    let best = max_lr_with(n, opts)?;
    let all: Vec<Triple> = if best.witness_count <= WITNESS_LIMIT {
        best.witnesses.clone()
    } else {
        let value = u64::try_from(&best.value).expect("small");
        enumerate_partitions(n)
            .into_par_iter()
            .flat_map_iter(|lambda| {
                let mut out = Vec::new();
                for mu in subpartitions(&lambda) {
                    for (nu, c) in lr_expand_raw(&lambda, &mu) {
                        if c == value {
                            out.push((lambda.clone(), mu.clone(), nu));
                        }
                    }
                }
                out
            })
            .collect()
    };
    let flag_witness = all
        .iter()
        .find(|t| nested(t))
        .cloned()
        .ok_or_else(|| Error::verification("C(n) attained at a flag", format!("n={n}")))?;
    let counterexamples = all.iter().filter(|t| !nested(t)).cloned().collect();
    Ok(ContainmentReport {
        n,
        value: best.value,
        maximizers: all.len(),
        flag_witness,
        counterexamples,
    })
}

/// A valley C(n,j) > C(n,k) < C(n,l) with j < k < l nearest on each side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Valley {
    pub n: usize,
    pub left: usize,
    pub k: usize,
    pub right: usize,
}

/// Result of [`monotonicity_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub n_max: usize,
    /// C(n) for n = 1..=n_max.
    #[serde(serialize_with = "crate::serde_big::decimal_vec")]
    pub maxima: Vec<BigUint>,
    pub valleys: Vec<Valley>,
}

pub fn monotonicity_scan(n_max: usize) -> Result<MonotonicityReport> {
    monotonicity_scan_with(n_max, &ScanOptions::default())
}

pub fn monotonicity_scan_with(n_max: usize, opts: &ScanOptions) -> Result<MonotonicityReport> {
    let table = table_cnk_with(n_max, opts)?;
    let mut maxima = Vec::new();
    let mut valleys = Vec::new();
    for n in 1..=n_max {
        let row = table.row(n);
        maxima.push(row.iter().map(|r| r.value.clone()).max().expect("nonempty"));
        if n > 1 {
            if maxima[n - 1] < maxima[n - 2] {
                return Err(Error::verification("C(n) ≤ C(n+1)", format!("n={}", n - 1)));
            }
            for k in 0..n {
                if table.get(n, k).value < table.get(n - 1, k).value {
                    return Err(Error::verification("C(n,k) ≤ C(n+1,k)", format!("n={} k={k}", n - 1)));
                }
            }
        }
        for k in 1..n {
            let v = &row[k].value;
            let left = (0..k).rev().find(|&j| row[j].value > *v);
            let right = (k + 1..=n).find(|&l| row[l].value > *v);
            if let (Some(left), Some(right)) = (left, right) {
                valleys.push(Valley { n, left, k, right });
            }
        }
    }
    Ok(MonotonicityReport {
        n_max,
        maxima,
        valleys,
    })
}

fn sized(n: usize) -> Vec<Partition> {
    if n == 0 {
        vec![Partition::empty()]
    } else {
        enumerate_partitions(n)
    }
}

/// The λ maximizing c^λ_{μν}·f^λ (smallest λ on ties) and its c; checks
/// f^λ ≥ √n!/(a²p(n)) and c ≥ √C(n,k)/(a²p(n)) where
/// a = max(1, √k!/f^μ, √(n−k)!/f^ν).
pub fn find_large_lr_from_mu_nu(mu: &Partition, nu: &Partition) -> Result<(Partition, BigUint)> {
    let (k, n) = (mu.size(), mu.size() + nu.size());
    check_cap("find_large_lr_from_mu_nu", n, STRETCH_N_MAX)?;
    let mut best: Option<(BigUint, Partition, u64)> = None;
    for lambda in sized(n) {
        let c = lr_count(&lambda, mu, nu);
        if c == 0 {
            continue;
        }
        let score = BigUint::from(c) * dim_irrep(&lambda);
        let better = match &best {
            None => true,
            Some((s, l, _)) => score > *s || (score == *s && lambda < *l),
        };
        if better {
            best = Some((score, lambda, c));
        }
    }
    let (_, lambda, c) = best.expect("s_μ s_ν is nonzero");
    let ln_a = [
        0.0,
        0.5 * ln_factorial(k) - ln_biguint(&dim_irrep(mu)),
        0.5 * ln_factorial(n - k) - ln_biguint(&dim_irrep(nu)),
    ]
    .into_iter()
    .fold(f64::NEG_INFINITY, f64::max);
    let ln_p = ln_biguint(&partition_count(n));
    let witness = format!("μ={mu} ν={nu} λ={lambda}");
    if !log_le(0.5 * ln_factorial(n) - 2.0 * ln_a - ln_p, ln_biguint(&dim_irrep(&lambda))) {
        return Err(Error::verification("f^λ ≥ √n!/(a²p(n))", witness));
    }
    if !log_le(0.5 * ln_binomial(n, k) - 2.0 * ln_a - ln_p, (c as f64).ln()) {
        return Err(Error::verification("c ≥ √C(n,k)/(a²p(n))", witness));
    }
    Ok((lambda, BigUint::from(c)))
}

/// The (μ, ν) with |μ| = k maximizing c^λ_{μν}·f^μf^ν (smallest pair on
/// ties) and its c; checks the three guarantees with a = max(1, √n!/f^λ).
pub fn find_large_lr_from_lambda(lambda: &Partition, k: usize) -> Result<((Partition, Partition), BigUint)> {
    let n = lambda.size();
    if k > n {
        return Err(Error::argument(format!("k = {k} exceeds |λ| = {n}")));
    }
    check_cap("find_large_lr_from_lambda", n, STRETCH_N_MAX)?;
    let mut best: Option<(BigUint, (Partition, Partition), u64)> = None;
    for mu in subpartitions_of_size(lambda, k) {
        for (nu, c) in lr_expand_raw(lambda, &mu) {
            let score = BigUint::from(c) * dim_irrep(&mu) * dim_irrep(&nu);
            let pair = (mu.clone(), nu);
            let better = match &best {
                None => true,
                Some((s, p, _)) => score > *s || (score == *s && pair < *p),
            };
            if better {
                best = Some((score, pair, c));
            }
        }
    }
    let (_, (mu, nu), c) = best.expect("f^λ > 0");
    let ln_a = (0.5 * ln_factorial(n) - ln_biguint(&dim_irrep(lambda))).max(0.0);
    let ln_pp = ln_biguint(&partition_count(k)) + ln_biguint(&partition_count(n - k));
    let witness = format!("λ={lambda} μ={mu} ν={nu}");
    if !log_le(0.5 * ln_factorial(k) - ln_a - ln_pp, ln_biguint(&dim_irrep(&mu))) {
        return Err(Error::verification("f^μ ≥ √k!/(a p(k)p(n−k))", witness));
    }
    if !log_le(0.5 * ln_factorial(n - k) - ln_a - ln_pp, ln_biguint(&dim_irrep(&nu))) {
        return Err(Error::verification("f^ν ≥ √(n−k)!/(a p(k)p(n−k))", witness));
    }
    if !log_le(0.5 * ln_binomial(n, k) - ln_a - ln_pp, (c as f64).ln()) {
        return Err(Error::verification("c ≥ √C(n,k)/(a p(k)p(n−k))", witness));
    }
    Ok(((mu, nu), BigUint::from(c)))
}

/// F(m,n) = max f^{λ/μ} over λ ⊢ n, μ ⊢ m; witnesses (λ, μ). For m ≥ 1 checks
/// √((n−1)!/(m−1)!)/√(p(m)p(n)) ≤ F(m,n) ≤ √(n!/m!)·√p(m).
pub fn max_skew_syt(m: usize, n: usize) -> Result<MaxRecord<(Partition, Partition)>> {
    if m > n || n == 0 {
        return Err(Error::argument(format!("need m ≤ n and n ≥ 1, got m={m} n={n}")));
    }
    check_cap("max_skew_syt", n, DEFAULT_SKEW_MAX_CAP)?;
    let mus = sized(m);
    let rec = enumerate_partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let mut slot: Option<MaxRecord<(Partition, Partition)>> = None;
            for mu in &mus {
                if let Ok(shape) = SkewShape::new(lambda.clone(), mu.clone()) {
                    let f = skew_syt_count(&shape);
                    match slot.as_mut() {
                        Some(r) => r.offer(&f, (lambda.clone(), mu.clone())),
                        None => slot = Some(MaxRecord::new(f, (lambda.clone(), mu.clone()))),
                    }
                }
            }
            slot
        })
        .reduce(|| None, merge_opt)
        .expect("some μ fits in some λ");
    if m >= 1 {
        let ln_f = ln_biguint(&rec.value);
        let (ln_pm, ln_pn) = (ln_biguint(&partition_count(m)), ln_biguint(&partition_count(n)));
        let lower = 0.5 * (ln_factorial(n - 1) - ln_factorial(m - 1)) - 0.5 * (ln_pm + ln_pn);
        let upper = 0.5 * (ln_factorial(n) - ln_factorial(m)) + 0.5 * ln_pm;
        if !log_le(lower, ln_f) || !log_le(ln_f, upper) {
            return Err(Error::verification("F(m,n) sandwich", format!("m={m} n={n}")));
        }
    }
    Ok(rec)
}

/// Bounds on C(n,k): √C(n,k)/√(p(k)p(n−k)p(n)) ≤ C(n,k) ≤ √C(n,k), the cap
/// C(n,k) ≤ D(k) ≤ √k!, and the asymptotic band with d reported only.
pub fn lr_bounds_report(n: usize, k: usize) -> Result<BoundReport> {
    lr_bounds_report_with(n, k, &ScanOptions::default())
}

pub fn lr_bounds_report_with(n: usize, k: usize, opts: &ScanOptions) -> Result<BoundReport> {
    let rec = cnk_column(n, k, opts)?;
    lr_bounds_for(n, k, &rec.value, rec.witnesses.first())
}

/// [`lr_bounds_report`] for a supplied exact value of C(n,k).
pub fn lr_bounds_for(n: usize, k: usize, exact: &BigUint, witness: Option<&Triple>) -> Result<BoundReport> {
    if k > n {
        return Err(Error::argument(format!("k = {k} exceeds n = {n}")));
    }
    let ln_c = ln_biguint(exact);
    let ln_p = |m: usize| ln_biguint(&partition_count(m));
    let half_binom = 0.5 * ln_biguint(&binomial(n, k));
    let lower = half_binom - 0.5 * (ln_p(k) + ln_p(n - k) + ln_p(n));
    let d = if k == 0 { BigUint::one() } else { max_dim(k)?.value };
    let d_const = crate::shapes::constants().d;
    let checks = vec![
        BoundCheck::log("√C(n,k)/√(p(k)p(n−k)p(n)) ≤ C(n,k)", lower, ln_c),
        BoundCheck::log("C(n,k) ≤ √C(n,k)", ln_c, half_binom),
        BoundCheck::exact("C(n,k) ≤ D(k)", exact, &d),
        BoundCheck::exact("D(k)² ≤ k!", &(&d * &d), &factorial(k)),
        BoundCheck::log("√C(n,k)·e^{−d√n} ≤ C(n,k)", half_binom - d_const * (n as f64).sqrt(), ln_c)
            .informational(),
    ];
    let witnesses = witness.into_iter().map(|(l, m, v)| format!("({l}; {m}; {v})")).collect();
    Ok(BoundReport::new(
        format!("C({n},{k})"),
        Some(exact.clone()),
        lower,
        half_binom,
        checks,
        witnesses,
    ))
}
