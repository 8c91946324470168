//! Skew shapes, f^{λ/μ}, and the sum of (f^{λ/μ})².

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dimensions::dim_irrep;
use crate::error::{Error, Result};
use crate::extremal::{BoundCheck, BoundReport};
use crate::logspace::{binomial, factorial, falling_range, ln_biguint, ln_factorial};
use crate::lr::lr_expand;
use crate::partition::{enumerate_partitions, partition_count, partition_count_f64, Partition};

/// λ/μ with μ ⊆ λ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::argument(format!("{inner:?} is not contained in {outer:?}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells (i, j), 0-based, with μᵢ ≤ j < λᵢ, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i) as usize..self.outer.part(i) as usize).map(move |j| (i, j)))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// f^{λ/μ} = n!·det[1/((λᵢ−i)−(μⱼ−j))!], evaluated fraction-free.
pub fn skew_syt_count(shape: &SkewShape) -> BigUint {
    let (lambda, mu) = (shape.outer(), shape.inner());
    let ell = lambda.len();
    if ell == 0 {
        return BigUint::one();
    }
    // row i scaled by rᵢ! with rᵢ = λᵢ − i + ℓ, leaving falling factorials
    let mut scale = BigUint::one();
    let mut matrix = vec![vec![BigInt::zero(); ell]; ell];
    for (i, row) in matrix.iter_mut().enumerate() {
        let r = lambda.part(i) as i64 - i as i64 + ell as i64;
        scale *= factorial(r as usize);
        for (j, entry) in row.iter_mut().enumerate() {
            let a = lambda.part(i) as i64 - i as i64 - mu.part(j) as i64 + j as i64;
            if a >= 0 {
                *entry = BigInt::from(falling_range(a as usize + 1, r as usize + 1));
            }
        }
    }
    let det = bareiss_det(matrix);
    let num = BigInt::from(factorial(shape.size())) * det;
    let scale = BigInt::from(scale);
    assert!((&num % &scale).is_zero(), "skew determinant not integral for {shape}");
    let value = num / scale;
    assert!(!value.is_negative(), "negative skew count for {shape}");
    value.to_biguint().expect("nonnegative")
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// f^{λ/μ} = Σ_ν c^λ_{μν} f^ν.
pub fn skew_syt_count_lr(shape: &SkewShape) -> BigUint {
    lr_expand(shape.outer(), shape.inner())
        .coeffs
        .iter()
        .map(|(nu, c)| c * dim_irrep(nu))
        .sum()
}

/// f^{λ/μ} by counting ways to grow μ into λ one cell at a time.
pub fn skew_syt_count_direct(shape: &SkewShape) -> BigUint {
    fn grow(outer: &Partition, current: Vec<u32>, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if current.iter().zip(outer.parts()).all(|(a, b)| a == b) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&current) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..current.len() {
            let addable = current[i] < outer.part(i) && (i == 0 || current[i - 1] > current[i]);
            if addable {
                let mut next = current.clone();
                next[i] += 1;
                total += grow(outer, next, memo);
            }
        }
        memo.insert(current, total.clone());
        total
    }
    let start = (0..shape.outer().len()).map(|i| shape.inner().part(i)).collect();
    grow(shape.outer(), start, &mut HashMap::new())
}

/// Σ_{λ⊢n} Σ_{μ⊢m} (f^{λ/μ})² by coefficient extraction:
/// (n−m)!·[q^m] (1−q)^{−(n−m)} ∏ᵢ 1/(1−qⁱ).
pub fn skew_sum_squares(n: usize, m: usize) -> Result<BigUint> {
    if m > n {
        return Err(Error::argument(format!("m = {m} exceeds n = {n}")));
    }
    let a = n - m;
    let sum: BigUint = if a == 0 {
        partition_count(m)
    } else {
        (0..=m).map(|j| binomial(a + j - 1, j) * partition_count(m - j)).sum()
    };
    Ok(factorial(a) * sum)
}

/// The closed form (n−m)!·Σ_{k=1}^{m} C(n−m+k−1, k−1)·p(m−k) as printed
/// alongside the generating function; it disagrees with the true sum.
pub fn skew_sum_squares_printed(n: usize, m: usize) -> Result<BigUint> {
    if m > n {
        return Err(Error::argument(format!("m = {m} exceeds n = {n}")));
    }
    let sum: BigUint = (1..=m).map(|k| binomial(n - m + k - 1, k - 1) * partition_count(m - k)).sum();
    Ok(factorial(n - m) * sum)
}

/// Σ (f^{λ/μ})² by enumerating all pairs.
pub fn skew_sum_squares_brute(n: usize, m: usize) -> BigUint {
    let all = |k: usize| if k == 0 { vec![Partition::empty()] } else { enumerate_partitions(k) };
    let mut total = BigUint::zero();
    for lambda in all(n) {
        for mu in all(m) {
            if let Ok(shape) = SkewShape::new(lambda.clone(), mu) {
                let f = skew_syt_count(&shape);
                total += &f * &f;
            }
        }
    }
    total
}

/// (n−1)!/(m−1)! ≤ Σ (f^{λ/μ})² ≤ (n!/m!)·p(m), plus the induced sandwich on
/// F(m,n) = max f^{λ/μ}.
pub fn skew_bounds_report(n: usize, m: usize) -> Result<BoundReport> {
    if m == 0 || m > n {
        return Err(Error::argument(format!("need 1 ≤ m ≤ n, got m={m} n={n}")));
    }
    let exact = skew_sum_squares(n, m)?;
    let lower = falling_range(m, n);
    let upper = factorial(n) / factorial(m) * partition_count(m);
    let mut checks = vec![
        BoundCheck::exact("(n−1)!/(m−1)! ≤ Σ(f^{λ/μ})²", &lower, &exact),
        BoundCheck::exact("Σ(f^{λ/μ})² ≤ (n!/m!)·p(m)", &exact, &upper),
    ];
    let printed = skew_sum_squares_printed(n, m)?;
    let mut witnesses = Vec::new();
    if printed != exact {
        witnesses.push(format!("printed closed form gives {printed}, generating function gives {exact}"));
    }
    let fmax = crate::extremal::max_skew_syt(m, n)?;
    let ln_f = ln_biguint(&fmax.value);
    let half = |x: f64| 0.5 * x;
    let f_lower = half(ln_factorial(n - 1) - ln_factorial(m - 1))
        - half(partition_count_f64(m).ln() + partition_count_f64(n).ln());
    let f_upper = half(ln_factorial(n) - ln_factorial(m)) + half(partition_count_f64(m).ln());
    checks.push(BoundCheck::log("F(m,n) lower", f_lower, ln_f));
    checks.push(BoundCheck::log("F(m,n) upper", ln_f, f_upper));
    witnesses.extend(fmax.witnesses.iter().take(1).map(|(l, mu)| format!("F(m,n) at {l}/{mu}")));
    Ok(BoundReport::new(
        format!("skew sum of squares n={n} m={m}"),
        Some(exact),
        ln_biguint(&lower),
        ln_biguint(&upper),
        checks,
        witnesses,
    ))
}
