//! Hook lengths, f^λ, hook-content evaluations and the maximal dimension D(n).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::logspace::{factorial, ln_biguint, ln_factorial, log_le};
use crate::partition::{enumerate_partitions, Partition};
use crate::skew::SkewShape;

/// Default cap on n for [`max_dim`].
pub const DEFAULT_MAX_DIM_CAP: usize = 50;

/// Attaining tuples kept by a [`MaxRecord`]; the rest are only counted.
pub const WITNESS_LIMIT: usize = 64;

/// Hook lengths of every cell, row-major, 0-based cell coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    shape: Partition,
    hooks: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Hook length at 0-based cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        self.hooks[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.hooks
    }

    /// All hook lengths in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.hooks.iter().flatten().copied()
    }
}

pub fn hook_grid(lambda: &Partition) -> HookGrid {
    let conj = lambda.conjugate();
    let hooks = (0..lambda.len())
        .map(|i| {
            (0..lambda.part(i) as usize)
                .map(|j| lambda.part(i) + conj.part(j) - i as u32 - j as u32 - 1)
                .collect()
        })
        .collect();
    HookGrid {
        shape: lambda.clone(),
        hooks,
    }
}

/// f^λ by the hook-length formula.
pub fn dim_irrep(lambda: &Partition) -> BigUint {
    let hooks = hook_grid(lambda)
        .iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    let (q, r) = num_integer::Integer::div_rem(&factorial(lambda.size()), &hooks);
    assert!(r.is_zero(), "hook product does not divide n! for {lambda:?}");
    q
}

/// s_λ(1^m) by the hook-content formula; zero when λ has more than m rows.
pub fn schur_ones(lambda: &Partition, m: usize) -> BigUint {
    if lambda.len() > m {
        return BigUint::zero();
    }
    let grid = hook_grid(lambda);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, row) in grid.rows().iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            num *= BigUint::from(m + j - i);
            den *= BigUint::from(h);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "hook-content product not integral for {lambda:?}");
    q
}

/// n!·∏_{cells of λ/μ} 1/h(λ), a lower bound for f^{λ/μ}.
pub fn naruse_lower_bound(shape: &SkewShape) -> BigRational {
    let grid = hook_grid(shape.outer());
    let den = shape
        .cells()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, j)| acc * BigInt::from(grid.hook(i, j)));
    BigRational::new(BigInt::from(factorial(shape.size())), den)
}

/// An extremal value with its lexicographically smallest attaining arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxRecord<W> {
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub value: BigUint,
    /// At most [`WITNESS_LIMIT`] attaining tuples, ascending.
    pub witnesses: Vec<W>,
    /// Number of attaining tuples, including those not retained.
    pub witness_count: usize,
}

impl<W: Ord + Clone> MaxRecord<W> {
    pub fn new(value: BigUint, witness: W) -> Self {
        MaxRecord {
            value,
            witnesses: vec![witness],
            witness_count: 1,
        }
    }

    /// Considers one candidate.
    pub fn offer(&mut self, value: &BigUint, witness: W) {
        use std::cmp::Ordering::*;
        match value.cmp(&self.value) {
            Less => {}
            Greater => {
                self.value = value.clone();
                self.witnesses = vec![witness];
                self.witness_count = 1;
            }
            Equal => {
                self.witness_count += 1;
                insert_capped(&mut self.witnesses, witness);
            }
        }
    }

    /// Combines two records over disjoint candidate sets.
    pub fn merge(mut self, other: Self) -> Self {
        use std::cmp::Ordering::*;
        match other.value.cmp(&self.value) {
            Less => self,
            Greater => other,
            Equal => {
                self.witness_count += other.witness_count;
                for w in other.witnesses {
                    insert_capped(&mut self.witnesses, w);
                }
                self
            }
        }
    }

    /// Smallest attaining tuple.
    pub fn first(&self) -> &W {
        &self.witnesses[0]
    }

    pub fn map_witnesses<V: Ord + Clone>(self, f: impl Fn(W) -> V) -> MaxRecord<V> {
        let mut witnesses: Vec<V> = self.witnesses.into_iter().map(f).collect();
        witnesses.sort();
        MaxRecord {
            value: self.value,
            witnesses,
            witness_count: self.witness_count,
        }
    }
}

fn insert_capped<W: Ord>(list: &mut Vec<W>, w: W) {
    match list.binary_search(&w) {
        Ok(_) => {}
        Err(pos) => {
            if pos < WITNESS_LIMIT {
                list.insert(pos, w);
                list.truncate(WITNESS_LIMIT);
            }
        }
    }
}

/// Merges optional records, for parallel reductions.
pub(crate) fn merge_opt<W: Ord + Clone>(a: Option<MaxRecord<W>>, b: Option<MaxRecord<W>>) -> Option<MaxRecord<W>> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.merge(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// D(n) = max_λ f^λ with default cap.
pub fn max_dim(n: usize) -> Result<MaxRecord<Partition>> {
    max_dim_with_cap(n, DEFAULT_MAX_DIM_CAP)
}

pub fn max_dim_with_cap(n: usize, cap: usize) -> Result<MaxRecord<Partition>> {
    if n == 0 {
        return Err(Error::argument("max_dim requires n ≥ 1"));
    }
    check_cap("max_dim", n, cap)?;
    Ok(enumerate_partitions(n)
        .into_par_iter()
        .map(|l| Some(MaxRecord::new(dim_irrep(&l), l)))
        .reduce(|| None, merge_opt)
        .expect("n ≥ 1 has partitions"))
}

/// ln f^λ ≥ ½ ln n! − a√n, in log domain.
pub fn is_plancherel(lambda: &Partition, a: f64) -> Result<bool> {
    if a.is_nan() || a <= 0.0 {
        return Err(Error::argument(format!("Plancherel constant must be positive, got {a}")));
    }
    let n = lambda.size();
    let threshold = 0.5 * ln_factorial(n) - a * (n as f64).sqrt();
    Ok(log_le(threshold, ln_biguint(&dim_irrep(lambda))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_count;
    use std::collections::HashMap;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Standard Young tableaux counted by removing corners.
    fn syt_count(lambda: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if lambda.size() <= 1 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(lambda) {
            return v.clone();
        }
        let parts = lambda.parts();
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                let mut next = parts.to_vec();
                next[i] -= 1;
                total += syt_count(&Partition::from_sorted(next), memo);
            }
        }
        memo.insert(lambda.clone(), total.clone());
        total
    }

    #[test]
    fn hooks() {
        let g = hook_grid(&p("2,2"));
        assert_eq!(g.rows(), &[vec![3, 2], vec![2, 1]]);
        assert_eq!(hook_grid(&p("1")).rows(), &[vec![1]]);
        assert_eq!(hook_grid(&p("3")).rows(), &[vec![3, 2, 1]]);
        for n in 1..=10 {
            for l in enumerate_partitions(n) {
                let mut a: Vec<u32> = hook_grid(&l).iter().collect();
                let mut b: Vec<u32> = hook_grid(&l.conjugate()).iter().collect();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn dimensions_match_tableau_count() {
        assert_eq!(dim_irrep(&p("3,2")), BigUint::from(5u32));
        assert_eq!(dim_irrep(&p("2,1")), BigUint::from(2u32));
        assert_eq!(dim_irrep(&Partition::row(9)), BigUint::one());
        let mut memo = HashMap::new();
        for n in 1..=12 {
            for l in enumerate_partitions(n) {
                assert_eq!(dim_irrep(&l), syt_count(&l, &mut memo), "{l:?}");
            }
        }
    }

    #[test]
    fn conjugate_dimension_and_burnside() {
        for n in 1..=20 {
            for l in enumerate_partitions(n) {
                assert_eq!(dim_irrep(&l), dim_irrep(&l.conjugate()));
            }
        }
        for n in 1..=14 {
            let s: BigUint = enumerate_partitions(n).iter().map(|l| dim_irrep(l).pow(2)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    /// Semistandard tableaux with entries ≤ m, filled row by row.
    fn ssyt_count(lambda: &Partition, m: u32) -> u64 {
        fn go(m: u32, cells: &[(usize, usize)], k: usize, fill: &mut Vec<Vec<u32>>) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { fill[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { fill[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=m {
                fill[i][j] = v;
                total += go(m, cells, k + 1, fill);
            }
            total
        }
        let cells: Vec<(usize, usize)> = lambda.cells().collect();
        let mut fill: Vec<Vec<u32>> = lambda.parts().iter().map(|&r| vec![0; r as usize]).collect();
        go(m, &cells, 0, &mut fill)
    }

    #[test]
    fn hook_content() {
        assert_eq!(schur_ones(&p("2,1"), 2), BigUint::from(2u32));
        assert_eq!(schur_ones(&p("1,1,1"), 2), BigUint::zero());
        assert_eq!(schur_ones(&Partition::row(7), 1), BigUint::one());
        for n in 1..=6 {
            for l in enumerate_partitions(n) {
                for m in 1..=4 {
                    assert_eq!(schur_ones(&l, m), BigUint::from(ssyt_count(&l, m as u32)), "{l:?} m={m}");
                }
            }
        }
    }

    #[test]
    fn naruse() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let s = |a: &str, b: &str| SkewShape::new(p(a), p(b)).unwrap();
        assert_eq!(naruse_lower_bound(&s("2,2", "1")), r(3, 2));
        assert_eq!(naruse_lower_bound(&s("2,2", "[]")), r(2, 1));
        assert_eq!(naruse_lower_bound(&s("1", "1")), r(1, 1));
        for n in 1..=15 {
            for l in enumerate_partitions(n) {
                let straight = SkewShape::new(l.clone(), Partition::empty()).unwrap();
                assert_eq!(naruse_lower_bound(&straight), BigRational::from(BigInt::from(dim_irrep(&l))));
            }
        }
    }

    #[test]
    fn maximal_dimension() {
        let printed: [u64; 16] = [
            1, 1, 2, 3, 6, 16, 35, 90, 216, 768, 2310, 7700, 21450, 69498, 292864, 1153152,
        ];
        for (i, &d) in printed.iter().enumerate() {
            assert_eq!(max_dim(i + 1).unwrap().value, BigUint::from(d), "n={}", i + 1);
        }
        assert_eq!(max_dim(1).unwrap().witnesses, vec![p("1")]);
        let d3 = max_dim(3).unwrap();
        assert_eq!(d3.witnesses, vec![p("2,1")]);
        assert!(max_dim(0).is_err());
        assert!(matches!(max_dim(51), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn vershik_kerov_lower_bound() {
        let c1 = std::f64::consts::PI / 6f64.sqrt();
        for n in 5..=16 {
            let d = max_dim(n).unwrap().value;
            assert!(log_le(0.5 * ln_factorial(n) - c1 * (n as f64).sqrt(), ln_biguint(&d)), "n={n}");
        }
    }

    #[test]
    fn plancherel_predicate() {
        assert!(!is_plancherel(&Partition::column(25), 2.0).unwrap());
        let top = max_dim(16).unwrap();
        assert!(is_plancherel(top.first(), 1.2825).unwrap());
        assert!(!is_plancherel(&Partition::row(100), 1.0).unwrap());
        assert!(is_plancherel(&p("1"), 1.0).unwrap());
        assert!(is_plancherel(&p("1"), 0.0).is_err());
    }

    #[test]
    fn record_keeps_smallest_witnesses() {
        let mut rec = MaxRecord::new(BigUint::from(1u32), 500u32);
        for w in (0..200u32).rev() {
            rec.offer(&BigUint::from(1u32), w);
        }
        assert_eq!(rec.witnesses.len(), WITNESS_LIMIT);
        assert_eq!(rec.witnesses[0], 0);
        assert_eq!(rec.witness_count, 201);
        rec.offer(&BigUint::from(2u32), 999);
        assert_eq!(rec.witnesses, vec![999]);
        let merged = rec.clone().merge(MaxRecord::new(BigUint::from(2u32), 3));
        assert_eq!(merged.witnesses, vec![3, 999]);
        assert_eq!(merged.witness_count, 2);
        assert_eq!(partition_count(5), BigUint::from(7u32));
    }
}
