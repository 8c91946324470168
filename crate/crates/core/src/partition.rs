//! Integer partitions: the index type for every other module.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. The
//! derived order is ascending lexicographic comparison of part sequences,
//! which is the tie-break order used by every argmax in the crate; the
//! enumeration order returned by [`enumerate_partitions`] is the reverse
//! (descending lexicographic).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact partition count p(n).
pub type PartitionCount = BigUint;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: usize,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::argument(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::argument(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Drops trailing zeros; the caller guarantees weak decrease.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().map(|&p| p as usize).sum();
        Partition { parts, size }
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition (n).
    pub fn row(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition (1^n).
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// The staircase (k-1, k-2, ..., 1).
    pub fn staircase(k: u32) -> Self {
        Self::from_sorted((1..k).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// λ₁, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first() as usize;
        let mut conj = vec![0u32; first];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition {
            parts: conj,
            size: self.size,
        }
    }

    /// μ ⊆ λ, tested as `mu.is_contained_in(lambda)`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicity m_i of the part `i`.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Cells (i, j), 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// λ + 1: adds one cell to the first row.
    pub fn add_to_first_row(&self, amount: u32) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(amount);
        } else {
            parts[0] += amount;
        }
        Partition::from_sorted(parts)
    }

    /// Adds `other` to `self` part by part (λ + μ as vectors).
    pub fn add_rows(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition::from_sorted((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Canonical text with exponent notation for repeated parts, e.g. `4^2,1^3`.
    pub fn to_exponent_string(&self) -> String {
        if self.is_empty() {
            return "[]".to_string();
        }
        self.multiplicities()
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,2,1`, `[3,2,1]`, `4^2,1^3` and `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let part: u32 = base.parse().map_err(|_| err("part is not a positive integer"))?;
            let exp: usize = exp.parse().map_err(|_| err("exponent is not an integer"))?;
            if part == 0 {
                return Err(err("zero part"));
            }
            parts.extend(std::iter::repeat_n(part, exp));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition::from_sorted(parts))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n as u32, n as u32, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// All μ ⊆ λ, in descending lexicographic order.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_subpartitions(outer, None, 0, u32::MAX, &mut current, &mut out);
    out
}

/// All μ ⊆ λ with |μ| = k, in descending lexicographic order.
pub fn subpartitions_of_size(outer: &Partition, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_subpartitions(outer, Some(k as u32), 0, u32::MAX, &mut current, &mut out);
    out
}

fn fill_subpartitions(
    outer: &Partition,
    remaining: Option<u32>,
    row: usize,
    cap: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    let bound = outer.part(row).min(cap);
    match remaining {
        Some(0) => {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        Some(r) => {
            // rows below cannot hold what is left
            let room: u32 = (row..outer.len()).map(|i| outer.part(i).min(cap)).sum();
            if room < r {
                return;
            }
        }
        None => {}
    }
    if bound == 0 {
        if remaining.is_none() {
            out.push(Partition::from_sorted(current.clone()));
        }
        return;
    }
    let top = match remaining {
        Some(r) => bound.min(r),
        None => bound,
    };
    for p in (1..=top).rev() {
        current.push(p);
        fill_subpartitions(outer, remaining.map(|r| r - p), row + 1, p, current, out);
        current.pop();
    }
    if remaining.is_none() {
        out.push(Partition::from_sorted(current.clone()));
    }
}

static PARTITION_COUNTS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// p(n) by the pentagonal-number recurrence, memoized process-wide.
pub fn partition_count(n: usize) -> PartitionCount {
    let mut table = PARTITION_COUNTS.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let m = table.len() as i64;
        let mut sum = BigInt::zero();
        for k in 1i64.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = BigInt::from(table[(m - g1) as usize].clone());
            if g2 <= m {
                term += BigInt::from(table[(m - g2) as usize].clone());
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        debug_assert!(!sum.is_negative());
        table.push(sum.to_biguint().expect("p(n) is nonnegative"));
    }
    table[n].clone()
}

/// p(n) as a float, for log-domain bound evaluations.
pub fn partition_count_f64(n: usize) -> f64 {
    partition_count(n).to_f64().unwrap_or(f64::INFINITY)
}

/// z_α = ∏ i^{m_i} m_i!, the centralizer order of the class α.
pub fn centralizer_order(alpha: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in alpha.multiplicities() {
        for t in 1..=mult {
            z *= BigUint::from(part) * BigUint::from(t);
        }
    }
    z
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Pointwise minimum and maximum (μ ∩ ν, μ ∪ ν).
pub fn meet_join(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    let len = mu.len().max(nu.len());
    let meet = (0..len).map(|i| mu.part(i).min(nu.part(i))).collect();
    let join = (0..len).map(|i| mu.part(i).max(nu.part(i))).collect();
    (Partition::from_sorted(meet), Partition::from_sorted(join))
}

/// Sorted concatenation: multiplicities add.
pub fn multiset_union(alpha: &Partition, beta: &Partition) -> Partition {
    let mut parts = alpha.parts.clone();
    parts.extend_from_slice(&beta.parts);
    Partition::from_unsorted(parts)
}

/// True iff μ ⊆ λ.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.is_contained_in(lambda)
}

/// (λ₃, λ₄, …) ∪ 1^{λ₁+λ₂}.
pub fn hat_transform(lambda: &Partition) -> Partition {
    let tail = Partition::from_sorted(lambda.parts.iter().skip(2).copied().collect());
    let ones = Partition::column(lambda.part(0) + lambda.part(1));
    multiset_union(&tail, &ones)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent oracle: all weakly decreasing sequences by brute recursion on the last part.
    fn brute_partitions(n: u32) -> Vec<Vec<u32>> {
        fn go(n: u32, min: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for last in min..=n {
                for mut rest in go(n - last, last) {
                    rest.push(last);
                    out.push(rest);
                }
            }
            out
        }
        let mut v: Vec<Vec<u32>> = go(n, 1)
            .into_iter()
            .map(|mut s| {
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        v.sort();
        v.reverse();
        v
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(6).len(), 11);
        for n in 0..=12 {
            let got: Vec<Vec<u32>> = enumerate_partitions(n).iter().map(|x| x.parts().to_vec()).collect();
            assert_eq!(got, brute_partitions(n as u32));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(1), BigUint::from(1u32));
        assert_eq!(partition_count(6), BigUint::from(11u32));
        assert_eq!(partition_count(20), BigUint::from(627u32));
        for n in 0..=25 {
            assert_eq!(partition_count(n), BigUint::from(enumerate_partitions(n).len()));
        }
        assert_eq!(partition_count(100).to_string(), "190569292");
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p("1,1,1")), BigUint::from(6u32));
        assert_eq!(centralizer_order(&p("3")), BigUint::from(3u32));
        assert_eq!(centralizer_order(&p("2,1")), BigUint::from(2u32));
        assert_eq!(centralizer_order(&p("2,2,1")), BigUint::from(8u32));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn meet_and_join() {
        assert_eq!(meet_join(&p("3,1"), &p("2,2")), (p("2,1"), p("3,2")));
        assert_eq!(meet_join(&p("2,1"), &p("2,1")), (p("2,1"), p("2,1")));
        assert_eq!(meet_join(&p("3"), &p("1,1,1")), (p("1"), p("3,1,1")));
    }

    #[test]
    fn unions_and_containment() {
        assert_eq!(multiset_union(&p("2,1"), &p("2")), p("2,2,1"));
        assert_eq!(multiset_union(&p("[]"), &p("3,1")), p("3,1"));
        assert_eq!(multiset_union(&p("1"), &p("1")), p("1,1"));
        assert!(contains(&p("1"), &p("2,1")));
        assert!(!contains(&p("2,2"), &p("3,1")));
        assert!(contains(&Partition::empty(), &p("4,2")));
    }

    #[test]
    fn hat() {
        assert_eq!(hat_transform(&p("3,2,1")), p("1^6"));
        assert_eq!(hat_transform(&p("5,4,3,2")), p("3,2,1^9"));
        assert_eq!(hat_transform(&p("1")), p("1"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4^2,1^3").parts(), &[4, 4, 1, 1, 1]);
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("[3, 1]"), p("3,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("4^2,1^3").to_exponent_string(), "4^2,1^3");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn subpartition_lists() {
        let lam = p("3,2,1");
        let all = subpartitions(&lam);
        let brute: Vec<Partition> = (0..=6)
            .flat_map(enumerate_partitions)
            .filter(|m| m.is_contained_in(&lam))
            .collect();
        assert_eq!(all.len(), brute.len());
        let mut sorted = all.clone();
        sorted.sort();
        sorted.reverse();
        assert_eq!(sorted, all);
        for k in 0..=6 {
            let by_size = subpartitions_of_size(&lam, k);
            let expect: Vec<Partition> = enumerate_partitions(k)
                .into_iter()
                .filter(|m| m.is_contained_in(&lam))
                .collect();
            assert_eq!(by_size, expect);
        }
    }

    #[test]
    fn log_concavity_of_p() {
        assert!(partition_count(25).pow(2) < partition_count(24) * partition_count(26));
        for n in 26..=200 {
            assert!(partition_count(n).pow(2) >= partition_count(n - 1) * partition_count(n + 1), "n={n}");
        }
        for n in 3..=100 {
            for k in 2..n {
                assert!(
                    partition_count(n).pow(2) >= partition_count(n - k) * partition_count(n + k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn hardy_ramanujan_band() {
        for n in (200..=1000).step_by(10) {
            let nf = n as f64;
            let log_approx = std::f64::consts::PI * (2.0 * nf / 3.0).sqrt() - (4.0 * nf * 3f64.sqrt()).ln();
            let ratio = (crate::logspace::ln_biguint(&partition_count(n)) - log_approx).exp();
            assert!((0.85..=1.0).contains(&ratio), "n={n} ratio={ratio}");
        }
    }

    #[test]
    fn structural_invariants() {
        for n in 0..=25 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
        for n in 0..=30 {
            for lam in enumerate_partitions(n) {
                assert_eq!(hat_transform(&lam).size(), n);
            }
        }
    }

    #[test]
    fn meet_join_sizes() {
        let all: Vec<Partition> = (0..=12).flat_map(enumerate_partitions).collect();
        for mu in &all {
            for nu in &all {
                let (m, j) = meet_join(mu, nu);
                assert_eq!(m.size() + j.size(), mu.size() + nu.size());
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn text_roundtrip(parts in proptest::collection::vec(1u32..9, 0..8)) {
            let lam = Partition::from_unsorted(parts);
            proptest::prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
            proptest::prop_assert_eq!(lam.to_exponent_string().parse::<Partition>().unwrap(), lam);
        }
    }
}
