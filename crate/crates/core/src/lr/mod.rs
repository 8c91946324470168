//! Littlewood–Richardson coefficients: the tableau rule, hives, and the
//! identities and bounds built on them.

mod hive;
mod rule;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dimensions::{dim_irrep, MaxRecord};
use crate::error::{check_cap, Error, Result};
use crate::logspace::binomial;
use crate::partition::{
    centralizer_order, enumerate_partitions, meet_join, multiset_union, partition_count, subpartitions,
    Partition,
};

/// Default cap on n for [`verify_lr_identities`].
pub const DEFAULT_IDENTITY_CAP: usize = 10;
/// Default cap on |μ|, |ν| for [`verify_skew_cauchy_square`].
pub const DEFAULT_CAUCHY_CAP: usize = 8;
/// [`hook_content_bound`] also checks C(λ)² against the bound up to this size.
pub const HOOK_CONTENT_CHECK_CAP: usize = 12;

/// Nonzero c^λ_{μν} for fixed λ, μ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LRExpansion {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(serialize_with = "crate::serde_big::decimal_map")]
    pub coeffs: BTreeMap<Partition, BigUint>,
}

impl LRExpansion {
    pub fn get(&self, nu: &Partition) -> BigUint {
        self.coeffs.get(nu).cloned().unwrap_or_default()
    }
}

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::argument(format!(
            "c^{lambda:?}_{{{mu:?},{nu:?}}}: |μ|+|ν| = {} but |λ| = {}",
            mu.size() + nu.size(),
            lambda.size()
        )));
    }
    Ok(())
}

/// c^λ_{μν} as a `u64`, sizes assumed consistent.
pub(crate) fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.is_contained_in(lambda) {
        return 0;
    }
    match rule::LrSearch::new(lambda, mu, Some(nu.parts())) {
        Some(mut s) => s.count(),
        None => 0,
    }
}

/// Nonzero (ν, c^λ_{μν}) pairs, ascending in ν; empty when μ ⊄ λ.
pub(crate) fn lr_expand_raw(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    match rule::LrSearch::new(lambda, mu, None) {
        Some(mut s) => {
            let mut v = s.expand();
            v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            v
        }
        None => Vec::new(),
    }
}

/// c^λ_{μν} by counting LR tableaux of shape λ/μ and content ν.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    check_sizes(lambda, mu, nu)?;
    Ok(BigUint::from(lr_count(lambda, mu, nu)))
}

/// c^λ_{μν} by counting hives.
pub fn lr_coefficient_hive(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    check_sizes(lambda, mu, nu)?;
    Ok(BigUint::from(hive::count_hives(lambda, mu, nu)))
}

pub fn lr_expand(lambda: &Partition, mu: &Partition) -> LRExpansion {
    LRExpansion {
        lambda: lambda.clone(),
        mu: mu.clone(),
        coeffs: lr_expand_raw(lambda, mu)
            .into_iter()
            .map(|(nu, c)| (nu, BigUint::from(c)))
            .collect(),
    }
}

/// Result of [`verify_lr_identities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrIdentityReport {
    pub n: usize,
    pub k: usize,
    /// Σ_{λ,μ,ν} c².
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub sum_squares: BigUint,
    /// Σ_{α⊢k, β⊢n−k} ∏ᵢ C(mᵢ(α)+mᵢ(β), mᵢ(α)).
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub multiplicity_form: BigUint,
    /// Σ_{α⊢k, β⊢n−k} z_{α∪β}/(z_α z_β).
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub centralizer_form: BigUint,
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub binomial: BigUint,
    /// C(n,k)·p(n).
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub upper: BigUint,
    /// Number of individual identities and inequalities checked.
    pub checks: usize,
}

/// All c^λ_{μν} with λ ⊢ n, μ ⊢ k, as a map keyed by (λ, μ, ν).
fn all_coefficients(n: usize, k: usize) -> BTreeMap<(Partition, Partition, Partition), u64> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        for mu in crate::partition::subpartitions_of_size(&lambda, k) {
            for (nu, c) in lr_expand_raw(&lambda, &mu) {
                out.insert((lambda.clone(), mu.clone(), nu), c);
            }
        }
    }
    out
}

fn sized(n: usize) -> Vec<Partition> {
    if n == 0 {
        vec![Partition::empty()]
    } else {
        enumerate_partitions(n)
    }
}

/// Checks both sum identities for f, the Σc² closed forms and the Σc²
/// sandwiches at (n, k) by full enumeration.
pub fn verify_lr_identities(n: usize, k: usize) -> Result<LrIdentityReport> {
    verify_lr_identities_with_cap(n, k, DEFAULT_IDENTITY_CAP)
}

pub fn verify_lr_identities_with_cap(n: usize, k: usize, cap: usize) -> Result<LrIdentityReport> {
    check_cap("lr identities", n, cap)?;
    if k > n {
        return Err(Error::argument(format!("k = {k} exceeds n = {n}")));
    }
    let coeffs = all_coefficients(n, k);
    let lambdas = sized(n);
    let mus = sized(k);
    let nus = sized(n - k);
    let binom = binomial(n, k);
    let dims: HashMap<Partition, BigUint> = lambdas
        .iter()
        .chain(&mus)
        .chain(&nus)
        .map(|p| (p.clone(), dim_irrep(p)))
        .collect();
    let mut checks = 0usize;

    let mut by_lambda: HashMap<&Partition, (BigUint, BigUint)> = HashMap::new();
    let mut by_pair: HashMap<(&Partition, &Partition), (BigUint, BigUint)> = HashMap::new();
    let mut sum_squares = BigUint::zero();
    for ((lambda, mu, nu), &c) in &coeffs {
        let c = BigUint::from(c);
        let sq = &c * &c;
        sum_squares += &sq;
        let e = by_lambda.entry(lambda).or_default();
        e.0 += &c * &dims[mu] * &dims[nu];
        e.1 += &sq;
        let e = by_pair.entry((mu, nu)).or_default();
        e.0 += &c * &dims[lambda];
        e.1 += &sq;
    }
    for lambda in &lambdas {
        let (weighted, sq) = by_lambda.remove(lambda).unwrap_or_default();
        if weighted != dims[lambda] {
            return Err(Error::verification("Σ_{μ,ν} c f^μ f^ν = f^λ", format!("λ={lambda}")));
        }
        if sq > binom {
            return Err(Error::verification("Σ_{μ,ν} c² ≤ C(n,k)", format!("λ={lambda}")));
        }
        checks += 2;
    }
    for mu in &mus {
        for nu in &nus {
            let (weighted, sq) = by_pair.remove(&(mu, nu)).unwrap_or_default();
            if weighted != &binom * &dims[mu] * &dims[nu] {
                return Err(Error::verification(
                    "Σ_λ c f^λ = C(n,k) f^μ f^ν",
                    format!("μ={mu} ν={nu}"),
                ));
            }
            if sq > binom {
                return Err(Error::verification("Σ_λ c² ≤ C(n,k)", format!("μ={mu} ν={nu}")));
            }
            checks += 2;
        }
    }

    let mut multiplicity_form = BigUint::zero();
    let mut centralizer_form = BigUint::zero();
    for alpha in &mus {
        for beta in &nus {
            let mut prod = BigUint::one();
            let top = alpha.first().max(beta.first());
            for i in 1..=top {
                let (a, b) = (alpha.multiplicity(i), beta.multiplicity(i));
                prod *= binomial(a + b, a);
            }
            multiplicity_form += prod;
            let z = centralizer_order(&multiset_union(alpha, beta));
            let d = centralizer_order(alpha) * centralizer_order(beta);
            let (q, r) = num_integer::Integer::div_rem(&z, &d);
            if !r.is_zero() {
                return Err(Error::verification(
                    "z_{α∪β}/(z_α z_β) integral",
                    format!("α={alpha} β={beta}"),
                ));
            }
            centralizer_form += q;
        }
    }
    let witness = format!("n={n} k={k}");
    if sum_squares != multiplicity_form {
        return Err(Error::verification("Σc² = Σ ∏ C(mᵢ(α)+mᵢ(β), mᵢ(α))", witness));
    }
    if sum_squares != centralizer_form {
        return Err(Error::verification("Σc² = Σ z_{α∪β}/(z_α z_β)", witness));
    }
    let upper = &binom * partition_count(n);
    if sum_squares < binom || sum_squares > upper {
        return Err(Error::verification("C(n,k) ≤ Σc² ≤ C(n,k) p(n)", witness));
    }
    checks += 4;
    Ok(LrIdentityReport {
        n,
        k,
        sum_squares,
        multiplicity_form,
        centralizer_form,
        binomial: binom,
        upper,
        checks,
    })
}

/// [q^k t^m] ∏ᵢ 1/(1 − qⁱ − tⁱ).
pub fn hw_coefficient(k: usize, m: usize) -> BigUint {
    let total = k + m;
    // b[a][c] for a + c ≤ total
    let mut b: Vec<Vec<BigUint>> = (0..=total).map(|a| vec![BigUint::zero(); total - a + 1]).collect();
    b[0][0] = BigUint::one();
    for i in 1..=total {
        for a in 0..=total {
            for c in 0..=total - a {
                let mut add = BigUint::zero();
                if a >= i {
                    add += &b[a - i][c];
                }
                if c >= i {
                    add += &b[a][c - i];
                }
                b[a][c] += add;
            }
        }
    }
    b[k][m].clone()
}

/// p₂(n) = [tⁿ] ∏ᵢ 1/(1 − 2tⁱ).
pub fn bicolored_count(n: usize) -> BigUint {
    let mut b = vec![BigUint::zero(); n + 1];
    b[0] = BigUint::one();
    for i in 1..=n {
        for j in i..=n {
            let add = &b[j - i] * 2u32;
            b[j] += add;
        }
    }
    b[n].clone()
}

/// C(λ) = max over μ, ν of c^λ_{μν}; witnesses are (μ, ν).
pub fn refined_max_lr(lambda: &Partition) -> MaxRecord<(Partition, Partition)> {
    let mut rec: Option<MaxRecord<(Partition, Partition)>> = None;
    for mu in subpartitions(lambda) {
        for (nu, c) in lr_expand_raw(lambda, &mu) {
            let c = BigUint::from(c);
            match rec.as_mut() {
                Some(r) => r.offer(&c, (mu.clone(), nu)),
                None => rec = Some(MaxRecord::new(c, (mu.clone(), nu))),
            }
        }
    }
    rec.expect("λ/λ always has the empty filling")
}

/// ∏_{(i,j)∈λ} (2ℓ+j−i)/(ℓ+j−i), an upper bound for C(λ)².
pub fn hook_content_bound(lambda: &Partition, ell: usize) -> Result<BigRational> {
    if ell < lambda.len() {
        return Err(Error::argument(format!(
            "ℓ = {ell} is smaller than the {} rows of {lambda:?}",
            lambda.len()
        )));
    }
    let mut num = num_bigint::BigInt::one();
    let mut den = num_bigint::BigInt::one();
    for (i, j) in lambda.cells() {
        num *= 2 * ell + j - i;
        den *= ell + j - i;
    }
    let bound = BigRational::new(num, den);
    if lambda.size() <= HOOK_CONTENT_CHECK_CAP {
        let c = refined_max_lr(lambda).value;
        let sq = BigRational::from(num_bigint::BigInt::from(&c * &c));
        if sq > bound {
            return Err(Error::verification("C(λ)² ≤ hook-content bound", format!("λ={lambda} ℓ={ell}")));
        }
    }
    Ok(bound)
}

/// A node of the splitting tree behind [`tree_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub shape: Partition,
    /// c^ρ_{left,right} when the node is split.
    #[serde(serialize_with = "crate::serde_big::decimal_opt")]
    pub coefficient: Option<BigUint>,
    pub children: Option<Box<(TreeNode, TreeNode)>>,
}

impl TreeNode {
    fn leaf(shape: Partition) -> Self {
        TreeNode {
            shape,
            coefficient: None,
            children: None,
        }
    }

    /// Product of coefficients over split nodes.
    pub fn product(&self) -> BigUint {
        match (&self.coefficient, &self.children) {
            (Some(c), Some(ch)) => c * ch.0.product() * ch.1.product(),
            _ => BigUint::one(),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        write!(f, "{:indent$}{}", "", self.shape, indent = 2 * depth)?;
        match (&self.coefficient, &self.children) {
            (Some(c), Some(ch)) => {
                writeln!(f, " c={c}")?;
                ch.0.write(f, depth + 1)?;
                ch.1.write(f, depth + 1)
            }
            _ => writeln!(f),
        }
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// Greedy binary splitting tree for (λ; μ, ν) of depth max(1, ⌈log₂ n⌉)
/// and the product of its coefficients, which is at most f^λ.
pub fn tree_certificate(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<(TreeNode, BigUint)> {
    let root_c = lr_coefficient(lambda, mu, nu)?;
    if root_c.is_zero() {
        return Err(Error::argument(format!("c^{lambda}_{{{mu},{nu}}} = 0")));
    }
    let n = lambda.size();
    let depth = (usize::BITS - n.saturating_sub(1).leading_zeros()).max(1) as usize;
    fn grow(shape: Partition, remaining: usize) -> TreeNode {
        if remaining == 0 || shape.size() <= 1 {
            return TreeNode::leaf(shape);
        }
        let best = refined_max_lr(&shape);
        let (left, right) = best.first().clone();
        TreeNode {
            shape,
            coefficient: Some(best.value),
            children: Some(Box::new((grow(left, remaining - 1), grow(right, remaining - 1)))),
        }
    }
    let root = TreeNode {
        shape: lambda.clone(),
        coefficient: Some(root_c),
        children: Some(Box::new((grow(mu.clone(), depth - 1), grow(nu.clone(), depth - 1)))),
    };
    let product = root.product();
    if product > dim_irrep(lambda) {
        return Err(Error::verification(
            "∏ c ≤ f^λ",
            format!("λ={lambda} μ={mu} ν={nu}"),
        ));
    }
    Ok((root, product))
}

/// Both sides of Σ_λ (c^λ_{μν})² = Σ c^μ_{αγ} c^μ_{αδ} c^ν_{βγ} c^ν_{βδ}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewCauchyReport {
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "crate::serde_big::decimal")]
    pub rhs: BigUint,
}

pub fn verify_skew_cauchy_square(mu: &Partition, nu: &Partition) -> Result<SkewCauchyReport> {
    verify_skew_cauchy_square_with_cap(mu, nu, DEFAULT_CAUCHY_CAP)
}

pub fn verify_skew_cauchy_square_with_cap(mu: &Partition, nu: &Partition, cap: usize) -> Result<SkewCauchyReport> {
    check_cap("skew Cauchy |μ|", mu.size(), cap)?;
    check_cap("skew Cauchy |ν|", nu.size(), cap)?;
    let n = mu.size() + nu.size();
    let mut lhs = BigUint::zero();
    for lambda in sized(n) {
        let c = BigUint::from(lr_count(&lambda, mu, nu));
        lhs += &c * &c;
    }
    // Σ_{α,β} (Σ_γ c^μ_{αγ} c^ν_{βγ})²
    let mu_exp: Vec<Vec<(Partition, u64)>> = subpartitions(mu).iter().map(|a| lr_expand_raw(mu, a)).collect();
    let nu_exp: Vec<HashMap<Partition, u64>> = subpartitions(nu)
        .iter()
        .map(|b| lr_expand_raw(nu, b).into_iter().collect())
        .collect();
    let mut rhs = BigUint::zero();
    for a in &mu_exp {
        for b in &nu_exp {
            let inner: BigUint = a
                .iter()
                .filter_map(|(gamma, c1)| b.get(gamma).map(|c2| BigUint::from(*c1) * *c2))
                .sum();
            rhs += &inner * &inner;
        }
    }
    if lhs != rhs {
        return Err(Error::verification("skew Cauchy square", format!("μ={mu} ν={nu}")));
    }
    Ok(SkewCauchyReport { lhs, rhs })
}

/// c^λ_{μν} ≤ c^λ_{μ∧ν, μ∨ν}.
pub fn verify_lpp(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let (meet, join) = meet_join(mu, nu);
    Ok(lr_count(lambda, mu, nu) <= lr_count(lambda, &meet, &join))
}

/// ℓ(λ) > ℓ(μ) + ℓ(ν), which forces c^λ_{μν} = 0.
pub fn lr_vanishing_rows(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lambda.len() > mu.len() + nu.len()
}
