//! Limit-shape numerics: the VKLS curve, hook integrals, named constants.

use std::f64::consts::{PI, SQRT_2};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::dimensions::hook_grid;
use crate::error::{Error, Result};
use crate::partition::Partition;

const ROOT_TOL: f64 = 1e-12;
const MONOTONE_GRID: usize = 1000;
const AREA_TOL: f64 = 1e-3;

/// c1, c2 from the dimension band, d from the C(n,k) band, K = lim p₂(n)/2ⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub c1: f64,
    pub c2: f64,
    pub d: f64,
    pub k: f64,
}

pub fn constants() -> Constants {
    // K = ∏_{j≥1} (1 − 2^{−j})^{−1}
    let mut k = 1.0;
    let mut term = 0.5f64;
    while term > f64::EPSILON {
        k /= 1.0 - term;
        term /= 2.0;
    }
    Constants {
        c1: PI / 6f64.sqrt(),
        c2: (PI - 2.0) / (PI * PI),
        d: PI * (1.0 + SQRT_2) / 6f64.sqrt(),
        k,
    }
}

/// φ(x) = (2/π)(x·arcsin(x/√2) + √(2−x²)) on |x| ≤ √2.
pub fn vkls_phi(x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() > SQRT_2 * (1.0 + 1e-15) {
        return Err(Error::argument(format!("φ is defined on [−√2, √2], got {x}")));
    }
    let x = x.clamp(-SQRT_2, SQRT_2);
    Ok(phi_unchecked(x))
}

fn phi_unchecked(x: f64) -> f64 {
    2.0 / PI * (x * (x / SQRT_2).clamp(-1.0, 1.0).asin() + (2.0 - x * x).max(0.0).sqrt())
}

/// φ extended by |x| outside [−√2, √2].
fn phi_ext(x: f64) -> f64 {
    if x.abs() >= SQRT_2 {
        x.abs()
    } else {
        phi_unchecked(x)
    }
}

/// The VKLS boundary in row/column coordinates: v = ψ(u) where
/// u = (φ(x)+x)/√2, v = (φ(x)−x)/√2.
pub fn vkls_psi(u: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&u) {
        return Err(Error::argument(format!("ψ is defined on [0, 2], got {u}")));
    }
    Ok(psi_unchecked(u))
}

fn psi_unchecked(u: f64) -> f64 {
    // x = √2·sin θ keeps both coordinates well conditioned near the ends;
    // u(θ) is nondecreasing on [−π/2, π/2]
    let coords = |t: f64| {
        let base = 2.0 / PI * (t * t.sin() + t.cos());
        (base + t.sin(), base - t.sin())
    };
    if u <= 0.0 {
        return 2.0;
    }
    if u >= 2.0 {
        return 0.0;
    }
    let (mut lo, mut hi) = (-PI / 2.0, PI / 2.0);
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        if coords(mid).0 < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    coords(0.5 * (lo + hi)).1.max(0.0)
}

/// Rows √n·ψ((i−½)/√n) rounded, then repaired to total n one boundary cell
/// at a time, choosing the row whose new deviation is smallest.
pub fn vkls_partition(n: usize) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    let s = (n as f64).sqrt();
    let target: Vec<f64> = (1..)
        .map(|i| s * psi_unchecked(((i as f64 - 0.5) / s).min(2.0)))
        .take_while(|&t| t >= 0.5)
        .collect();
    let mut rows: Vec<i64> = target.iter().map(|t| t.round() as i64).collect();
    let tgt = |i: usize| target.get(i).copied().unwrap_or(0.0);
    let mut total: i64 = rows.iter().sum();
    while total != n as i64 {
        let grow = total < n as i64;
        let mut best: Option<(f64, usize)> = None;
        for i in 0..=rows.len() {
            let cur = rows.get(i).copied().unwrap_or(0);
            let valid = if grow {
                i == 0 || rows[i - 1] > cur
            } else {
                cur > 0 && rows.get(i + 1).copied().unwrap_or(0) < cur
            };
            if !valid {
                continue;
            }
            let next = if grow { cur + 1 } else { cur - 1 };
            let dev = (next as f64 - tgt(i)).abs();
            if best.is_none_or(|(d, _)| dev < d) {
                best = Some((dev, i));
            }
        }
        let (_, i) = best.expect("a boundary cell always exists");
        if i == rows.len() {
            rows.push(0);
        }
        rows[i] += if grow { 1 } else { -1 };
        total += if grow { 1 } else { -1 };
    }
    Partition::from_unsorted(rows.into_iter().filter(|&r| r > 0).map(|r| r as u32).collect())
}

/// ω(t) = |t| + 2·#{cells of content t}, the rotated boundary of λ.
fn rotated_profile(lambda: &Partition, t: i64) -> i64 {
    let cells = lambda
        .parts()
        .iter()
        .enumerate()
        .filter(|&(i, &p)| {
            let i = i as i64;
            t >= -i && t < p as i64 - i
        })
        .count() as i64;
    t.abs() + 2 * cells
}

/// Sup-deviation between the rotated boundary of λ at scale √n and φ,
/// sampled at every integer and half-integer content; an upper bound for
/// the Fréchet distance between the two curves.
pub fn vkls_distance(lambda: &Partition) -> f64 {
    let n = lambda.size().max(1) as f64;
    let scale = (2.0 * n).sqrt();
    let reach = (lambda.first() as i64)
        .max(lambda.len() as i64)
        .max((SQRT_2 * scale).ceil() as i64)
        + 1;
    let mut worst = 0f64;
    for twice in -2 * reach..=2 * reach {
        let t = twice as f64 / 2.0;
        let y = if twice % 2 == 0 {
            rotated_profile(lambda, twice / 2) as f64
        } else {
            let a = rotated_profile(lambda, twice.div_euclid(2));
            let b = rotated_profile(lambda, twice.div_euclid(2) + 1);
            0.5 * (a + b) as f64
        };
        worst = worst.max((y / scale - phi_ext(t / scale)).abs());
    }
    worst
}

/// −(1/n)·Σ log(h/√n) over the cells of λ.
pub fn hook_integral_partition(lambda: &Partition) -> f64 {
    let n = lambda.size();
    if n == 0 {
        return 0.0;
    }
    let half_ln = 0.5 * (n as f64).ln();
    -hook_grid(lambda).iter().map(|h| (h as f64).ln() - half_ln).sum::<f64>() / n as f64
}

/// A non-increasing boundary v = f(u) on a closed interval.
#[derive(Clone)]
pub struct CurveFn {
    lo: f64,
    hi: f64,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl std::fmt::Debug for CurveFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CurveFn").field("domain", &(self.lo, self.hi)).finish()
    }
}

impl CurveFn {
    /// Checks monotonicity on a grid.
    pub fn new(lo: f64, hi: f64, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::argument(format!("empty domain [{lo}, {hi}]")));
        }
        let curve = CurveFn { lo, hi, f: Arc::new(f) };
        let mut prev = curve.evaluate(lo);
        for i in 1..=MONOTONE_GRID {
            let v = curve.evaluate(lo + (hi - lo) * i as f64 / MONOTONE_GRID as f64);
            if v > prev + 1e-12 {
                return Err(Error::argument("curve is not non-increasing"));
            }
            prev = v;
        }
        Ok(curve)
    }

    /// ψ on [0, 2].
    pub fn vkls() -> Self {
        CurveFn {
            lo: 0.0,
            hi: 2.0,
            f: Arc::new(psi_unchecked),
        }
    }

    pub fn constant(lo: f64, hi: f64, value: f64) -> Result<Self> {
        CurveFn::new(lo, hi, move |_| value)
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn evaluate(&self, u: f64) -> f64 {
        (self.f)(u.clamp(self.lo, self.hi))
    }

    /// sup{u : f(u) > v}, or the left end if none.
    fn inverse(&self, v: f64) -> f64 {
        if self.evaluate(self.hi) > v {
            return self.hi;
        }
        if self.evaluate(self.lo) <= v {
            return self.lo;
        }
        let (mut lo, mut hi) = (self.lo, self.hi);
        while hi - lo > ROOT_TOL {
            let mid = 0.5 * (lo + hi);
            if self.evaluate(mid) > v {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Midpoint-rule −∬ log ℏ over {π(u) ≤ v ≤ ω(u)}, with ℏ(u,v) the arm plus
/// leg to the outer curve ω, on a grid × grid box.
pub fn hook_integral_curve(omega: &CurveFn, pi: &CurveFn, grid: usize) -> Result<f64> {
    if grid == 0 {
        return Err(Error::argument("grid must be positive"));
    }
    let (lo, hi) = omega.domain();
    let du = (hi - lo) / grid as f64;
    let us: Vec<f64> = (0..grid).map(|i| lo + (i as f64 + 0.5) * du).collect();
    let outer: Vec<f64> = us.iter().map(|&u| omega.evaluate(u)).collect();
    let inner: Vec<f64> = us.iter().map(|&u| pi.evaluate(u)).collect();
    if outer.iter().zip(&inner).any(|(o, p)| p > &(o + 1e-12)) {
        return Err(Error::argument("inner curve exceeds outer curve"));
    }
    let area: f64 = outer.iter().zip(&inner).map(|(o, p)| o - p).sum::<f64>() * du;
    if (area - 1.0).abs() > AREA_TOL {
        return Err(Error::argument(format!("region area {area} is not 1")));
    }
    let (vlo, vhi) = (pi.evaluate(hi).min(pi.evaluate(lo)), omega.evaluate(lo));
    let dv = (vhi - vlo) / grid as f64;
    let rows: Vec<f64> = (0..grid)
        .into_par_iter()
        .map(|j| {
            let v = vlo + (j as f64 + 0.5) * dv;
            let reach = omega.inverse(v);
            let mut sum = 0.0;
            for i in 0..grid {
                if inner[i] <= v && v < outer[i] {
                    let hook = (outer[i] - v) + (reach - us[i]).max(0.0);
                    sum += hook.ln();
                }
            }
            sum
        })
        .collect();
    Ok(-rows.iter().sum::<f64>() * du * dv)
}

/// (u, ψ(u)) on `samples` + 1 equally spaced points of [0, 2].
pub fn vkls_samples(samples: usize) -> Vec<(f64, f64)> {
    let samples = samples.max(1);
    (0..=samples)
        .map(|i| {
            let u = 2.0 * i as f64 / samples as f64;
            (u, psi_unchecked(u))
        })
        .collect()
}
