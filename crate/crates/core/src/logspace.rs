//! Log-domain helpers for comparing exact integers against bound expressions
//! built from n!, √n!, e^{−a√n} and friends.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Relative tolerance for log-domain comparisons.
pub const LOG_REL_TOL: f64 = 1e-9;

/// Natural log of a big integer; −∞ for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational; −∞ for zero.
pub fn ln_rational(x: &BigRational) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

/// ln n!.
pub fn ln_factorial(n: usize) -> f64 {
    // Summation is exact to rounding for the sizes used here; switch to
    // Stirling with correction terms for very large n.
    if n < 256 {
        (2..=n).map(|i| (i as f64).ln()).sum()
    } else {
        let x = n as f64;
        x * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI * x).ln() + 1.0 / (12.0 * x)
            - 1.0 / (360.0 * x.powi(3))
            + 1.0 / (1260.0 * x.powi(5))
    }
}

/// ln C(n, k).
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// `lhs ≤ rhs` in log domain with relative tolerance [`LOG_REL_TOL`].
pub fn log_le(lhs: f64, rhs: f64) -> bool {
    if lhs == f64::NEG_INFINITY || rhs == f64::INFINITY {
        return true;
    }
    lhs <= rhs + LOG_REL_TOL * lhs.abs().max(rhs.abs()).max(1.0)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// ∏_{j=lo}^{hi-1} j, i.e. (hi−1)!/(lo−1)! extended by zero when the range contains 0.
pub fn falling_range(lo: usize, hi: usize) -> BigUint {
    (lo..hi).fold(BigUint::one(), |acc, j| acc * BigUint::from(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logs_of_big_integers() {
        let f = factorial(300);
        assert!((ln_biguint(&f) - ln_factorial(300)).abs() < 1e-9 * ln_factorial(300));
        assert!((ln_biguint(&BigUint::from(1000u32)) - 1000f64.ln()).abs() < 1e-12);
        for n in [10usize, 100, 255, 256, 257, 1000] {
            let exact = ln_biguint(&factorial(n));
            assert!((exact - ln_factorial(n)).abs() <= 1e-10 * exact.max(1.0), "n={n}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 7), BigUint::from(77520u32));
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(falling_range(1, 4), BigUint::from(6u32));
        assert_eq!(falling_range(0, 4), BigUint::zero());
        assert_eq!(falling_range(3, 3), BigUint::one());
    }
}
