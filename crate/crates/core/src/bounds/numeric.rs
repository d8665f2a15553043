//! Stirling's sandwich and the falling-factorial estimate, decided with
//! rational enclosures of `e`, `π` and `exp`.

use crate::rational::{e_lower, e_upper, int, pi_lower, pi_upper, pow_int, ratio};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

const EXP_TERMS: u32 = 24;

/// `(lo, hi)` with `lo <= exp(x) <= hi`, for rational `0 <= x <= 1`.
///
/// `lo` is a Taylor partial sum; the tail is at most `3x^{K+1}/(K+1)!`.
pub fn exp_enclosure(x: &BigRational) -> (BigRational, BigRational) {
    assert!(*x >= int(0) && *x <= int(1), "exp_enclosure needs 0 <= x <= 1");
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 1..=EXP_TERMS {
        term = term * x / int(k);
        sum += &term;
    }
    let tail = term * x / int(EXP_TERMS + 1) * int(3);
    let hi = &sum + tail;
    (sum, hi)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[derive(Clone, Debug, Serialize)]
pub struct StirlingReport {
    pub n: u64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub holds: bool,
}

/// `√(2π) n^{n+1/2} e^{-n} e^{1/(12n+1)} <= n! <= √(2π) n^{n+1/2} e^{-n} e^{1/(12n)}`,
/// compared in squared form:
/// `2π n^{2n+1} e^{2/(12n+1)} <= (n!)² e^{2n} <= 2π n^{2n+1} e^{1/(6n)}`.
///
/// Each side is replaced by the enclosure bound that makes the check harder,
/// so `true` is rigorous.
pub fn stirling_sandwich_check(n: u64) -> StirlingReport {
    assert!(n >= 1);
    let f = factorial(n);
    let f2 = int(&f * &f);
    let np = int(pow_int(n as u128, (2 * n + 1) as u32));
    let two_n = (2 * n) as usize;
    let e2n_lo = num_traits::pow(e_lower(), two_n);
    let e2n_hi = num_traits::pow(e_upper(), two_n);

    let (_, lo_corr_hi) = exp_enclosure(&ratio(2, BigInt::from(12 * n + 1)));
    let lower_lhs_hi = int(2) * pi_upper() * &np * lo_corr_hi;
    let lower_holds = lower_lhs_hi <= &f2 * &e2n_lo;

    let (up_corr_lo, _) = exp_enclosure(&ratio(1, BigInt::from(6 * n)));
    let upper_rhs_lo = int(2) * pi_lower() * &np * up_corr_lo;
    let upper_holds = &f2 * &e2n_hi <= upper_rhs_lo;
    StirlingReport {
        n,
        lower_holds,
        upper_holds,
        holds: lower_holds && upper_holds,
    }
}

/// `n!/(n-t)! >= (9/10) n^t/e^t` for `t < n`, via
/// `10 · n!/(n-t)! · e_lo^t >= 9 n^t` with `e_lo < e`.
pub fn factorial_ratio_check(n: u64, t: u64) -> bool {
    assert!(t < n);
    let falling: BigInt = ((n - t + 1)..=n).fold(BigInt::one(), |acc, k| acc * k);
    let lhs = int(falling * 10) * num_traits::pow(e_lower(), t as usize);
    lhs >= int(pow_int(n as u128, t as u32) * 9)
}

/// All pairs `1 <= t < n <= max_n`; returns the failing pairs.
///
/// Same inequality as [`factorial_ratio_check`], with `e_lo = E/10^k` cleared
/// to integers and powers shared across `n`.
pub fn factorial_ratio_sweep(max_n: u64) -> Vec<(u64, u64)> {
    let e = e_lower();
    let (num, den) = (e.numer().clone(), e.denom().clone());
    let mut num_pow = vec![BigInt::one()];
    let mut den_pow = vec![BigInt::one()];
    for t in 1..max_n as usize {
        num_pow.push(&num_pow[t - 1] * &num);
        den_pow.push(&den_pow[t - 1] * &den);
    }
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let mut falling = BigInt::one();
        let mut n_pow = BigInt::one();
        for t in 1..n {
            falling *= n - t + 1;
            n_pow *= n;
            let lhs = &falling * 10 * &num_pow[t as usize];
            let rhs = &n_pow * 9 * &den_pow[t as usize];
            if lhs < rhs {
                failures.push((n, t));
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_brackets() {
        for (p, q) in [(0, 1), (1, 13), (1, 2), (1, 1)] {
            let x = ratio(p, q);
            let (lo, hi) = exp_enclosure(&x);
            let f = (p as f64 / q as f64).exp();
            assert!(crate::rational::rat_f64(&lo) <= f + 1e-15);
            assert!(crate::rational::rat_f64(&hi) >= f - 1e-15);
            assert!(lo <= hi);
        }
        let (lo, hi) = exp_enclosure(&int(1));
        assert!(lo <= e_upper() && hi >= e_lower());
    }

    #[test]
    fn stirling_small() {
        for n in [1, 2, 3, 10, 50] {
            let r = stirling_sandwich_check(n);
            assert!(r.lower_holds && r.upper_holds, "{r:?}");
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert!(factorial_ratio_check(10, 5));
        assert!(factorial_ratio_check(2, 1));
        assert!(factorial_ratio_sweep(40).is_empty());
        for n in 2..30 {
            for t in 1..n {
                assert_eq!(factorial_ratio_check(n, t), !factorial_ratio_sweep(n).contains(&(n, t)));
            }
        }
    }
}
