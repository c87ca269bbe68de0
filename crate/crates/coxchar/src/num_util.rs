//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

pub fn pow2(k: u32) -> BigUint {
    BigUint::one() << k as usize
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `gcd` on machine integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// 2-adic valuation of a nonzero machine integer.
pub fn v2_u64(n: u64) -> u32 {
    debug_assert!(n != 0);
    n.trailing_zeros()
}

/// Natural logarithm, routed through `libm` when `std` is unavailable.
pub fn ln(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.ln()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::log(x)
    }
}

/// Largest integer `t >= lo` with `base^t <= limit`, or `lo - 1` if none.
///
/// Exact integer replacement for `floor(log_base(limit))`-style thresholds:
/// no float enters the comparison.
pub fn max_power_at_most(base: &BigUint, limit: &BigUint, lo: i64) -> i64 {
    let mut t = lo;
    let mut p = base.pow(lo.max(0) as u32); // callers use lo = 0
    if &p > limit {
        return lo - 1;
    }
    loop {
        let next = &p * base;
        if &next > limit {
            return t;
        }
        p = next;
        t += 1;
    }
}
