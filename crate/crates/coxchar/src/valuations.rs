//! q-adic valuations of integers, factorials and irrep degrees.
//!
//! Degree valuations are computed from hook lengths without ever forming the
//! degree itself, so sweeps over all partitions of `n ~ 60` stay cheap.

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num_util;
use crate::partitions::{hook_lengths, Partition};

/// q-adic valuation of a nonzero integer (sign-insensitive).
pub fn vq(m: &BigInt, q: u32) -> Result<u64> {
    if m.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut m = m.magnitude().clone();
    let q = BigUint::from(q);
    let mut v = 0u64;
    loop {
        let (quot, rem) = num_integer::Integer::div_rem(&m, &q);
        if !rem.is_zero() {
            return Ok(v);
        }
        v += 1;
        m = quot;
    }
}

/// q-adic valuation of a nonzero machine integer.
pub fn vq_u64(mut m: u64, q: u32) -> u64 {
    debug_assert!(m != 0);
    let q = u64::from(q);
    let mut v = 0;
    while m % q == 0 {
        m /= q;
        v += 1;
    }
    v
}

/// `v_q(n!)` via the digit-sum identity `(n - s_q(n)) / (q - 1)` where
/// `s_q(n)` is the base-q digit sum.
pub fn vq_factorial(n: u64, q: u32) -> u64 {
    let q = u64::from(q);
    let mut digit_sum = 0u64;
    let mut m = n;
    while m > 0 {
        digit_sum += m % q;
        m /= q;
    }
    (n - digit_sum) / (q - 1)
}

/// `v_q(n!)` by summing `floor(n / q^i)`; kept alongside the digit-sum form
/// so the two can cross-check each other.
pub fn vq_factorial_legendre(n: u64, q: u32) -> u64 {
    let q = u64::from(q);
    let mut v = 0u64;
    let mut p = q;
    loop {
        v += n / p;
        match p.checked_mul(q) {
            Some(next) if next <= n => p = next,
            _ => break,
        }
    }
    v
}

/// `v_q` of the irrep degree for `lambda`, from hooks only: the degree itself
/// is never formed.
pub fn vq_degree(lambda: &Partition, q: u32) -> u64 {
    let n = u64::from(lambda.size());
    let mut v = vq_factorial(n, q) as i64;
    for h in hook_lengths(lambda) {
        v -= vq_u64(u64::from(h), q) as i64;
    }
    debug_assert!(v >= 0, "degree valuations are nonnegative");
    v as u64
}

/// Histogram of `v_q(f_lambda)` over all partitions of `a`: entry `v` counts
/// the partitions with degree valuation exactly `v`.
pub fn vq_degree_histogram(a: u32, q: u32) -> alloc::vec::Vec<u64> {
    let mut hist = alloc::vec::Vec::new();
    for lam in crate::partitions::enumerate_partitions(a) {
        let v = vq_degree(&lam, q) as usize;
        if hist.len() <= v {
            hist.resize(v + 1, 0);
        }
        hist[v] += 1;
    }
    hist
}

/// Valuation of `2^k * n * (n-1) * ... * (n-k+1)`, the factor a rank-k class
/// acquires when embedded in rank n, together with its logarithmic bound
/// `2k + (q-1) log_q(n)`.
#[derive(Clone, Copy, Debug)]
pub struct EmbeddingFactorValuation {
    pub n: u64,
    pub k: u64,
    pub q: u32,
    /// `v_q(2^k (n)_k)`, exact.
    pub exact: u64,
    /// `2k + (q-1) log_q(n)`; report-only, not used in comparisons.
    pub bound: f64,
}

impl EmbeddingFactorValuation {
    /// Checks `exact <= 2k + (q-1) log_q(n)` in exact integer arithmetic:
    /// for `t = exact - 2k > 0` this is `q^t <= n^(q-1)`.
    pub fn exact_within_bound(&self) -> bool {
        if self.exact <= 2 * self.k {
            return true;
        }
        let t = (self.exact - 2 * self.k) as u32;
        BigUint::from(self.q).pow(t) <= BigUint::from(self.n).pow(self.q - 1)
    }
}

/// Computes [`EmbeddingFactorValuation`] for `0 <= k <= n`. The bound is
/// meaningful for `n >= 1` (it is reported as 0 for `n = 0`).
pub fn vq_embedding_factor(n: u64, k: u64, q: u32) -> EmbeddingFactorValuation {
    debug_assert!(k <= n);
    let twos = if q == 2 { k } else { 0 };
    let exact = twos + vq_factorial(n, q) - vq_factorial(n - k, q);
    let bound = if n == 0 {
        0.0
    } else {
        2.0 * k as f64 + (q - 1) as f64 * num_util::ln(n as f64) / num_util::ln(f64::from(q))
    };
    EmbeddingFactorValuation { n, k, q, exact, bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use num_bigint::BigInt;

    #[test]
    fn vq_examples() {
        assert_eq!(vq(&BigInt::from(8), 2), Ok(3));
        assert_eq!(vq(&BigInt::from(360), 2), Ok(3));
        assert_eq!(vq(&BigInt::from(-12), 3), Ok(1));
        assert_eq!(vq(&BigInt::from(0), 5), Err(Error::ZeroValuation));
    }

    #[test]
    fn factorial_valuations() {
        assert_eq!(vq_factorial(0, 2), 0);
        assert_eq!(vq_factorial(10, 2), 8);
        assert_eq!(vq_factorial(10, 3), 4);
    }

    #[test]
    fn digit_sum_matches_legendre() {
        for q in [2u32, 3, 5, 7] {
            for n in 0..=500u64 {
                assert_eq!(vq_factorial(n, q), vq_factorial_legendre(n, q), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn degree_valuation_examples() {
        assert_eq!(vq_degree(&Partition::of(&[9]), 2), 0);
        assert_eq!(vq_degree(&Partition::of(&[2, 1]), 2), 1);
        assert_eq!(vq_degree(&Partition::of(&[2, 2]), 2), 1);
    }

    #[test]
    fn degree_valuation_agrees_with_valuation_of_degree() {
        for n in 0..=20u32 {
            for lam in enumerate_partitions(n) {
                let f = BigInt::from(crate::partitions::degree_sym(&lam));
                for q in [2u32, 3, 5] {
                    assert_eq!(vq_degree(&lam, q), vq(&f, q).unwrap(), "{lam} q={q}");
                }
            }
        }
    }

    #[test]
    fn embedding_factor_examples() {
        let v = vq_embedding_factor(10, 0, 3);
        assert_eq!(v.exact, 0);

        // v_2(4 * 10 * 9) = 3, bound 4 + log2(10).
        let v = vq_embedding_factor(10, 2, 2);
        assert_eq!(v.exact, 3);
        assert!((v.bound - (4.0 + (10f64).log2())).abs() < 1e-12);

        // v_3(4 * 90) = 2.
        let v = vq_embedding_factor(10, 2, 3);
        assert_eq!(v.exact, 2);
    }

    #[test]
    fn embedding_factor_bound_holds_exactly() {
        for q in [2u32, 3] {
            for n in 1..=200u64 {
                for k in 0..=n {
                    let v = vq_embedding_factor(n, k, q);
                    assert!(v.exact_within_bound(), "n={n} k={k} q={q}");
                }
            }
        }
    }
}
