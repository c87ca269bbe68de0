//! Symmetric-group characters via the Murnaghan–Nakayama rule, plus the
//! valuation-threshold and divisibility statistics for type A.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num_util;
use crate::partitions::{border_strips, enumerate_partitions, Partition};
use crate::valuations::{vq_degree, vq_factorial};
use crate::Proportion;

/// Murnaghan–Nakayama evaluator with a memo table keyed by
/// `(remaining shape, remaining cycles)`.
///
/// The table is private to the evaluator; for parallel sweeps give each
/// worker its own evaluator (values are identical regardless — the recursion
/// is pure).
#[derive(Default)]
pub struct SymCharEvaluator {
    memo: BTreeMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl SymCharEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_lambda(mu)` for `|lambda| = |mu|`. Cycles are consumed largest
    /// first; the value does not depend on that choice.
    pub fn eval(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() });
        }
        Ok(self.eval_cycles(lambda, mu.parts()))
    }

    /// Evaluates with the cycle lengths consumed front to back in the order
    /// given. Exposed so tests can check order independence.
    pub fn eval_with_cycle_order(&mut self, lambda: &Partition, cycles: &[u32]) -> Result<BigInt> {
        let total: u32 = cycles.iter().sum();
        if lambda.size() != total {
            return Err(Error::SizeMismatch { expected: lambda.size(), actual: total });
        }
        if cycles.iter().any(|&c| c == 0) {
            return Err(Error::InvalidPartition);
        }
        Ok(self.eval_cycles(lambda, cycles))
    }

    fn eval_cycles(&mut self, shape: &Partition, cycles: &[u32]) -> BigInt {
        if cycles.is_empty() {
            return BigInt::one();
        }
        let key = (shape.parts().to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let t = cycles[0];
        let rest = &cycles[1..];
        let mut acc = BigInt::zero();
        for (sub, leg) in border_strips(shape, t) {
            let term = self.eval_cycles(&sub, rest);
            if leg % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// One-shot `chi_lambda(mu)`; use [`SymCharEvaluator`] for sweeps.
pub fn mn_character_sym(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    SymCharEvaluator::new().eval(lambda, mu)
}

/// Fraction of partitions of `n` whose degree valuation satisfies
/// `v_q(f_lambda) <= c + (q-1) log_q(n)`, exact over `p(n)`.
pub fn threshold_fraction_sym(n: u32, q: u32, c: f64) -> Proportion {
    threshold_fraction_sym_with_base(n, q, c, q)
}

/// Same threshold with the logarithm taken in an explicit `base`.
///
/// When `c` is an integer the comparison is exact: `v - c <= (q-1)
/// log_base(n)` becomes `base^(v-c) <= n^(q-1)`, decided in big-integer
/// arithmetic. For fractional `c` the cut is computed in floats and must not
/// sit within `1e-9` of an integer.
pub fn threshold_fraction_sym_with_base(n: u32, q: u32, c: f64, base: u32) -> Proportion {
    assert!(n >= 1 && q >= 2 && base >= 2);
    let c_int = c as i64;
    let cut: i64 = if c_int as f64 == c {
        // max t >= 0 with base^t <= n^(q-1), i.e. floor((q-1) log_base n).
        let limit = BigUint::from(n).pow(q - 1);
        let t = num_util::max_power_at_most(&BigUint::from(base), &limit, 0);
        c_int + t
    } else {
        let x = c + f64::from(q - 1) * num_util::ln(f64::from(n)) / num_util::ln(f64::from(base));
        assert!(
            (x - libm_round(x)).abs() > 1e-9,
            "threshold {x} is borderline; pass an integral c for an exact cut"
        );
        floor_i64(x)
    };
    let count = count_partitions_matching(n, |lam| vq_degree(lam, q) as i64 <= cut);
    Proportion::new(count, partition_total(n))
}

/// Fraction of `lambda` over `p(n)` with
/// `v_q(f_lambda) - v_q(n (n-1) ... (n-k+1)) >= r`:
/// the sufficient condition for `q^r` to divide every character value on a
/// class embedded from rank `k`. Valuations only; scales far beyond the
/// exact-character range.
pub fn valuation_fraction_sym(n: u32, k: u32, q: u32, r: u64) -> Proportion {
    assert!(k <= n);
    let need = sym_valuation_need(n, k, q, r);
    let count = count_partitions_matching(n, |lam| vq_degree(lam, q) >= need);
    Proportion::new(count, partition_total(n))
}

/// [`valuation_fraction_sym`] from a precomputed valuation histogram for
/// partitions of `n`.
pub fn valuation_fraction_sym_from_histogram(
    n: u32,
    k: u32,
    q: u32,
    r: u64,
    hist: &[u64],
) -> Proportion {
    assert!(k <= n);
    let need = sym_valuation_need(n, k, q, r) as usize;
    let total: u64 = hist.iter().sum();
    let count: u64 = hist.iter().skip(need).sum();
    Proportion::new(count, total)
}

fn sym_valuation_need(n: u32, k: u32, q: u32, r: u64) -> u64 {
    r + vq_factorial(u64::from(n), q) - vq_factorial(u64::from(n - k), q)
}

/// Fraction of irreducible characters of rank `n` divisible by `d` at the
/// class of `g` padded with fixed points (`g` of size `k <= n`). A zero
/// character value counts as divisible.
pub fn sym_statistic(n: u32, k: u32, g: &Partition, d: u64) -> Result<Proportion> {
    sym_statistic_with(&mut SymCharEvaluator::new(), n, k, g, d)
}

/// [`sym_statistic`] with a caller-held evaluator so chained sweeps share
/// the memo table across ranks.
pub fn sym_statistic_with(
    ev: &mut SymCharEvaluator,
    n: u32,
    k: u32,
    g: &Partition,
    d: u64,
) -> Result<Proportion> {
    if g.size() != k {
        return Err(Error::SizeMismatch { expected: k, actual: g.size() });
    }
    if k > n {
        return Err(Error::EmbedBeyondRank { k, n });
    }
    assert!(d >= 1);
    let class = g.pad_with_ones(n - k);
    let mut count = 0u64;
    let mut total = 0u64;
    let d = BigInt::from(d);
    for lam in enumerate_partitions(n) {
        let chi = ev.eval(&lam, &class)?;
        if (chi % &d).is_zero() {
            count += 1;
        }
        total += 1;
    }
    Ok(Proportion::new(count, total))
}

fn partition_total(n: u32) -> u64 {
    use num_traits::ToPrimitive;
    crate::partitions::partition_count(n).to_u64().expect("p(n) fits in u64 at sweep scale")
}

fn count_partitions_matching<F>(n: u32, pred: F) -> u64
where
    F: Fn(&Partition) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let mut iter = enumerate_partitions(n);
        let mut count = 0u64;
        loop {
            let chunk: Vec<Partition> = iter.by_ref().take(1 << 14).collect();
            if chunk.is_empty() {
                break;
            }
            count += chunk.par_iter().map(|p| u64::from(pred(p))).sum::<u64>();
        }
        count
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_partitions(n).filter(|p| pred(p)).count() as u64
    }
}

fn floor_i64(x: f64) -> i64 {
    #[cfg(feature = "std")]
    {
        x.floor() as i64
    }
    #[cfg(not(feature = "std"))]
    {
        libm::floor(x) as i64
    }
}

fn libm_round(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.round()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::round(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{centralizer_size, degree_sym};

    #[test]
    fn trivial_and_sign_characters() {
        let mut ev = SymCharEvaluator::new();
        for mu in enumerate_partitions(6) {
            assert_eq!(ev.eval(&Partition::of(&[6]), &mu).unwrap(), BigInt::one());
        }
        // Sign character on a 3-cycle (even permutation).
        assert_eq!(
            mn_character_sym(&Partition::of(&[1, 1, 1]), &Partition::of(&[3])).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn standard_character_on_three_cycle() {
        assert_eq!(
            mn_character_sym(&Partition::of(&[2, 1]), &Partition::of(&[3])).unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn size_mismatch_rejected() {
        assert_eq!(
            mn_character_sym(&Partition::of(&[2, 1]), &Partition::of(&[2])),
            Err(Error::SizeMismatch { expected: 3, actual: 2 })
        );
    }

    #[test]
    fn identity_column_is_the_degree() {
        let mut ev = SymCharEvaluator::new();
        for n in 1..=10u32 {
            let id = Partition::of(&alloc::vec![1; n as usize]);
            for lam in enumerate_partitions(n) {
                assert_eq!(ev.eval(&lam, &id).unwrap(), BigInt::from(degree_sym(&lam)));
            }
        }
    }

    #[test]
    fn cycle_order_does_not_matter() {
        for n in 1..=7u32 {
            let shapes: Vec<Partition> = enumerate_partitions(n).collect();
            for mu in &shapes {
                let desc = mu.parts().to_vec();
                let mut asc = desc.clone();
                asc.reverse();
                for lam in &shapes {
                    let mut ev = SymCharEvaluator::new();
                    let a = ev.eval_with_cycle_order(lam, &desc).unwrap();
                    let b = ev.eval_with_cycle_order(lam, &asc).unwrap();
                    assert_eq!(a, b, "lambda={lam} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn row_orthogonality_small() {
        for n in 1..=6u32 {
            let fact = BigInt::from(num_util::factorial(n));
            let shapes: Vec<Partition> = enumerate_partitions(n).collect();
            let classes: Vec<(Partition, BigInt)> = shapes
                .iter()
                .map(|mu| {
                    let size = num_util::factorial(n) / centralizer_size(mu);
                    (mu.clone(), BigInt::from(size))
                })
                .collect();
            let mut ev = SymCharEvaluator::new();
            for a in &shapes {
                for b in &shapes {
                    let mut acc = BigInt::zero();
                    for (mu, size) in &classes {
                        acc += size * ev.eval(a, mu).unwrap() * ev.eval(b, mu).unwrap();
                    }
                    let expect = if a == b { fact.clone() } else { BigInt::zero() };
                    assert_eq!(acc, expect, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn threshold_fraction_trivial_case() {
        assert_eq!(threshold_fraction_sym(1, 2, 0.0), Proportion::new(1, 1));
    }

    #[test]
    fn threshold_fraction_decreases_from_20_to_40() {
        let a = threshold_fraction_sym(20, 2, 0.0);
        let b = threshold_fraction_sym(40, 2, 0.0);
        assert_eq!(a, Proportion::new(421, 627));
        assert_eq!(b, Proportion::new(14668, 37338));
        assert!(b.ratio() < a.ratio());
    }

    #[test]
    fn statistic_with_identity_base_counts_even_degrees() {
        // Padding the 1-cycle to rank 6 gives the identity class, so the
        // statistic counts even degrees: 10, 16, 10 among the 11 irreps.
        let s = sym_statistic(6, 1, &Partition::of(&[1]), 2).unwrap();
        assert_eq!(s, Proportion::new(3, 11));
        let bigger = sym_statistic(10, 1, &Partition::of(&[1]), 2).unwrap();
        assert_eq!(bigger, Proportion::new(26, 42));
        assert!(bigger.ratio() >= s.ratio());
    }

    #[test]
    fn valuation_fraction_sym_sanity() {
        // r = 0, k = 0: every partition qualifies.
        assert_eq!(valuation_fraction_sym(12, 0, 2, 0), Proportion::new(77, 77));
        // Counting v_2(f) >= 1 + v_2(12) = 3 must match a direct sweep.
        let direct = enumerate_partitions(12).filter(|l| vq_degree(l, 2) >= 3).count() as u64;
        assert_eq!(valuation_fraction_sym(12, 1, 2, 1).count, direct);
    }
}
