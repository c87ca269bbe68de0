//! The demi-hyperoctahedral group (type D): the index-2 subgroup of signed
//! permutations with an even number of sign changes.
//!
//! Its irreps come from restricting hyperoctahedral irreps: `(alpha, beta)`
//! with `alpha != beta` stays irreducible (and pairs up with
//! `(beta, alpha)`), while `(alpha, alpha)` splits into two halves labelled
//! `+` and `-`. The `±` halves agree everywhere except on split classes, so
//! on non-split classes their value is exactly half the unrestricted one.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hyperoct::{embed_class, BnCharEvaluator, SignedCycleType};
use crate::partitions::{
    bipartition_count, enumerate_bipartitions, enumerate_partitions, partition_count, BiPartition,
    Partition,
};
use crate::{Proportion, Rational};

/// Irrep label of the demi-hyperoctahedral group of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DnIrrepLabel {
    /// Restriction of `(alpha, beta)` with `alpha != beta`; stored with
    /// `alpha > beta` lexicographically since the two orders restrict to the
    /// same irrep.
    Pair(BiPartition),
    /// The `+` half of `(alpha, alpha)`; only exists for even rank.
    SplitPlus(Partition),
    /// The `-` half of `(alpha, alpha)`.
    SplitMinus(Partition),
}

impl DnIrrepLabel {
    /// Canonical unordered-pair label.
    pub fn pair(a: Partition, b: Partition) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidPartition);
        }
        if a > b {
            Ok(DnIrrepLabel::Pair(BiPartition::new(a, b)))
        } else {
            Ok(DnIrrepLabel::Pair(BiPartition::new(b, a)))
        }
    }

    /// The hyperoctahedral label whose restriction this comes from.
    pub fn parent(&self) -> BiPartition {
        match self {
            DnIrrepLabel::Pair(bp) => bp.clone(),
            DnIrrepLabel::SplitPlus(a) | DnIrrepLabel::SplitMinus(a) => {
                BiPartition::new(a.clone(), a.clone())
            }
        }
    }
}

impl core::fmt::Display for DnIrrepLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DnIrrepLabel::Pair(bp) => write!(f, "{{{},{}}}", bp.alpha, bp.beta),
            DnIrrepLabel::SplitPlus(a) => write!(f, "{a}+"),
            DnIrrepLabel::SplitMinus(a) => write!(f, "{a}-"),
        }
    }
}

/// Whether the hyperoctahedral class `(lambda, mu)` splits into two
/// demi-hyperoctahedral classes: exactly when there are no negative cycles
/// and every positive cycle length is even.
pub fn class_splits(class: &SignedCycleType) -> bool {
    class.negative.is_empty() && class.positive.parts().iter().all(|&p| p % 2 == 0)
}

/// Number of irreducible representations of rank `n`: `p_2(n)/2` for odd
/// `n`, `(p_2(n) + 3 p(n/2))/2` for even `n`.
pub fn irr_count_dn(n: u32) -> BigUint {
    let p2 = bipartition_count(n);
    if n % 2 == 0 {
        (p2 + BigUint::from(3u32) * partition_count(n / 2)) / BigUint::from(2u32)
    } else {
        p2 / BigUint::from(2u32)
    }
}

/// All irrep labels of rank `n` in a fixed order: unordered pairs first,
/// then the `±` halves.
pub fn enumerate_labels(n: u32) -> Vec<DnIrrepLabel> {
    let mut labels: Vec<DnIrrepLabel> = enumerate_bipartitions(n)
        .filter(|bp| bp.alpha > bp.beta)
        .map(DnIrrepLabel::Pair)
        .collect();
    if n % 2 == 0 {
        for a in enumerate_partitions(n / 2) {
            labels.push(DnIrrepLabel::SplitPlus(a.clone()));
            labels.push(DnIrrepLabel::SplitMinus(a));
        }
    }
    labels
}

/// Dimension of a label: pairs keep the parent dimension, halves get half.
pub fn dim_dn(n: u32, label: &DnIrrepLabel) -> Result<BigUint> {
    let parent = crate::hyperoct::dim_bn(n, &label.parent())?;
    Ok(match label {
        DnIrrepLabel::Pair(_) => parent,
        _ => parent / BigUint::from(2u32),
    })
}

/// Character value of `label` on the class `(lambda, mu)`, via restriction.
///
/// Pair labels are valid on every class (the value is read off the canonical
/// ordered parent). `±` labels are only defined on non-split classes, where
/// the two halves agree and the parent value divides exactly by two;
/// requesting them on a split class is an error.
pub fn dn_character_with(
    ev: &mut BnCharEvaluator,
    label: &DnIrrepLabel,
    class: &SignedCycleType,
) -> Result<BigInt> {
    match label {
        DnIrrepLabel::Pair(bp) => ev.eval(bp, class),
        DnIrrepLabel::SplitPlus(a) | DnIrrepLabel::SplitMinus(a) => {
            if class_splits(class) {
                return Err(Error::SplitClassValue);
            }
            let parent = BiPartition::new(a.clone(), a.clone());
            let chi = ev.eval(&parent, class)?;
            let (half, rem) = num_integer::Integer::div_rem(&chi, &BigInt::from(2));
            assert!(rem.is_zero(), "parent value must be even on non-split classes");
            Ok(half)
        }
    }
}

pub fn dn_character(label: &DnIrrepLabel, class: &SignedCycleType) -> Result<BigInt> {
    dn_character_with(&mut BnCharEvaluator::new(), label, class)
}

/// Share of `±` labels among all irreducibles of even rank `n`, counted with
/// both signs: `4 p(n/2) / (p_2(n) + 3 p(n/2))`, together with the crude
/// bound `4 / p(n/2)` it stays below once `p_2(n) > p(n/2)^2`.
pub fn split_rep_fraction(n: u32) -> Result<(Rational, Rational)> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::EvenRankRequired { n });
    }
    let p_half = BigInt::from(partition_count(n / 2));
    let p2 = BigInt::from(bipartition_count(n));
    let fraction = Rational::new(4 * &p_half, p2 + 3 * &p_half);
    let bound = Rational::new(BigInt::from(4), p_half);
    Ok((fraction, bound))
}

/// Fraction of demi-hyperoctahedral irreps of rank `n` whose value at the
/// embedded `base` class (rank `k < n`, so the class has a fixed point and
/// never splits) is divisible by `d`. Zero counts as divisible; each `±`
/// half counts separately.
pub fn dn_statistic(n: u32, k: u32, base: &SignedCycleType, d: u64) -> Result<Proportion> {
    dn_statistic_with(&mut BnCharEvaluator::new(), n, k, base, d)
}

/// [`dn_statistic`] with a caller-held evaluator (shared with the ambient
/// hyperoctahedral sweeps).
pub fn dn_statistic_with(
    ev: &mut BnCharEvaluator,
    n: u32,
    k: u32,
    base: &SignedCycleType,
    d: u64,
) -> Result<Proportion> {
    if base.size() != k {
        return Err(Error::SizeMismatch { expected: k, actual: base.size() });
    }
    if k >= n {
        return Err(Error::StrictEmbedRequired { k, n });
    }
    assert!(d >= 1);
    let class = embed_class(base, n)?;
    debug_assert!(!class_splits(&class));
    let d = BigInt::from(d);
    let mut count = 0u64;
    let mut total = 0u64;
    for label in enumerate_labels(n) {
        let chi = dn_character_with(ev, &label, &class)?;
        if (chi % &d).is_zero() {
            count += 1;
        }
        total += 1;
    }
    Ok(Proportion::new(count, total))
}
