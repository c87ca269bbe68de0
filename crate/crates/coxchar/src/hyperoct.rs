//! Hyperoctahedral groups: signed permutations, conjugacy data, wreath-product
//! Murnaghan–Nakayama characters, a brute-force induced-character oracle, and
//! the type-B divisibility statistics.
//!
//! Irreps are labelled by ordered bipartitions `(alpha, beta)`; the `beta`
//! component carries the sign character of the `C_2^n` base. Conjugacy
//! classes are labelled by signed cycle types `(lambda, mu)` where `mu` lists
//! the negative cycle lengths.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::num_util;
use crate::partitions::{border_strips, enumerate_bipartitions, BiPartition, Partition};
use crate::symchar::SymCharEvaluator;
use crate::valuations::{vq_degree_histogram, vq_embedding_factor};
use crate::{Proportion, Rational};

/// Hard cap for the brute-force oracle; `|B_5| = 3840` is the largest group
/// the conjugation sweep enumerates in reasonable time.
pub const ORACLE_CAP: u32 = 5;

/// A signed permutation of `{±1, ..., ±n}` with `sigma(-i) = -sigma(i)`,
/// stored through the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    /// Validates that `|images|` is a permutation of `1..=n` with no zeros.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPartition);
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: u32) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of `i` (negative arguments allowed).
    pub fn apply(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.images.len());
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        SignedPermutation {
            images: (1..=self.images.len() as i32).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0i32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            let i = i as i32 + 1;
            if j > 0 {
                images[(j - 1) as usize] = i;
            } else {
                images[(-j - 1) as usize] = -i;
            }
        }
        SignedPermutation { images }
    }

    /// `x * self * x^{-1}`.
    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.compose(self).compose(&x.inverse())
    }

    /// Number of `i` in `1..=n` with a negative image; its parity is the
    /// value of the sign character of the `C_2^n` base.
    pub fn negative_entries(&self) -> u32 {
        self.images.iter().filter(|&&v| v < 0).count() as u32
    }

    /// Whether letters `1..=a` and `a+1..=n` are preserved setwise.
    pub fn preserves_split(&self, a: u32) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| (i < a as usize) == (v.unsigned_abs() <= a))
    }

    /// Restriction to letters `lo..=hi` (1-based, inclusive), renumbered from 1.
    pub fn restrict(&self, lo: u32, hi: u32) -> Self {
        let images = (lo..=hi)
            .map(|i| {
                let v = self.images[(i - 1) as usize];
                debug_assert!(v.unsigned_abs() >= lo && v.unsigned_abs() <= hi);
                let shifted = v.unsigned_abs() - lo + 1;
                if v > 0 {
                    shifted as i32
                } else {
                    -(shifted as i32)
                }
            })
            .collect();
        SignedPermutation { images }
    }
}

/// Conjugacy-class label of a signed permutation: positive cycle lengths in
/// `positive`, negative cycle lengths in `negative`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCycleType {
    pub positive: Partition,
    pub negative: Partition,
}

impl SignedCycleType {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        SignedCycleType { positive, negative }
    }

    pub fn size(&self) -> u32 {
        self.positive.size() + self.negative.size()
    }

    /// Value of the base sign character on this class: `(-1)^(number of
    /// negative cycles)`. Elements lie in the demi-hyperoctahedral subgroup
    /// exactly when this is `+1`.
    pub fn base_sign(&self) -> i8 {
        if self.negative.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Canonical representative: cycles laid out on consecutive letters.
    pub fn representative(&self) -> SignedPermutation {
        let mut images = Vec::with_capacity(self.size() as usize);
        let mut next = 1i32;
        for (parts, negative) in [(&self.positive, false), (&self.negative, true)] {
            for &l in parts.parts() {
                let l = l as i32;
                for j in 0..l {
                    if j + 1 < l {
                        images.push(next + j + 1);
                    } else if negative {
                        images.push(-next);
                    } else {
                        images.push(next);
                    }
                }
                next += l;
            }
        }
        SignedPermutation { images }
    }
}

impl core::fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}|{}", self.positive, self.negative)
    }
}

/// Signed cycle type of a signed permutation: follow orbits of the underlying
/// permutation of `1..=n`; the product of the image signs along an orbit
/// decides positive versus negative.
pub fn cycle_type(sigma: &SignedPermutation) -> SignedCycleType {
    let n = sigma.rank() as usize;
    let mut visited = alloc::vec![false; n];
    let mut pos: Vec<u32> = Vec::new();
    let mut neg: Vec<u32> = Vec::new();
    for start in 1..=n {
        if visited[start - 1] {
            continue;
        }
        let mut j = start;
        let mut len = 0u32;
        let mut sign = 1i32;
        loop {
            visited[j - 1] = true;
            len += 1;
            let im = sigma.images[j - 1];
            sign *= im.signum();
            j = im.unsigned_abs() as usize;
            if j == start {
                break;
            }
        }
        if sign > 0 {
            pos.push(len);
        } else {
            neg.push(len);
        }
    }
    pos.sort_unstable_by(|a, b| b.cmp(a));
    neg.sort_unstable_by(|a, b| b.cmp(a));
    SignedCycleType::new(
        Partition::new(pos).expect("sorted cycle lengths"),
        Partition::new(neg).expect("sorted cycle lengths"),
    )
}

/// All `2^n n!` elements of the rank-`n` hyperoctahedral group, in a fixed
/// order. Exponential; intended for the oracle range only.
pub fn enumerate_group(n: u32) -> Vec<SignedPermutation> {
    let n = n as usize;
    let mut perms: Vec<Vec<i32>> = Vec::new();
    let mut scratch = Vec::with_capacity(n);
    all_permutations(&(1..=n as i32).collect::<Vec<_>>(), &mut scratch, &mut perms);
    let mut out = Vec::with_capacity(perms.len() << n);
    for perm in &perms {
        for mask in 0u32..(1 << n) {
            let images = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { images });
        }
    }
    out
}

fn all_permutations(pool: &[i32], prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if pool.is_empty() {
        out.push(prefix.clone());
        return;
    }
    for (i, &v) in pool.iter().enumerate() {
        let mut rest = pool.to_vec();
        rest.remove(i);
        prefix.push(v);
        all_permutations(&rest, prefix, out);
        prefix.pop();
    }
}

/// Size of the conjugacy class with signed cycle type `(lambda, mu)` in rank
/// `n`: `2^n n! / (2^{l(lambda)+l(mu)} z_lambda z_mu)`.
pub fn class_size_bn(n: u32, class: &SignedCycleType) -> Result<BigUint> {
    if class.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: class.size() });
    }
    let num = num_util::pow2(n) * num_util::factorial(n);
    let den = num_util::pow2((class.positive.len() + class.negative.len()) as u32)
        * crate::partitions::centralizer_size(&class.positive)
        * crate::partitions::centralizer_size(&class.negative);
    Ok(num / den)
}

/// Dimension of the irrep `(alpha, beta)` in rank `n`:
/// `binom(n, |alpha|) f_alpha f_beta`.
pub fn dim_bn(n: u32, pair: &BiPartition) -> Result<BigUint> {
    if pair.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: pair.size() });
    }
    Ok(num_util::binomial(n, pair.alpha.size())
        * crate::partitions::degree_sym(&pair.alpha)
        * crate::partitions::degree_sym(&pair.beta))
}

/// Pads the positive component with fixed points to reach rank `n`; this is
/// the class of the embedded element. Composing embeddings is the same as
/// embedding once.
pub fn embed_class(class: &SignedCycleType, n: u32) -> Result<SignedCycleType> {
    let k = class.size();
    if k > n {
        return Err(Error::EmbedBeyondRank { k, n });
    }
    Ok(SignedCycleType::new(class.positive.pad_with_ones(n - k), class.negative.clone()))
}

/// Wreath-product Murnaghan–Nakayama evaluator for hyperoctahedral
/// characters, memoized on `(alpha, beta, remaining signed cycles)`.
///
/// Each cycle of the class removes a border strip of its length from either
/// component with the usual leg sign; a negative cycle picks up an extra `-1`
/// when the strip comes from the sign-twisted component `beta`. The oracle
/// equality tests pin this convention (the rank-1 group already separates the
/// two choices).
#[derive(Default)]
pub struct BnCharEvaluator {
    memo: BTreeMap<(Vec<u32>, Vec<u32>, Vec<(u32, bool)>), BigInt>,
}

/// Cycles as `(length, is_negative)`, largest first, positive before negative.
fn canonical_cycles(class: &SignedCycleType) -> Vec<(u32, bool)> {
    let mut cycles: Vec<(u32, bool)> = class
        .positive
        .parts()
        .iter()
        .map(|&t| (t, false))
        .chain(class.negative.parts().iter().map(|&t| (t, true)))
        .collect();
    cycles.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    cycles
}

impl BnCharEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, pair: &BiPartition, class: &SignedCycleType) -> Result<BigInt> {
        if pair.size() != class.size() {
            return Err(Error::SizeMismatch { expected: pair.size(), actual: class.size() });
        }
        Ok(self.eval_cycles(&pair.alpha, &pair.beta, &canonical_cycles(class)))
    }

    fn eval_cycles(&mut self, alpha: &Partition, beta: &Partition, cycles: &[(u32, bool)]) -> BigInt {
        if cycles.is_empty() {
            return BigInt::one();
        }
        let key = (alpha.parts().to_vec(), beta.parts().to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (t, is_negative) = cycles[0];
        let rest = &cycles[1..];
        let mut acc = BigInt::zero();
        for (sub, leg) in border_strips(alpha, t) {
            let term = self.eval_cycles(&sub, beta, rest);
            if leg % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        for (sub, leg) in border_strips(beta, t) {
            let term = self.eval_cycles(alpha, &sub, rest);
            let negate = (leg % 2 == 1) ^ is_negative;
            if negate {
                acc -= term;
            } else {
                acc += term;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// One-shot hyperoctahedral character value; use [`BnCharEvaluator`] for
/// sweeps.
pub fn mn_character_bn(pair: &BiPartition, class: &SignedCycleType) -> Result<BigInt> {
    BnCharEvaluator::new().eval(pair, class)
}

/// Character of the irrep `(alpha, beta)` at `w`, computed from scratch as an
/// induced character: average `chi_alpha ⊠ (sign ⊗ chi_beta)` over all
/// conjugates of `w` landing in the block subgroup. This is the independent
/// oracle for [`mn_character_bn`]; it never touches border strips.
pub fn induced_character_oracle(
    n: u32,
    pair: &BiPartition,
    w: &SignedPermutation,
) -> Result<Rational> {
    if n > ORACLE_CAP {
        return Err(Error::OracleCap { n, cap: ORACLE_CAP });
    }
    if pair.size() != n || w.rank() != n {
        return Err(Error::SizeMismatch { expected: n, actual: pair.size().max(w.rank()) });
    }
    let a = pair.alpha.size();
    let mut sym = SymCharEvaluator::new();
    let mut acc = BigInt::zero();
    for x in enumerate_group(n) {
        let h = w.conjugate_by(&x);
        if !h.preserves_split(a) {
            continue;
        }
        let mut term = BigInt::one();
        if a > 0 {
            let block = h.restrict(1, a);
            term *= sym.eval(&pair.alpha, &underlying_type(&block))?;
        }
        if n - a > 0 {
            let block = h.restrict(a + 1, n);
            term *= sym.eval(&pair.beta, &underlying_type(&block))?;
            if block.negative_entries() % 2 == 1 {
                term = -term;
            }
        }
        acc += term;
    }
    let subgroup_order = num_util::pow2(a) * num_util::factorial(a)
        * num_util::pow2(n - a) * num_util::factorial(n - a);
    Ok(Rational::new(acc, BigInt::from(subgroup_order)))
}

/// Cycle type of the underlying (unsigned) permutation: positive and negative
/// cycle lengths merged.
fn underlying_type(sigma: &SignedPermutation) -> Partition {
    let t = cycle_type(sigma);
    let mut parts: Vec<u32> =
        t.positive.parts().iter().chain(t.negative.parts()).copied().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted parts")
}

/// The integrality certificate behind the valuation bound: for `w` in the
/// class of `base` embedded in rank `n`,
/// `m = chi(w) 2^k (n)_k / (binom(n,|alpha|) f_alpha f_beta 2^(l(lambda)+l(mu)))`
/// is always an integer. Returned as an exact rational so tests can assert
/// integrality rather than assume it.
pub fn lemma_certificate(
    n: u32,
    pair: &BiPartition,
    base: &SignedCycleType,
) -> Result<Rational> {
    lemma_certificate_with(&mut BnCharEvaluator::new(), n, pair, base)
}

/// [`lemma_certificate`] with a caller-held evaluator, for batch sweeps.
pub fn lemma_certificate_with(
    ev: &mut BnCharEvaluator,
    n: u32,
    pair: &BiPartition,
    base: &SignedCycleType,
) -> Result<Rational> {
    let k = base.size();
    let class = embed_class(base, n)?;
    let chi = ev.eval(pair, &class)?;
    let mut falling = BigUint::one();
    for i in 0..k {
        falling *= u64::from(n - i);
    }
    let numer = chi * BigInt::from(num_util::pow2(k) * falling);
    let denom = num_util::binomial(n, pair.alpha.size())
        * crate::partitions::degree_sym(&pair.alpha)
        * crate::partitions::degree_sym(&pair.beta)
        * num_util::pow2((base.positive.len() + base.negative.len()) as u32);
    Ok(Rational::new(numer, BigInt::from(denom)))
}

/// Fraction of irreps of rank `n` whose character at the embedded `base`
/// class is divisible by `d` (zero counts as divisible); exact over `p_2(n)`.
pub fn bn_statistic(n: u32, k: u32, base: &SignedCycleType, d: u64) -> Result<Proportion> {
    bn_statistic_with(&mut BnCharEvaluator::new(), n, k, base, d)
}

/// [`bn_statistic`] with a caller-held evaluator so chained sweeps share the
/// memo table across ranks.
pub fn bn_statistic_with(
    ev: &mut BnCharEvaluator,
    n: u32,
    k: u32,
    base: &SignedCycleType,
    d: u64,
) -> Result<Proportion> {
    if base.size() != k {
        return Err(Error::SizeMismatch { expected: k, actual: base.size() });
    }
    assert!(d >= 1);
    let class = embed_class(base, n)?;
    let d = BigInt::from(d);
    let mut count = 0u64;
    let mut total = 0u64;
    for pair in enumerate_bipartitions(n) {
        let chi = ev.eval(&pair, &class)?;
        if (chi % &d).is_zero() {
            count += 1;
        }
        total += 1;
    }
    Ok(Proportion::new(count, total))
}

/// Fraction of bipartitions `(alpha, beta)` of `n` with
/// `v_q(f_alpha) + v_q(f_beta) - v_q(2^k (n)_k) >= r`: the sufficient
/// condition for `q^r` to divide the character value at any class embedded
/// from rank `k`. Computed from per-size valuation histograms, so it scales
/// to `n ~ 50` where `p_2(n)` exceeds `10^8`.
pub fn valuation_fraction_bn(n: u32, k: u32, q: u32, r: u64) -> Proportion {
    let hists: Vec<Vec<u64>> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..=n).into_par_iter().map(|a| vq_degree_histogram(a, q)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..=n).map(|a| vq_degree_histogram(a, q)).collect()
        }
    };
    valuation_fraction_bn_from_histograms(n, k, q, r, &hists)
}

/// [`valuation_fraction_bn`] with caller-supplied valuation histograms
/// (`hists[a]` for partitions of `a`, `0 <= a <= n`), so precomputed blocks
/// can be reused across sweeps.
pub fn valuation_fraction_bn_from_histograms(
    n: u32,
    k: u32,
    q: u32,
    r: u64,
    hists: &[Vec<u64>],
) -> Proportion {
    assert!(k <= n);
    assert_eq!(hists.len(), n as usize + 1);
    let need = r + vq_embedding_factor(u64::from(n), u64::from(k), q).exact;
    // tails[b][t] = #(partitions of b with valuation >= t)
    let tails: Vec<Vec<u64>> = hists
        .iter()
        .map(|h| {
            let mut tail = h.clone();
            tail.push(0);
            for i in (0..h.len()).rev() {
                tail[i] += tail[i + 1];
            }
            tail
        })
        .collect();
    let mut count = 0u64;
    let mut total = 0u64;
    for a in 0..=n as usize {
        let b = n as usize - a;
        let pa: u64 = hists[a].iter().sum();
        let pb: u64 = hists[b].iter().sum();
        total += pa * pb;
        for (v1, &c1) in hists[a].iter().enumerate() {
            if c1 == 0 {
                continue;
            }
            let want = need.saturating_sub(v1 as u64) as usize;
            let cnt = *tails[b].get(want).unwrap_or(&0);
            count += c1 * cnt;
        }
    }
    Proportion::new(count, total)
}

/// Checks the central-character integrality `chi(w) |class| / dim` at
/// oracle scale. Always true for genuine character data; exposed as a check
/// rather than an assumption.
pub fn central_character_integrality(
    n: u32,
    pair: &BiPartition,
    class: &SignedCycleType,
) -> Result<bool> {
    let chi = mn_character_bn(pair, class)?;
    let size = BigInt::from(class_size_bn(n, class)?);
    let dim = BigInt::from(dim_bn(n, pair)?);
    Ok((chi * size % dim).is_zero())
}

/// Convenience: `chi` is divisible by `d`, with 0 divisible by everything.
pub fn int_divisible(chi: &BigInt, d: u64) -> bool {
    (chi % BigInt::from(d)).is_zero()
}

/// `p_2(n)` as a machine integer (sweep scale).
pub fn bipartition_total(n: u32) -> u64 {
    crate::partitions::bipartition_count(n).to_u64().expect("p_2(n) fits in u64 at sweep scale")
}
