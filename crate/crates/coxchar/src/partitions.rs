//! Integer partitions, bipartitions, hook lengths, degrees and centralizers.
//!
//! Partitions index both the irreducible representations and the conjugacy
//! classes of the symmetric group; ordered pairs of partitions (bipartitions)
//! play the same double role for the hyperoctahedral group. Everything here
//! is exact: counts and degrees are big integers, never floats.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num_util;

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0.
///
/// `Ord` compares part lists lexicographically, so partitions of the same
/// size sort in the same order the enumerator emits them (largest first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let valid = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if !valid {
            return Err(Error::InvalidPartition);
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Convenience constructor; panics on invalid input.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part multiplicities as `part -> multiplicity`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The conjugate (transposed Young diagram) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts, n: self.n }
    }

    /// Appends `count` trailing parts equal to 1.
    pub fn pad_with_ones(&self, count: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(core::iter::repeat(1).take(count as usize));
        Partition { parts, n: self.n + count }
    }

    /// First-column hook lengths: `parts[i] + (len - 1 - i)`, strictly
    /// decreasing. Border-strip removal is bookkeeping on this set.
    fn beta_set(&self) -> Vec<u32> {
        let l = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (l - 1 - i) as u32)
            .collect()
    }

    fn from_beta_set(mut beta: Vec<u32>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let l = beta.len();
        let parts: Vec<u32> = beta
            .into_iter()
            .enumerate()
            .map(|(i, b)| b - (l - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let n = parts.iter().sum();
        Partition { parts, n }
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// An ordered pair of partitions with `size = |alpha| + |beta|`.
///
/// The order is significant: `(alpha, beta)` and `(beta, alpha)` label
/// different hyperoctahedral irreps unless the components coincide.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl BiPartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BiPartition { alpha, beta }
    }

    pub fn size(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }

    pub fn swapped(&self) -> BiPartition {
        BiPartition::new(self.beta.clone(), self.alpha.clone())
    }
}

impl core::fmt::Display for BiPartition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

/// Iterator over all partitions of `n` in descending lexicographic order:
/// `(n)` first, `(1,...,1)` last.
///
/// The iterator is a plain `Iterator` over immutable values, so consumers may
/// buffer chunks and process them on worker threads freely.
pub struct PartitionIter {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let item = Partition { n: cur.iter().sum(), parts: cur.clone() };
        self.next = next_descending(cur);
        Some(item)
    }
}

fn next_descending(mut cur: Vec<u32>) -> Option<Vec<u32>> {
    // Rightmost part we can still decrement.
    let i = cur.iter().rposition(|&p| p > 1)?;
    let trailing_ones = (cur.len() - 1 - i) as u32;
    let total = cur[i] + trailing_ones;
    let v = cur[i] - 1;
    cur.truncate(i);
    // Refill with maximal chunks of the new value, remainder last.
    let mut remaining = total;
    cur.push(v);
    remaining -= v;
    while remaining > v {
        cur.push(v);
        remaining -= v;
    }
    if remaining > 0 {
        cur.push(remaining);
    }
    Some(cur)
}

/// All partitions of `n`, descending lexicographic.
pub fn enumerate_partitions(n: u32) -> PartitionIter {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    PartitionIter { next: Some(first) }
}

/// Iterator over all bipartitions of `n`: the first component runs from
/// partitions of `n` down to partitions of 0, each side in descending
/// lexicographic order.
pub struct BiPartitionIter {
    n: u32,
    a: u32,
    alpha: Option<Partition>,
    alpha_iter: PartitionIter,
    beta_iter: PartitionIter,
}

impl Iterator for BiPartitionIter {
    type Item = BiPartition;

    fn next(&mut self) -> Option<BiPartition> {
        loop {
            let alpha = self.alpha.as_ref()?;
            if let Some(beta) = self.beta_iter.next() {
                return Some(BiPartition::new(alpha.clone(), beta));
            }
            // Advance alpha, or move to the next split size.
            match self.alpha_iter.next() {
                Some(next_alpha) => {
                    self.alpha = Some(next_alpha);
                    self.beta_iter = enumerate_partitions(self.n - self.a);
                }
                None => {
                    if self.a == 0 {
                        self.alpha = None;
                        return None;
                    }
                    self.a -= 1;
                    self.alpha_iter = enumerate_partitions(self.a);
                    self.alpha = self.alpha_iter.next();
                    self.beta_iter = enumerate_partitions(self.n - self.a);
                }
            }
        }
    }
}

/// All bipartitions of `n` in a fixed deterministic order.
pub fn enumerate_bipartitions(n: u32) -> BiPartitionIter {
    let mut alpha_iter = enumerate_partitions(n);
    let alpha = alpha_iter.next();
    BiPartitionIter { n, a: n, alpha, alpha_iter, beta_iter: enumerate_partitions(0) }
}

/// `p(0..=n)` by Euler's pentagonal-number recurrence, exact.
pub fn partition_counts_upto(n: u32) -> Vec<BigUint> {
    let n = n as usize;
    let mut table: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for i in 1..=n {
        let mut acc = BigInt::zero();
        let mut j: usize = 1;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * &table[i - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= i {
                acc += sign * &table[i - g2];
            }
            j += 1;
        }
        table[i] = acc;
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("partition counts are nonnegative"))
        .collect()
}

/// `p(n)`, the number of partitions of `n`.
pub fn partition_count(n: u32) -> BigUint {
    partition_counts_upto(n).pop().expect("nonempty table")
}

/// `p_2(n) = sum_a p(a) p(n-a)`, the number of bipartitions of `n`.
pub fn bipartition_count(n: u32) -> BigUint {
    let p = partition_counts_upto(n);
    let mut acc = BigUint::zero();
    for a in 0..=n as usize {
        acc += &p[a] * &p[n as usize - a];
    }
    acc
}

/// Hook lengths of the Young diagram, one per cell (row-major).
pub fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let conj_parts = conj.parts();
    let mut hooks = Vec::with_capacity(lambda.size() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            hooks.push(row - j as u32 + conj_parts[j] - i as u32 - 1);
        }
    }
    hooks
}

/// Degree of the symmetric-group irrep labelled by `lambda`: `n!` divided by
/// the product of all hook lengths (always exact).
pub fn degree_sym(lambda: &Partition) -> BigUint {
    let mut f = num_util::factorial(lambda.size());
    for h in hook_lengths(lambda) {
        f /= h;
    }
    f
}

/// Centralizer order of a symmetric-group element of cycle type `delta`:
/// the product of `i^{m_i} m_i!` over part multiplicities.
pub fn centralizer_size(delta: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in delta.multiplicities() {
        z *= BigUint::from(part).pow(mult);
        z *= num_util::factorial(mult);
    }
    z
}

/// All ways of removing a border strip of `strip` cells from `lambda`.
///
/// Returns the leftover shape and the leg length (rows spanned minus one) of
/// each removable strip. Implemented on the beta-set: a strip of length `t`
/// removable at `b` corresponds to `b - t >= 0` not already present.
pub fn border_strips(lambda: &Partition, strip: u32) -> Vec<(Partition, u32)> {
    if strip == 0 || strip > lambda.size() {
        return Vec::new();
    }
    let beta = lambda.beta_set();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let nb = b - strip;
        if beta.contains(&nb) {
            continue;
        }
        let leg = beta.iter().filter(|&&c| nb < c && c < b).count() as u32;
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        out.push((Partition::from_beta_set(nbeta), leg));
    }
    out
}
