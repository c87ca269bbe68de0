//! Independent symmetric-group character oracle for tests.
//!
//! Computes `chi_lambda(mu)` from the determinantal expansion of a Schur
//! function in complete homogeneous symmetric functions: the character is the
//! signed sum over permutations of permutation-character values
//! `phi_nu(mu)`, where `phi_nu` counts the ways to scatter the cycles of
//! `mu` over bins of capacities `nu`. No border strips anywhere, so this is
//! a genuinely different evaluation route from the library's recursion.

use std::collections::BTreeMap;

use coxchar::Partition;

#[derive(Default)]
pub struct JacobiTrudiOracle {
    perm_char_memo: BTreeMap<(Vec<u32>, Vec<u32>), i64>,
}

impl JacobiTrudiOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lambda.size(), mu.size());
        let l = lambda.len();
        if l == 0 {
            return 1;
        }
        let mut total = 0i64;
        let mut perm: Vec<usize> = (0..l).collect();
        permute(&mut perm, 0, &mut |sigma| {
            // nu_i = lambda_i - i + sigma(i), 0-indexed both ways.
            let nu: Vec<i64> = lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &part)| part as i64 - i as i64 + sigma[i] as i64)
                .collect();
            if nu.iter().any(|&v| v < 0) {
                return;
            }
            let mut bins: Vec<u32> = nu.iter().map(|&v| v as u32).collect();
            bins.sort_unstable_by(|a, b| b.cmp(a));
            while bins.last() == Some(&0) {
                bins.pop();
            }
            let phi = self.permutation_character(&bins, mu.parts());
            total += parity(sigma) * phi;
        });
        total
    }

    /// Number of maps from the cycle list of `mu` onto bins filling each
    /// capacity exactly; dynamic programming over remaining capacities.
    fn permutation_character(&mut self, bins: &[u32], cycles: &[u32]) -> i64 {
        let key = (bins.to_vec(), cycles.to_vec());
        if let Some(&v) = self.perm_char_memo.get(&key) {
            return v;
        }
        let mut states: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        states.insert(bins.to_vec(), 1);
        for &c in cycles {
            let mut next: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for (caps, ways) in &states {
                for i in 0..caps.len() {
                    if caps[i] >= c {
                        let mut reduced = caps.clone();
                        reduced[i] -= c;
                        *next.entry(reduced).or_insert(0) += ways;
                    }
                }
            }
            states = next;
        }
        let zero = vec![0u32; bins.len()];
        let v = states.get(&zero).copied().unwrap_or(0);
        self.perm_char_memo.insert(key, v);
        v
    }
}

fn parity(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
