//! Murnaghan–Nakayama rule via β-sets.
//!
//! Removing a rim hook of length r from λ corresponds to replacing some β in the
//! β-set {λ_i + (ℓ−1−i)} by β − r (which must be free and nonnegative); the sign is
//! (−1) to the number of β-values strictly between.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use super::Partition;
use crate::error::{Error, Result};

/// Memo table for MN evaluations, keyed by (remaining shape, remaining cycle type).
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// χ^λ evaluated at a permutation of cycle type μ.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(lambda.size() as usize, mu.size() as usize));
        }
        Ok(self.eval(lambda.parts().to_vec(), mu.parts()))
    }

    fn eval(&mut self, shape: Vec<u32>, mu: &[u32]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        if shape.len() <= 1 {
            // one-row shape: only the trivial character remains
            return 1;
        }
        let key = (shape, mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (shape, _) = &key;
        let r = mu[0];
        let l = shape.len() as u32;
        let beta: Vec<u32> = shape.iter().enumerate().map(|(i, &x)| x + (l - 1 - i as u32)).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r {
                continue;
            }
            let target = b - r;
            if beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut nb = beta.clone();
            nb[idx] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let next: Vec<u32> =
                nb.iter().enumerate().map(|(i, &x)| x - (l - 1 - i as u32)).filter(|&x| x > 0).collect();
            let v = self.eval(next, &mu[1..]);
            total += if between % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// χ^λ(μ) by the Murnaghan–Nakayama rule.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().value(lambda, mu)
}

/// n! divided by the product of hook lengths.
pub fn hook_degree(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let den: BigUint = lambda.hook_lengths().iter().map(|&h| BigUint::from(h)).product();
    num / den
}
