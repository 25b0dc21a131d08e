//! Oracles shared by several test targets.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use sylreg::ctable::{direct_product, CharacterTable, VirtualCharacter};
use sylreg::psl2gen::psl2;
use sylreg::search::{classify, Mode};
use sylreg::symmchar::{an_table, sn_table, Partition};

/// Coefficient of x^α in Π_i (x_1^{μ_i} + … + x_k^{μ_i}).
fn power_sum_coefficient(mu: &[u32], alpha: Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), i64>) -> i64 {
    if alpha.iter().any(|&a| a < 0) {
        return 0;
    }
    if mu.is_empty() {
        return i64::from(alpha.iter().all(|&a| a == 0));
    }
    let key = (mu.len(), alpha);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let alpha = key.1.clone();
    let mut total = 0;
    for j in 0..alpha.len() {
        let mut next = alpha.clone();
        next[j] -= mu[0] as i64;
        total += power_sum_coefficient(&mu[1..], next, memo);
    }
    memo.insert(key, total);
    total
}

/// All permutations of 0..k with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in signed_permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push((q, if (k - 1 - i).is_multiple_of(2) { s } else { -s }));
        }
    }
    out
}

/// χ^λ(μ) as the coefficient of x^{λ+δ} in a_δ·p_μ.
pub fn frobenius(lambda: &Partition, mu: &Partition) -> i64 {
    let k = lambda.len();
    let lam: Vec<i64> = (0..k).map(|i| lambda.parts()[i] as i64 + (k - 1 - i) as i64).collect();
    let mut memo = HashMap::new();
    signed_permutations(k)
        .into_iter()
        .map(|(perm, sign)| {
            let alpha: Vec<i64> = (0..k).map(|i| lam[i] - (k - 1 - perm[i]) as i64).collect();
            sign * power_sum_coefficient(mu.parts(), alpha, &mut memo)
        })
        .sum()
}

/// Every vector with m_0 ≤ ℓ and Σ m_i χ_i(1) = ℓ|G|_p, checked by direct evaluation.
pub fn naive(t: &CharacterTable, p: u64, mode: Mode, level: u64) -> BTreeSet<Vec<u64>> {
    let sylow = u64::try_from(t.sylow_order(p)).unwrap();
    let degrees: Vec<u64> = t.degrees().iter().map(|d| u64::try_from(d).unwrap()).collect();
    let levels: Vec<u64> = if mode.is_cumulative() { (1..=level).collect() } else { vec![level] };
    let mut out = BTreeSet::new();
    for l in levels {
        let target = l * sylow;
        let bounds: Vec<u64> =
            degrees.iter().enumerate().map(|(i, &d)| if i == 0 { l.min(target) } else { target / d }).collect();
        let mut m = vec![0u64; degrees.len()];
        loop {
            let deg: u64 = m.iter().zip(&degrees).map(|(a, b)| a * b).sum();
            if deg == target {
                let f = classify(t, p, &VirtualCharacter::new(m.clone())).unwrap();
                let ok = if mode.uses_singular_classes() { f.is_p_vanishing } else { f.is_syl_vanishing };
                if ok {
                    out.insert(m.clone());
                }
            }
            // odometer
            let mut i = 0;
            while i < m.len() && m[i] == bounds[i] {
                m[i] = 0;
                i += 1;
            }
            if i == m.len() {
                break;
            }
            m[i] += 1;
        }
    }
    out
}

/// Tables with at most 8 irreducibles, small enough for [`naive`].
pub fn small_tables() -> Vec<CharacterTable> {
    let v = vec![
        sn_table(3).unwrap(),
        sn_table(4).unwrap(),
        sn_table(5).unwrap(),
        an_table(4).unwrap(),
        an_table(5).unwrap(),
        an_table(6).unwrap(),
        psl2(7).unwrap(),
        psl2(11).unwrap(),
        direct_product(&sn_table(3).unwrap(), &sn_table(2).unwrap()),
    ];
    assert!(v.iter().all(|t| t.num_irreducibles() <= 8));
    v
}

/// Directory of ingested reference tables, if present.
pub fn fixtures_dir() -> Option<PathBuf> {
    let dir = std::env::var_os("SYLREG_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"));
    dir.is_dir().then_some(dir)
}
