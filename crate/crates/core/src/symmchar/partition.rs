use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary positive parts into a partition; zeros are dropped.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The hook [i, 1^{n−i}] for 1 ≤ i ≤ n.
    pub fn hook(n: u32, i: u32) -> Self {
        assert!(1 <= i && i <= n);
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, (n - i) as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        out
    }

    /// Hook lengths of the diagonal cells, decreasing.
    pub fn diagonal_hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        (0..self.parts.len())
            .take_while(|&i| self.parts[i] as usize > i)
            .map(|i| self.parts[i] + conj.parts[i] - 2 * i as u32 - 1)
            .collect()
    }

    /// Order of the centralizer of a permutation with this cycle type: Π k^{m_k} m_k!.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0u32;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
                z *= BigUint::from(k) * BigUint::from(m);
            }
        }
        z
    }

    /// Order of a permutation with this cycle type.
    pub fn element_order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &k| acc.lcm(&(k as u64)))
    }

    /// Whether a permutation with this cycle type is even.
    pub fn is_even_permutation(&self) -> bool {
        self.parts.iter().filter(|&&k| k % 2 == 0).count() % 2 == 0
    }

    /// Whether the S_n class splits in A_n (distinct odd parts).
    pub fn splits_in_alternating(&self) -> bool {
        self.parts.iter().all(|&k| k % 2 == 1) && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Cycle type of the p-th power of a permutation with this cycle type.
    pub fn power(&self, p: u32) -> Self {
        let mut parts = Vec::new();
        for &k in &self.parts {
            let g = k.gcd(&p);
            parts.extend(std::iter::repeat_n(k / g, g as usize));
        }
        Partition::from_parts(parts)
    }
}

impl std::ops::Index<usize> for Partition {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.parts[i]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            rec(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn pentagonal(n: usize) -> Vec<u64> {
        let mut a = vec![0i64; n + 1];
        a[0] = 1;
        for m in 1..=n {
            let mut k: i64 = 1;
            let mut s = 0i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * a[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    s += sign * a[m - g2];
                }
                k += 1;
            }
            a[m] = s;
        }
        a.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn ordering_and_counts() {
        let four: Vec<Vec<u32>> = partitions_of(4).into_iter().map(Vec::from).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(0), vec![p(&[])]);
        let counts = pentagonal(20);
        for n in 0..=20u32 {
            assert_eq!(partitions_of(n).len() as u64, counts[n as usize]);
        }
        assert_eq!(partitions_of(16).len(), 231);
    }

    #[test]
    fn conjugates_and_hooks() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[2, 2]).is_self_conjugate());
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![3, 2, 2, 1]);
        assert_eq!(p(&[3, 1, 1]).diagonal_hooks(), vec![5]);
        assert_eq!(p(&[3, 2, 1]).diagonal_hooks(), vec![5, 1]);
        assert_eq!(p(&[2, 1, 1]).centralizer_order(), BigUint::from(4u32));
        assert_eq!(p(&[1, 1, 1, 1]).centralizer_order(), BigUint::from(24u32));
        assert_eq!(p(&[6, 4]).power(2), p(&[3, 3, 2, 2]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
