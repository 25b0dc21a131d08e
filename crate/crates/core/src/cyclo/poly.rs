//! Cyclotomic polynomials with exact integer coefficients.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

type Memo = RwLock<HashMap<u32, Arc<Vec<i64>>>>;

fn memo() -> &'static Memo {
    static PHI: OnceLock<Memo> = OnceLock::new();
    PHI.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Euler's totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of Φ_n, lowest degree first. The polynomial is monic of degree φ(n).
///
/// Computed from x^n − 1 = Π_{d|n} Φ_d by exact division and memoized; the table
/// is shared between threads.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n > 0, "Φ_0 is undefined");
    if let Some(p) = memo().read().unwrap().get(&n) {
        return p.clone();
    }
    let poly = Arc::new(compute(n));
    memo().write().unwrap().entry(n).or_insert(poly).clone()
}

fn compute(n: u32) -> Vec<i64> {
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = divide_monic(&num, &div);
        }
    }
    num.into_iter().map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow")).collect()
}

fn divide_monic(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact division");
    quot
}

/// Value Φ_n(x) at an integer point.
pub fn cyclotomic_value(n: u32, x: &num_bigint::BigInt) -> num_bigint::BigInt {
    let poly = cyclotomic_poly(n);
    let mut acc = num_bigint::BigInt::from(0);
    for &c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_totient_and_first_large_coefficient() {
        for n in 1..200 {
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, euler_phi(n));
        }
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn values() {
        use num_bigint::BigInt;
        assert_eq!(cyclotomic_value(3, &BigInt::from(2)), BigInt::from(7));
        assert_eq!(cyclotomic_value(2, &BigInt::from(-3)), BigInt::from(-2));
    }
}
