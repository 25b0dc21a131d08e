//! Small number-theory helpers on machine integers and big integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// (r, f) with q = r^f, r prime; `None` if q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let r = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut f = 0;
    let mut m = q;
    while m.is_multiple_of(r) {
        m /= r;
        f += 1;
    }
    (m == 1).then_some((r, f))
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn require_prime_power(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or(Error::NotPrimePower(q))
}

/// Largest power of p dividing n (n ≥ 1).
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    assert!(!n.is_zero(), "p-part of zero");
    let pb = BigUint::from(p);
    let mut m = n.clone();
    let mut out = BigUint::one();
    while (&m % &pb).is_zero() {
        m /= &pb;
        out *= &pb;
    }
    out
}

/// Exponent of p in n (n ≥ 1).
pub fn valuation(n: &BigUint, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let pb = BigUint::from(p);
    let mut m = n.clone();
    let mut v = 0;
    while (&m % &pb).is_zero() {
        m /= &pb;
        v += 1;
    }
    v
}

/// Exponent of p in n! (Legendre).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut pk = p;
    while pk <= n {
        v += n / pk;
        match pk.checked_mul(p) {
            Some(x) => pk = x,
            None => break,
        }
    }
    v
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1, m ≥ 2).
pub fn multiplicative_order(a: i64, m: u64) -> u64 {
    let a = a.rem_euclid(m as i64) as u64;
    assert!(a.gcd(&m) == 1, "{a} not invertible mod {m}");
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

pub fn pow(b: u64, e: u32) -> BigUint {
    BigUint::from(b).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(p_part(&BigUint::from(40320u32), 2), BigUint::from(128u32));
        assert_eq!(factorial_valuation(8, 2), 7);
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(-3, 7), 3);
    }
}
