//! Sylow p-parts, minimal character degrees and the inequality audits built on them,
//! for symmetric, alternating and classical groups.
//!
//! Two independent routes to |G|_p are provided: [`sylow_order`] evaluates the group
//! order from its cyclotomic factorisation and extracts the p-part, while
//! [`sylow_order_shortcut`] uses closed forms in e = ord_p(q), d = ord_p(−q) and the
//! 2-adic valuation of q² − 1. Tests check one against the other on a grid.

mod audit;
mod family;
mod mu;
mod order;
mod shortcut;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numth::{self, multiplicative_order, require_prime};

pub use audit::{audit_inequality, AuditGrid, AuditId, AuditRecord, AuditReport, Relation};
pub use family::{Family, GroupFamilySpec};
pub use mu::{mu_degrees, MuTriple};
pub use order::{group_order, order_polynomial, OrderPolynomial};
pub use shortcut::sylow_order_shortcut;

/// |n|_p, the largest power of p dividing n.
pub fn p_part(n: &BigUint, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    if n == &BigUint::from(0u32) {
        return Err(Error::OutOfRange("p-part of 0".into()));
    }
    Ok(numth::p_part(n, p))
}

/// |n!|_p = p^{Σ ⌊n/p^i⌋}.
pub fn factorial_p_part(n: u64, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    Ok(BigUint::from(p).pow(numth::factorial_valuation(n, p) as u32))
}

/// e = ord_p(q) and d = ord_p(−q) for an odd prime p not dividing q.
pub fn e_and_d(q: u64, p: u64) -> Result<(u64, u64)> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::OutOfRange("e and d are defined for odd p".into()));
    }
    if q.is_multiple_of(p) {
        return Err(Error::OutOfRange(format!("p = {p} divides q = {q}")));
    }
    let q = i64::try_from(q).map_err(|_| Error::OutOfRange(format!("q = {q} too large")))?;
    Ok((multiplicative_order(q, p), multiplicative_order(-q, p)))
}

/// |G|_p read off the exact group order.
pub fn sylow_order(g: &GroupFamilySpec, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    Ok(numth::p_part(&group_order(g), p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: u32, q: u64) -> GroupFamilySpec {
        GroupFamilySpec::new(f, n, Some(q)).unwrap()
    }

    #[test]
    fn e_and_d_examples() {
        assert_eq!(e_and_d(2, 3).unwrap(), (2, 1));
        assert_eq!(e_and_d(2, 5).unwrap(), (4, 4));
        assert_eq!(e_and_d(3, 7).unwrap(), (6, 3));
        assert!(e_and_d(3, 3).is_err());
        assert!(e_and_d(3, 2).is_err());
        assert!(e_and_d(5, 9).is_err());
    }

    #[test]
    fn d_follows_from_e() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
                if q % p == 0 {
                    continue;
                }
                let (e, d) = e_and_d(q, p).unwrap();
                let expected = if e % 2 == 1 {
                    2 * e
                } else if e % 4 == 2 {
                    e / 2
                } else {
                    e
                };
                assert_eq!(d, expected, "q={q} p={p}");
            }
        }
    }

    #[test]
    fn p_parts() {
        assert_eq!(factorial_p_part(8, 2).unwrap(), BigUint::from(128u32));
        assert_eq!(p_part(&BigUint::from(96u32), 2).unwrap(), BigUint::from(32u32));
        assert!(p_part(&BigUint::from(96u32), 4).is_err());
        assert!(factorial_p_part(8, 1).is_err());
    }

    #[test]
    fn spot_values() {
        let big = |v: u64| BigUint::from(v);
        assert_eq!(sylow_order(&spec(Family::PSp, 2, 5), 2).unwrap(), big(64));
        assert_eq!(sylow_order(&spec(Family::SU, 5, 2), 3).unwrap(), big(243));
        assert_eq!(sylow_order(&spec(Family::PGU, 6, 2), 3).unwrap(), big(2187));
        assert_eq!(sylow_order(&spec(Family::Oplus, 4, 2), 3).unwrap(), big(243));
        for k in 0..5u32 {
            let n = 1u32 << k;
            let g = GroupFamilySpec::new(Family::Sym, n, None).unwrap();
            assert_eq!(sylow_order(&g, 2).unwrap(), big(1 << (n - 1)));
        }
    }
}
