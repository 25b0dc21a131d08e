//! Closed forms for |G|_p in terms of e = ord_p(q), d = ord_p(−q) (p odd, p ∤ q) and
//! t = |q² − 1|_2 (p = 2, q odd), in the spirit of Weir's description of Sylow
//! subgroups of classical groups. These never evaluate the full group order.
//!
//! For odd p the key fact is |Q^{ck} − 1|_p = |Q^c − 1|_p · |k|_p whenever p | Q^c − 1,
//! so a product Π_{i ≤ n} (Q^i − 1) has p-part |Q^c − 1|_p^m · |m!|_p, m = ⌊n/c⌋,
//! c = ord_p(Q).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use super::{e_and_d, order_polynomial, Family, GroupFamilySpec};
use crate::error::{Error, Result};
use crate::numth::{factorial_valuation, p_part, require_prime};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn fact_part(m: u64, p: u64) -> BigUint {
    big(p).pow(factorial_valuation(m, p) as u32)
}

/// |x|_p for a nonzero signed integer.
fn abs_part(x: BigInt, p: u64) -> BigUint {
    p_part(x.magnitude(), p)
}

/// |Q^c − 1|_p^{⌊n/c⌋} · |⌊n/c⌋!|_p with c = ord_p(Q); Q may be negative.
fn cyclic_wreath_part(n: u64, big_q: i64, c: u64, p: u64) -> BigUint {
    let m = n / c;
    let base = abs_part(BigInt::from(big_q).pow(c as u32) - 1, p);
    base.pow(m as u32) * fact_part(m, p)
}

/// Shortcut value of |G|_p; errors only on a non-prime p.
pub fn sylow_order_shortcut(g: &GroupFamilySpec, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    let n = g.n as u64;
    match g.family {
        Family::Sym => return Ok(fact_part(n, p)),
        Family::Alt => {
            let full = fact_part(n, p);
            return Ok(if p == 2 && n >= 2 { full / 2u32 } else { full });
        }
        _ => {}
    }
    let q = g.q();
    let (r, f) = g.char_and_exponent().expect("validated spec");
    if p == r {
        let poly = order_polynomial(g).expect("Lie type");
        let num = big(p).pow((f as u64 * poly.q_exp) as u32) * p_part(&big(poly.numer), p);
        return Ok(num / p_part(&big(poly.denom), p));
    }
    if p == 2 {
        Ok(two_part(g, n, q))
    } else {
        odd_part(g, n, q, p)
    }
}

fn gcd_part(a: u64, b: u64, p: u64) -> BigUint {
    p_part(&big(a.gcd(&b)), p)
}

fn odd_part(g: &GroupFamilySpec, n: u64, q: u64, p: u64) -> Result<BigUint> {
    let (e, d) = e_and_d(q, p)?;
    let qi = i64::try_from(q).map_err(|_| Error::OutOfRange("q too large".into()))?;
    let gl = |m: u64| cyclic_wreath_part(m, qi, e, p);
    let gu = |m: u64| cyclic_wreath_part(m, -qi, d, p);
    // Π_{i ≤ m} (q^{2i} − 1): e odd behaves like GL_m(q), e even like GU_k(q^{e/2}) with
    // k = ⌊2m/e⌋ and every factor Q^{2j} − 1 having p-part |Q + 1|_p · |j|_p.
    let sp = |m: u64| -> BigUint {
        if e % 2 == 1 {
            gl(m)
        } else {
            let k = 2 * m / e;
            let qq = BigInt::from(q).pow((e / 2) as u32) + 1;
            abs_part(qq, p).pow(k as u32) * fact_part(k, p)
        }
    };
    let fam = g.family;
    Ok(match fam {
        Family::GL => gl(n),
        Family::SL | Family::PGL => gl(n) / p_part(&big(q - 1), p),
        Family::PSL => gl(n) / p_part(&big(q - 1), p) / gcd_part(n, q - 1, p),
        Family::GU => gu(n),
        Family::SU | Family::PGU => gu(n) / p_part(&big(q + 1), p),
        Family::PSU => gu(n) / p_part(&big(q + 1), p) / gcd_part(n, q + 1, p),
        Family::Sp | Family::PSp | Family::SOodd => sp(n),
        _ => {
            // GO^ε_{2n}: (q^n − ε) · Π_{i<n}(q^{2i} − 1); index-2-power subgroups agree.
            let eps = fam.orthogonal_sign();
            if e % 2 == 1 {
                // p | q^n − 1 iff e | n, and never p | q^n + 1
                if eps > 0 {
                    gl(n)
                } else {
                    gl(n - 1)
                }
            } else if (2 * n).is_multiple_of(e) {
                let k = 2 * n / e;
                let qq = abs_part(BigInt::from(q).pow((e / 2) as u32) + 1, p);
                // q^n ≡ (−1)^k mod p
                let hit = k.is_multiple_of(2) == (eps > 0);
                let m = if hit { k } else { k - 1 };
                qq.pow(m as u32) * fact_part(m, p)
            } else {
                sp(n)
            }
        }
    })
}

fn two_part(g: &GroupFamilySpec, n: u64, q: u64) -> BigUint {
    let t = p_part(&big(q * q - 1), 2);
    let qm = p_part(&big(q - 1), 2);
    let qp = p_part(&big(q + 1), 2);
    // Π_{i ≤ m}(q^i − 1) when q ≡ 3 mod 4: odd i contribute 2, i = 2j contributes t·|j|_2.
    let mixed = |m: u64| -> BigUint {
        let half = m / 2;
        (big(2) * &t).pow(half as u32) * fact_part(half, 2) * big(if m % 2 == 1 { 2 } else { 1 })
    };
    let q1 = q % 4 == 1;
    let gl = |m: u64| if q1 { qm.pow(m as u32) * fact_part(m, 2) } else { mixed(m) };
    let gu = |m: u64| if q1 { mixed(m) } else { qp.pow(m as u32) * fact_part(m, 2) };
    let sp = |m: u64| t.pow(m as u32) * fact_part(m, 2);
    let fam = g.family;
    match fam {
        Family::GL => gl(n),
        Family::SL | Family::PGL => gl(n) / &qm,
        Family::PSL => gl(n) / &qm / gcd_part(n, q - 1, 2),
        Family::GU => gu(n),
        Family::SU | Family::PGU => gu(n) / &qp,
        Family::PSU => gu(n) / &qp / gcd_part(n, q + 1, 2),
        Family::Sp => sp(n),
        Family::PSp | Family::SOodd => sp(n) / 2u32,
        _ => {
            let eps = fam.orthogonal_sign();
            let qn_eps = if n.is_multiple_of(2) {
                if eps > 0 {
                    // |q^n − 1|_2 = |q² − 1|_2 · |n/2|_2
                    &t * p_part(&big(n), 2) / 2u32
                } else {
                    big(2)
                }
            } else if eps > 0 {
                qm.clone()
            } else {
                qp.clone()
            };
            let go = big(2) * qn_eps * sp(n - 1);
            match fam {
                Family::Oplus | Family::Ominus => go,
                Family::OmegaPlus | Family::OmegaMinus => go / 4u32,
                _ => {
                    // centre of Ω^ε_{2n}(q) has order gcd(4, q^n − ε)/2
                    let qn_mod4 = if n.is_multiple_of(2) || q % 4 == 1 { 1 } else { 3 };
                    let centre = if (qn_mod4 + 4 - if eps > 0 { 1 } else { 3 }) % 4 == 0 { 2u32 } else { 1 };
                    go / 4u32 / centre
                }
            }
        }
    }
}
