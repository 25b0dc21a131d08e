use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::{Family, GroupFamilySpec};
use crate::cyclo::cyclotomic_value;

/// |G| = q^{q_exp} · Π Φ_d(q)^{m_d} · numer / denom, where numer and denom are
/// small integers depending on q (centre orders, indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderPolynomial {
    pub q_exp: u64,
    pub phi: BTreeMap<u32, u32>,
    pub numer: u64,
    pub denom: u64,
}

impl OrderPolynomial {
    fn new(q_exp: u64) -> Self {
        OrderPolynomial { q_exp, phi: BTreeMap::new(), numer: 1, denom: 1 }
    }

    /// Multiply by q^i − 1 = Π_{d | i} Φ_d(q).
    fn times_q_pow_minus_one(&mut self, i: u32) {
        for d in (1..=i).filter(|d| i.is_multiple_of(*d)) {
            *self.phi.entry(d).or_default() += 1;
        }
    }

    /// Multiply by q^i + 1 = Π_{d | 2i, d ∤ i} Φ_d(q).
    fn times_q_pow_plus_one(&mut self, i: u32) {
        for d in (1..=2 * i).filter(|d| (2 * i).is_multiple_of(*d) && !i.is_multiple_of(*d)) {
            *self.phi.entry(d).or_default() += 1;
        }
    }

    fn times_q_pow_minus_sign(&mut self, i: u32, sign: i32) {
        if sign > 0 {
            self.times_q_pow_minus_one(i)
        } else {
            self.times_q_pow_plus_one(i)
        }
    }

    fn drop_phi(&mut self, d: u32) {
        let m = self.phi.get_mut(&d).expect("factor present");
        *m -= 1;
        if *m == 0 {
            self.phi.remove(&d);
        }
    }

    /// Exact value at q; the constant quotient must divide.
    pub fn evaluate(&self, q: u64) -> BigUint {
        let qb = BigInt::from(q);
        let mut acc = BigInt::from(q).pow(self.q_exp as u32);
        for (&d, &m) in &self.phi {
            acc *= cyclotomic_value(d, &qb).pow(m);
        }
        acc *= self.numer;
        let (quot, rem) = acc.div_rem(&BigInt::from(self.denom));
        assert!(rem == BigInt::from(0), "order constant does not divide");
        quot.to_biguint().expect("group order is positive")
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.numer != 1 {
            parts.push(self.numer.to_string());
        }
        if self.q_exp > 0 {
            parts.push(format!("q^{}", self.q_exp));
        }
        for (&d, &m) in &self.phi {
            parts.push(if m == 1 { format!("Φ{d}") } else { format!("Φ{d}^{m}") });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("·"))?;
        if self.denom != 1 {
            write!(f, "/{}", self.denom)?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Order polynomial of a Lie-type group; `None` for Sym and Alt.
pub fn order_polynomial(g: &GroupFamilySpec) -> Option<OrderPolynomial> {
    let q = g.q?;
    let n = g.n;
    let n64 = n as u64;
    let odd_q = q % 2 == 1;
    let poly = match g.family {
        Family::Sym | Family::Alt => return None,
        Family::GL | Family::SL | Family::PGL | Family::PSL => {
            let mut o = OrderPolynomial::new(n64 * (n64 - 1) / 2);
            for i in 1..=n {
                o.times_q_pow_minus_one(i);
            }
            if g.family != Family::GL {
                o.drop_phi(1);
            }
            if g.family == Family::PSL {
                o.denom = gcd(n64, q - 1);
            }
            o
        }
        Family::GU | Family::SU | Family::PGU | Family::PSU => {
            let mut o = OrderPolynomial::new(n64 * (n64 - 1) / 2);
            for i in 1..=n {
                o.times_q_pow_minus_sign(i, if i % 2 == 0 { 1 } else { -1 });
            }
            if g.family != Family::GU {
                o.drop_phi(2);
            }
            if g.family == Family::PSU {
                o.denom = gcd(n64, q + 1);
            }
            o
        }
        Family::Sp | Family::PSp | Family::SOodd => {
            let mut o = OrderPolynomial::new(n64 * n64);
            for i in 1..=n {
                o.times_q_pow_minus_one(2 * i);
            }
            if g.family != Family::Sp {
                o.denom = gcd(2, q - 1);
            }
            o
        }
        fam => {
            let eps = fam.orthogonal_sign();
            let mut o = OrderPolynomial::new(n64 * (n64 - 1));
            o.numer = 2;
            o.times_q_pow_minus_sign(n, eps);
            for i in 1..n {
                o.times_q_pow_minus_one(2 * i);
            }
            if matches!(fam, Family::OmegaPlus | Family::OmegaMinus | Family::POmegaPlus | Family::POmegaMinus) {
                o.denom = 2 * gcd(2, q - 1);
            }
            if matches!(fam, Family::POmegaPlus | Family::POmegaMinus) && odd_q {
                // gcd(4, q^n − ε) / 2
                let qn_mod4 = (0..n).fold(1i64, |acc, _| acc * (q % 4) as i64 % 4);
                o.denom *= gcd(4, (qn_mod4 - eps as i64).rem_euclid(4) as u64) / 2;
            }
            o
        }
    };
    Some(poly)
}

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Exact |G|.
pub fn group_order(g: &GroupFamilySpec) -> BigUint {
    match g.family {
        Family::Sym => factorial(g.n),
        Family::Alt if g.n >= 2 => factorial(g.n) / 2u32,
        Family::Alt => BigUint::one(),
        _ => order_polynomial(g).expect("Lie type").evaluate(g.q()),
    }
}
