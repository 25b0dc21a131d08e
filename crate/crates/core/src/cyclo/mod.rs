//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored in the power basis {ζ_N^k : k < φ(N)} modulo Φ_N. Rational
//! values always have conductor 1, so rationality is a constant-time check.

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use poly::{cyclotomic_poly, cyclotomic_value, euler_phi};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// Exact element of Q(ζ_N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u32,
    terms: Vec<(u32, Rational)>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { n: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { n: 1, terms: vec![(0, r)] }
        }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let e = k.rem_euclid(n as i64) as u64;
        Self::canonicalize(n, [(e, Rational::one())]).expect("positive conductor")
    }

    /// Reduce an arbitrary combination Σ c_k ζ_N^k to canonical form.
    pub fn canonicalize<I>(n: u32, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, c) in raw {
            let slot = &mut dense[(k % n as u64) as usize];
            *slot += c;
        }
        Ok(Self::reduce(n, dense))
    }

    /// Reduce a dense coefficient vector of length n modulo Φ_n.
    fn reduce(n: u32, mut dense: Vec<Rational>) -> Self {
        if n == 1 {
            let c = dense.pop().unwrap_or_else(Rational::zero);
            return Self::from_rational(c);
        }
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        for k in (deg..n as usize).rev() {
            if dense[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[k], Rational::zero());
            let base = k - deg;
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    dense[base + j] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        dense.truncate(deg);
        let terms: Vec<(u32, Rational)> =
            dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as u32, c)).collect();
        if terms.iter().all(|(k, _)| *k == 0) {
            return Cyclotomic { n: 1, terms };
        }
        Cyclotomic { n, terms }
    }

    /// Conductor of the ambient field (1 for rationals; not minimized otherwise).
    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Nonzero power-basis coefficients, sorted by exponent.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.n != 1 {
            return None;
        }
        Some(self.terms.first().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero))
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Image under ζ_N ↦ ζ_N^k.
    pub fn galois(&self, k: i64) -> Result<Self> {
        if self.n == 1 {
            return Ok(self.clone());
        }
        let n = self.n as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n: self.n });
        }
        let k = k.rem_euclid(n) as u64;
        let raw = self.terms.iter().map(|(e, c)| (*e as u64 * k, c.clone()));
        Self::canonicalize(self.n, raw)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is coprime to every conductor")
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    /// Dense coefficients in the power basis of Q(ζ_m), where the conductor divides m.
    pub fn coords_in(&self, m: u32) -> Vec<Rational> {
        assert!(m.is_multiple_of(self.n), "conductor {} does not divide {}", self.n, m);
        let lifted = self.lift(m);
        let deg = euler_phi(m) as usize;
        let mut out = vec![Rational::zero(); deg];
        for (k, c) in lifted.terms {
            out[k as usize] = c;
        }
        out
    }

    /// Re-express in Q(ζ_m); the result is rational-normalized as usual.
    fn lift(&self, m: u32) -> Self {
        if self.n == m || self.n == 1 {
            return Cyclotomic { n: if self.n == 1 { 1 } else { m }, terms: self.terms.clone() };
        }
        let step = (m / self.n) as u64;
        let raw = self.terms.iter().map(|(k, c)| (*k as u64 * step, c.clone()));
        Self::canonicalize(m, raw).expect("positive conductor")
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let sign = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        if self.n == other.n {
            let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
            let (mut i, mut j) = (0, 0);
            while i < self.terms.len() || j < other.terms.len() {
                let ki = self.terms.get(i).map(|t| t.0).unwrap_or(u32::MAX);
                let kj = other.terms.get(j).map(|t| t.0).unwrap_or(u32::MAX);
                if ki < kj {
                    out.push(self.terms[i].clone());
                    i += 1;
                } else if kj < ki {
                    out.push((kj, sign(&other.terms[j].1)));
                    j += 1;
                } else {
                    let c = &self.terms[i].1 + sign(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((ki, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
            let n = if out.iter().all(|(k, _)| *k == 0) { 1 } else { self.n };
            return Cyclotomic { n, terms: out };
        }
        let l = self.n.lcm(&other.n);
        let mut dense = vec![Rational::zero(); l as usize];
        let (sa, sb) = ((l / self.n) as usize, (l / other.n) as usize);
        for (k, c) in &self.terms {
            dense[*k as usize * sa] += c;
        }
        for (k, c) in &other.terms {
            dense[*k as usize * sb] += sign(c);
        }
        Self::reduce(l, dense)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        let l = self.n.lcm(&other.n);
        let (sa, sb) = ((l / self.n) as usize, (l / other.n) as usize);
        let lu = l as usize;
        let mut dense = vec![Rational::zero(); lu];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let idx = (*ka as usize * sa + *kb as usize * sb) % lu;
                dense[idx] += ca * cb;
            }
        }
        Self::reduce(l, dense)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            self.terms == other.terms
        } else {
            self.add_impl(other, true).is_zero()
        }
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

/// Format a rational as "a" or "a/b".
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "a" or "a/b" (b nonzero); the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.n == 1 {
            return write!(f, "{}", format_rational(&self.terms[0].1));
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if idx > 0 {
                "+"
            } else {
                ""
            };
            let mag = format_rational(&c.abs());
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            match *k {
                0 => write!(f, "{mag}")?,
                _ if c.abs().is_one() => write!(f, "z{}^{}", self.n, k)?,
                _ => write!(f, "{mag}*z{}^{}", self.n, k)?,
            }
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(r) = self.to_rational() {
            return s.serialize_str(&format_rational(&r));
        }
        let terms: Vec<(u32, String)> = self.terms.iter().map(|(k, c)| (*k, format_rational(c))).collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("N", &self.n)?;
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCyc {
    Str(String),
    Int(i64),
    Obj {
        #[serde(rename = "N")]
        n: u32,
        terms: Vec<(u64, RawCoeff)>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Str(String),
    Int(i64),
}

impl RawCoeff {
    fn value(&self) -> Result<Rational> {
        match self {
            RawCoeff::Str(s) => parse_rational(s),
            RawCoeff::Int(i) => Ok(Rational::from_integer(BigInt::from(*i))),
        }
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCyc::deserialize(d)?;
        let out = match raw {
            RawCyc::Str(s) => parse_rational(&s).map(Cyclotomic::from_rational),
            RawCyc::Int(i) => Ok(Cyclotomic::from_int(i)),
            RawCyc::Obj { n, terms } => terms
                .iter()
                .map(|(k, c)| c.value().map(|v| (*k, v)))
                .collect::<Result<Vec<_>>>()
                .and_then(|t| Cyclotomic::canonicalize(n, t)),
        };
        out.map_err(de::Error::custom)
    }
}

/// Quadratic Gauss sum Σ_t (t|r) ζ_r^t for an odd prime r; equals √(r*) with
/// r* = (−1)^{(r−1)/2} r.
pub fn gauss_sum(r: u32) -> Cyclotomic {
    assert!(r % 2 == 1 && r > 2, "odd prime expected");
    let mut squares = vec![false; r as usize];
    for t in 1..r as u64 {
        squares[((t * t) % r as u64) as usize] = true;
    }
    let raw = (1..r).map(|t| {
        let s = if squares[t as usize] { 1 } else { -1 };
        (t as u64, Rational::from_integer(BigInt::from(s)))
    });
    Cyclotomic::canonicalize(r, raw).expect("positive conductor")
}

/// An exact square root of a nonzero integer, as a cyclotomic number
/// (product of Gauss sums over the squarefree part, times the square part).
/// The branch is fixed but otherwise unspecified.
pub fn sqrt_integer(v: i64) -> Cyclotomic {
    assert!(v != 0);
    let mut rest = v.unsigned_abs();
    let mut square = 1u64;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            primes.push(p);
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    let mut acc = Cyclotomic::from_int(square as i64);
    // sign of the radicand still to be matched: track the product of the r*
    let mut sign: i64 = if v < 0 { -1 } else { 1 };
    for &r in &primes {
        if r == 2 {
            // √2 = ζ_8 + ζ_8^{-1}
            acc = acc * (Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7));
        } else {
            acc = acc * gauss_sum(r as u32);
            if r % 4 == 3 {
                sign = -sign;
            }
        }
    }
    if sign < 0 {
        acc = acc * Cyclotomic::root_of_unity(4, 1);
    }
    acc
}
