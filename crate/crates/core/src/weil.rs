//! Eigenvalue multiplicities of a Weil module restricted to X = ⟨Z, h⟩.
//!
//! Z is the cyclic centre of order c (c = q+1 for GU_p(q), q−1 for GL_p(q)) and
//! h = diag(1, ε, …, ε^{p−1}) with ε a primitive p-th root of unity in Z's field.
//! X ≅ Z_c × Z_p is modelled by exponent pairs: z^a·h^k has eigenvalues
//! ζ_c^{a + j·k·c/p} (j = 0..p−1), so its fixed-space dimension is pure exponent
//! arithmetic mod c. The module splits as ⊕_ζ M_ζ over the central characters,
//! and h acts on M_ζ with eigenvalue ν^i with multiplicity [`weil_inner`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::numth::{is_prime, require_prime_power};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeilKind {
    /// GU_p(q), p | q+1.
    Unitary,
    /// GL_p(q), p | q−1.
    Linear,
}

impl WeilKind {
    pub fn name(self) -> &'static str {
        match self {
            WeilKind::Unitary => "unitary",
            WeilKind::Linear => "linear",
        }
    }
}

impl fmt::Display for WeilKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeilKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" | "unitary" | "gu" => Ok(WeilKind::Unitary),
            "l" | "linear" | "gl" => Ok(WeilKind::Linear),
            _ => Err(Error::OutOfRange(format!("unknown Weil kind `{s}`"))),
        }
    }
}

/// A checked (kind, p, q) triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilSpec {
    pub kind: WeilKind,
    pub p: u64,
    pub q: u64,
}

/// z^{z_exp}·h^{h_exp} in X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XElement {
    pub z_exp: u64,
    pub h_exp: u64,
}

impl WeilSpec {
    pub fn new(kind: WeilKind, p: u64, q: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::OutOfRange(format!("p = {p} must be an odd prime")));
        }
        require_prime_power(q)?;
        let c = match kind {
            WeilKind::Unitary => q + 1,
            WeilKind::Linear => q - 1,
        };
        if c % p != 0 {
            let rel = if kind == WeilKind::Unitary { "q+1" } else { "q-1" };
            return Err(Error::OutOfRange(format!("p = {p} does not divide {rel} = {c}")));
        }
        if kind == WeilKind::Unitary && (p, q) == (3, 2) {
            return Err(Error::OutOfRange("(p, q) = (3, 2) is excluded".into()));
        }
        match q.checked_pow(p as u32) {
            Some(v) if v < 1 << 62 => {}
            _ => return Err(Error::OutOfRange(format!("q^p too large for p = {p}, q = {q}"))),
        }
        Ok(WeilSpec { kind, p, q })
    }

    /// Order of the centre.
    pub fn c(&self) -> u64 {
        match self.kind {
            WeilKind::Unitary => self.q + 1,
            WeilKind::Linear => self.q - 1,
        }
    }

    pub fn x_order(&self) -> u64 {
        self.c() * self.p
    }

    /// ω(1).
    pub fn dimension(&self) -> i64 {
        omega_value(self, XElement { z_exp: 0, h_exp: 0 })
    }

    pub fn elements(&self) -> impl Iterator<Item = XElement> + '_ {
        (0..self.c()).flat_map(move |a| (0..self.p).map(move |k| XElement { z_exp: a, h_exp: k }))
    }

    /// ζ is trivial on the order-p subgroup of Z.
    pub fn trivial_on_zp(&self, zeta: u64) -> bool {
        zeta.is_multiple_of(self.p)
    }
}

/// Number of eigenvalues of x equal to 1.
pub fn fixed_dim(s: &WeilSpec, x: XElement) -> u32 {
    let c = s.c();
    let step = c / s.p;
    (0..s.p).filter(|&j| (x.z_exp + j * (x.h_exp % s.p) * step).is_multiple_of(c)).count() as u32
}

/// ω(x) = −(−q)^d for the unitary kind; q^d − 1 (nonzero vectors fixed) for the linear kind.
pub fn omega_value(s: &WeilSpec, x: XElement) -> i64 {
    let d = fixed_dim(s, x);
    let q = s.q as i64;
    match s.kind {
        WeilKind::Unitary => -(-q).pow(d),
        WeilKind::Linear => q.pow(d) - 1,
    }
}

fn integral(v: &Cyclotomic, what: &str) -> Result<BigInt> {
    v.to_integer().ok_or_else(|| Error::Invalid(format!("{what} = {v:?} is not a rational integer")))
}

/// |X|·(ω|_X, ζ·ε_i), summed exactly.
pub fn weil_inner_scaled(s: &WeilSpec, zeta: u64, i: u64) -> Result<BigInt> {
    let c = s.c();
    let step = c / s.p;
    let mut coeffs = vec![0i128; c as usize];
    for x in s.elements() {
        let e = (zeta % c) * x.z_exp + (i % s.p) * x.h_exp * step;
        let slot = (c - e % c) % c;
        coeffs[slot as usize] += omega_value(s, x) as i128;
    }
    let raw = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, v)| *v != 0)
        .map(|(k, v)| (k as u64, BigRational::from_integer(BigInt::from(v))));
    integral(&Cyclotomic::canonicalize(c as u32, raw)?, "scaled inner product")
}

/// Multiplicity of ν^i (i mod p; 0 stands for p) as an eigenvalue of h on M_ζ.
pub fn weil_inner(s: &WeilSpec, zeta: u64, i: u64) -> Result<BigInt> {
    let scaled = weil_inner_scaled(s, zeta, i)?;
    let x = BigInt::from(s.x_order());
    if !(&scaled % &x).is_zero() || scaled.is_negative() {
        return Err(Error::Invalid(format!(
            "multiplicity {scaled}/{x} for ζ index {zeta}, i = {i} is not a nonnegative integer"
        )));
    }
    Ok(scaled / x)
}

/// |X|·multiplicity predicted by hand, for comparison with [`weil_inner_scaled`].
pub fn weil_inner_closed_form(s: &WeilSpec, zeta: u64, i: u64) -> BigInt {
    let (p, q) = (BigInt::from(s.p), BigInt::from(s.q));
    let qp = q.pow(s.p as u32);
    let i_is_p = i.is_multiple_of(s.p);
    match s.kind {
        WeilKind::Unitary => {
            let base = &qp + 1u32;
            let pq1 = &p * (&q + 1u32);
            if !s.trivial_on_zp(zeta) {
                base
            } else if !i_is_p {
                base - pq1
            } else if !zeta.is_multiple_of(s.c()) {
                base + (&p - 1u32) * pq1
            } else {
                base + (&p - 2u32) * pq1
            }
        }
        WeilKind::Linear => {
            let base = &qp - 1u32;
            let pq1 = &p * (&q - 1u32);
            if !s.trivial_on_zp(zeta) {
                base
            } else if !i_is_p {
                base - pq1
            } else {
                base + (&p - 1u32) * pq1
            }
        }
    }
}

/// Multiplicities of ν^1, …, ν^p on M_ζ.
pub fn eigenvalue_multiplicities(s: &WeilSpec, zeta: u64) -> Result<Vec<BigInt>> {
    (1..=s.p).map(|i| weil_inner(s, zeta, i)).collect()
}

fn trace_from(s: &WeilSpec, zeta: u64, mult: &[BigInt]) -> Result<i64> {
    let raw = mult.iter().enumerate().map(|(j, m)| (((j as u64) + 1) % s.p, BigRational::from_integer(m.clone())));
    let mut t = integral(&Cyclotomic::canonicalize(s.p as u32, raw)?, "trace of h")?;
    if s.kind == WeilKind::Linear && zeta.is_multiple_of(s.c()) {
        t -= 1;
    }
    t.to_i64().ok_or_else(|| Error::Invalid(format!("trace {t} out of range")))
}

/// ρ(h) for the non-linear constituent ρ of M_ζ, without checking it.
pub fn rho_trace(s: &WeilSpec, zeta: u64) -> Result<i64> {
    trace_from(s, zeta, &eigenvalue_multiplicities(s, zeta)?)
}

/// The value ρ(h) is claimed to take: 0 off Z_p-trivial ζ, p for ζ ≠ 1,
/// and p−1 (unitary) or p−2 (linear) for ζ = 1.
pub fn expected_rho(s: &WeilSpec, zeta: u64) -> i64 {
    let p = s.p as i64;
    if !s.trivial_on_zp(zeta) {
        0
    } else if !zeta.is_multiple_of(s.c()) {
        p
    } else {
        match s.kind {
            WeilKind::Unitary => p - 1,
            WeilKind::Linear => p - 2,
        }
    }
}

/// ρ(h), failing if it is not the claimed value.
pub fn rho_at_h(s: &WeilSpec, zeta: u64) -> Result<i64> {
    let got = rho_trace(s, zeta)?;
    let want = expected_rho(s, zeta);
    if got != want {
        return Err(Error::Identity(format!(
            "ρ(h) = {got} for {} p = {}, q = {}, ζ index {zeta}; expected {want}",
            s.kind, s.p, s.q
        )));
    }
    Ok(got)
}

/// Per-ζ line of a grid report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaRecord {
    pub zeta: u64,
    pub trivial_on_zp: bool,
    /// Multiplicities of ν^1, …, ν^p, as decimal strings.
    pub multiplicities: Vec<String>,
    pub closed_forms_hold: bool,
    pub rho: i64,
    pub expected_rho: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilSummary {
    pub kind: WeilKind,
    pub p: u64,
    pub q: u64,
    pub x_order: u64,
    pub dimension: i64,
    pub multiplicity_total: String,
    pub failures: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilReport {
    pub records: Vec<ZetaRecord>,
    pub summary: WeilSummary,
}

impl WeilReport {
    /// One line per ζ, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// Every multiplicity, closed form and trace for one (kind, p, q).
pub fn verify(s: &WeilSpec) -> Result<WeilReport> {
    let (c, p) = (s.c(), s.p);
    let pairs: Vec<(u64, u64)> = (0..c).flat_map(|z| (1..=p).map(move |i| (z, i))).collect();
    let scaled: Vec<BigInt> = pairs.par_iter().map(|&(z, i)| weil_inner_scaled(s, z, i)).collect::<Result<Vec<_>>>()?;
    let x = BigInt::from(s.x_order());
    let mut total = BigInt::zero();
    let mut records = Vec::with_capacity(c as usize);
    for (zeta, chunk) in scaled.chunks(p as usize).enumerate() {
        let zeta = zeta as u64;
        let mut mult = Vec::with_capacity(p as usize);
        let mut closed = true;
        for (j, v) in chunk.iter().enumerate() {
            closed &= *v == weil_inner_closed_form(s, zeta, j as u64 + 1);
            if !(v % &x).is_zero() || v.is_negative() {
                return Err(Error::Invalid(format!("multiplicity {v}/{x} is not a nonnegative integer")));
            }
            mult.push(v / &x);
        }
        total += mult.iter().sum::<BigInt>();
        let rho = trace_from(s, zeta, &mult)?;
        let expected = expected_rho(s, zeta);
        records.push(ZetaRecord {
            zeta,
            trivial_on_zp: s.trivial_on_zp(zeta),
            multiplicities: mult.iter().map(|m| m.to_string()).collect(),
            closed_forms_hold: closed,
            rho,
            expected_rho: expected,
            holds: closed && rho == expected && ((rho != 0) == s.trivial_on_zp(zeta)),
        });
    }
    let dimension = s.dimension();
    let failures = records.iter().filter(|r| !r.holds).count() + usize::from(total != BigInt::from(dimension));
    let summary = WeilSummary {
        kind: s.kind,
        p,
        q: s.q,
        x_order: s.x_order(),
        dimension,
        multiplicity_total: total.to_string(),
        failures,
        ok: failures == 0,
    };
    Ok(WeilReport { records, summary })
}

/// Every (p, q) with p in `primes`, q ≤ qmax, meeting the kind's divisibility condition.
pub fn grid(kind: WeilKind, primes: &[u64], qmax: u64) -> Vec<WeilSpec> {
    primes.iter().flat_map(|&p| (2..=qmax).filter_map(move |q| WeilSpec::new(kind, p, q).ok())).collect()
}
