//! μ_1 < μ_2 < μ_3: the three smallest degrees > 1 of irreducible characters.
//!
//! Values come from closed formulas (Tiep–Zalesskii and the degree table for SL_n(q)),
//! each guarded by its range of validity. Outside that range the entry is `None`,
//! serialised as `"unknown-for-params"`. Where a formula is applied to a quotient
//! or a subgroup of a cover, the guard only admits cases where it is exact.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Family, GroupFamilySpec};

pub const UNKNOWN: &str = "unknown-for-params";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MuTriple {
    pub mu1: Option<BigUint>,
    pub mu2: Option<BigUint>,
    pub mu3: Option<BigUint>,
}

impl MuTriple {
    pub fn unknown() -> Self {
        Self::default()
    }

    fn from_u64(a: u64, b: u64, c: u64) -> Self {
        MuTriple { mu1: Some(a.into()), mu2: Some(b.into()), mu3: Some(c.into()) }
    }

    pub fn get(&self, i: usize) -> Option<&BigUint> {
        match i {
            1 => self.mu1.as_ref(),
            2 => self.mu2.as_ref(),
            3 => self.mu3.as_ref(),
            _ => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.mu1.is_none() && self.mu2.is_none() && self.mu3.is_none()
    }

    /// Defined entries are strictly increasing.
    pub fn is_increasing(&self) -> bool {
        let known: Vec<&BigUint> = [&self.mu1, &self.mu2, &self.mu3].into_iter().flatten().collect();
        known.windows(2).all(|w| w[0] < w[1])
    }
}

impl Serialize for MuTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let show = |v: &Option<BigUint>| v.as_ref().map_or_else(|| UNKNOWN.to_string(), |x| x.to_string());
        let mut st = s.serialize_struct("MuTriple", 3)?;
        st.serialize_field("mu1", &show(&self.mu1))?;
        st.serialize_field("mu2", &show(&self.mu2))?;
        st.serialize_field("mu3", &show(&self.mu3))?;
        st.end()
    }
}

fn pw(q: u64, k: u64) -> BigUint {
    BigUint::from(q).pow(k as u32)
}

fn b(v: u64) -> BigUint {
    BigUint::from(v)
}

/// d_n = (q^n − 1)/(q − 1)
fn dn(n: u64, q: u64) -> BigUint {
    (pw(q, n) - 1u32) / (q - 1)
}

/// Minimal degrees of SL_n(q), n ≥ 3, from the standard table.
///
/// Two entries of that table do not describe SL_n(q): for SL_3(4) the generic row gives
/// μ_3 = 15 < μ_1 = 20, while SL_3(4) has a faithful character of degree 15 below 20;
/// and SL_4(3) has a faithful character of degree 40 < 52. These cases return unknown
/// entries; the (4,3) row is exact for PSL_4(3).
fn sl_table(n: u64, q: u64) -> MuTriple {
    match (n, q) {
        (3, 4) => MuTriple::unknown(),
        (3, _) if q > 2 => {
            let d = dn(3, q);
            let mu3 = b(q * q - 1) * (q - 1) / (q - 1).gcd(&3);
            MuTriple { mu1: Some(&d - 1u32), mu2: Some(d), mu3: Some(mu3) }
        }
        (4, 3) => MuTriple { mu1: Some(b(26)), mu2: Some(b(39)), mu3: None },
        (4, _) if q > 3 => {
            let d = dn(4, q);
            let mu3 = (pw(q, 3) - 1u32) * (q - 1) / (q - 1).gcd(&2);
            MuTriple { mu1: Some(&d - 1u32), mu2: Some(d), mu3: Some(mu3) }
        }
        (6, 2) => MuTriple::from_u64(62, 217, 588),
        (6, 3) => MuTriple::from_u64(363, 364, 6318),
        (n, 2) if n > 4 => {
            let d = dn(n, 2);
            MuTriple {
                mu1: Some(&d - 1u32),
                mu2: Some(&d * (pw(2, n - 1) - 4u32) / 3u32),
                mu3: Some(&d * dn(n - 1, 2) / 3u32),
            }
        }
        (n, _) if n > 4 => {
            let d = dn(n, q);
            let mu3 = &d * (pw(q, n - 1) - pw(q, 2)) / (q * q - 1);
            MuTriple { mu1: Some(&d - 1u32), mu2: Some(d), mu3: Some(mu3) }
        }
        _ => MuTriple::unknown(),
    }
}

fn psl2(q: u64) -> MuTriple {
    if q < 4 {
        MuTriple::unknown()
    } else if q.is_multiple_of(2) {
        MuTriple::from_u64(q - 1, q, q + 1)
    } else if q % 4 == 1 {
        MuTriple::from_u64(q.div_ceil(2), q - 1, q)
    } else {
        MuTriple::from_u64((q - 1) / 2, q - 1, q)
    }
}

fn sl2(q: u64) -> MuTriple {
    if q.is_multiple_of(2) {
        psl2(q)
    } else if q >= 5 {
        MuTriple::from_u64((q - 1) / 2, q.div_ceil(2), q - 1)
    } else {
        MuTriple::unknown()
    }
}

fn su(n: u64, q: u64) -> MuTriple {
    if n < 3 || (n, q) == (3, 2) {
        return MuTriple::unknown();
    }
    let qn = pw(q, n);
    let (mu1, mu2) = if n % 2 == 1 {
        ((&qn - q) / (q + 1), (&qn + 1u32) / (q + 1))
    } else {
        ((&qn - 1u32) / (q + 1), (&qn + q) / (q + 1))
    };
    let mu3 = if q % 2 == 1 && q > 3 {
        match n {
            3 if (q + 1).is_power_of_two() => Some(b(q * q - q + 1) * (q - 1)),
            3 => None,
            4 => Some(b(q * q - q + 1) * (q * q + 1) / 2u32),
            _ if n % 2 == 1 => Some((&qn + 1u32) * (pw(q, n - 1) - q * q) / ((q * q - 1) * (q + 1))),
            _ => Some((&qn - 1u32) * (pw(q, n - 1) + 1u32) / ((q * q - 1) * (q + 1))),
        }
    } else {
        None
    };
    MuTriple { mu1: Some(mu1), mu2: Some(mu2), mu3 }
}

/// The triple for g, with unknown entries outside the formulas' ranges.
pub fn mu_degrees(g: &GroupFamilySpec) -> MuTriple {
    let n = g.n as u64;
    let q = g.q();
    let odd = q % 2 == 1;
    match g.family {
        Family::Sym => {
            let mu1 = (n >= 5).then(|| b(n - 1));
            let (mu2, mu3) =
                if n >= 9 { (Some(b(n * (n - 3) / 2)), Some(b((n - 1) * (n - 2) / 2))) } else { (None, None) };
            MuTriple { mu1, mu2, mu3 }
        }
        Family::Alt => MuTriple {
            mu1: match n {
                5 => Some(b(3)),
                _ if n >= 6 => Some(b(n - 1)),
                _ => None,
            },
            mu2: None,
            mu3: None,
        },
        Family::SL if n == 2 => sl2(q),
        Family::PSL if n == 2 => psl2(q),
        Family::Sp if n == 1 => sl2(q),
        Family::PSp if n == 1 => psl2(q),
        Family::SL if n >= 3 => sl_table(n, q),
        Family::GL if n >= 3 => {
            // the small SL_4(3) characters of degree 26 need not survive as GL-characters
            if (n, q) == (3, 4) || (n, q) == (4, 3) {
                return MuTriple::unknown();
            }
            let t = sl_table(n, q);
            if q == 2 || n.gcd(&(q - 1)) == 1 {
                t
            } else {
                MuTriple { mu3: None, ..t }
            }
        }
        Family::PGL | Family::PSL if n >= 3 => {
            let pgl = g.family == Family::PGL;
            let g = n.gcd(&(q - 1));
            match (pgl, n, q) {
                (true, 3, 4) => return MuTriple::from_u64(20, 35, 45),
                (false, 4, 3) => return MuTriple::from_u64(26, 39, 52),
                (true, 4, 3) => return MuTriple::unknown(),
                _ => {}
            }
            if g == 1 {
                return sl_table(n, q);
            }
            let d = dn(n, q);
            // a principal-series character of degree d_n survives in the quotient when
            // the torus has characters of the right shape
            let mu2_ok = if pgl { !n.is_multiple_of(q - 1) } else { (q - 1) / g > 1 };
            MuTriple { mu1: Some(&d - 1u32), mu2: mu2_ok.then_some(d), mu3: None }
        }
        Family::SU => su(n, q),
        Family::PSU if n >= 3 => {
            let g = n.gcd(&(q + 1));
            if g == 1 {
                su(n, q)
            } else if n % 2 == 1 && (n, q) != (3, 2) {
                MuTriple { mu1: Some((pw(q, n) - q) / (q + 1)), mu2: None, mu3: None }
            } else {
                MuTriple::unknown()
            }
        }
        Family::Sp if n >= 2 && odd => {
            let qn = pw(q, n);
            MuTriple {
                mu1: Some((&qn - 1u32) / 2u32),
                mu2: Some((&qn + 1u32) / 2u32),
                mu3: Some((&qn - 1u32) * (&qn - q) / (2 * (q + 1))),
            }
        }
        Family::PSp if n >= 2 && odd => {
            let qn = pw(q, n);
            let lo = (&qn - 1u32) / 2u32;
            let mu1 = if lo.is_odd() { lo } else { (&qn + 1u32) / 2u32 };
            MuTriple { mu1: Some(mu1), mu2: None, mu3: None }
        }
        Family::SOodd if n >= 3 && odd && q >= 5 => {
            MuTriple { mu1: Some((pw(q, 2 * n) - 1u32) / (q * q - 1)), mu2: None, mu3: None }
        }
        Family::POmegaPlus if n >= 4 && odd && q > 3 => {
            let qn = pw(q, n);
            MuTriple {
                mu1: Some((&qn - 1u32) * (pw(q, n - 1) + q) / (q * q - 1)),
                mu2: Some((&qn - 1u32) * (pw(q, n - 1) - 1u32) / (2 * (q + 1))),
                mu3: None,
            }
        }
        Family::POmegaMinus if n >= 4 && odd && q > 3 => {
            MuTriple { mu1: None, mu2: Some((pw(q, n) + 1u32) * (pw(q, n - 1) + 1u32) / (2 * (q + 1))), mu3: None }
        }
        _ => MuTriple::unknown(),
    }
}
