use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::prime_power;

/// Group families with a closed-form order.
///
/// `Sp` is Sp_{2n}(q), `SOodd` is Ω_{2n+1}(q), `Oplus`/`Ominus` are the full orthogonal
/// groups GO^±_{2n}(q), `OmegaPlus`/`OmegaMinus` their subgroups Ω^±_{2n}(q) and
/// `POmegaPlus`/`POmegaMinus` the simple quotients PΩ^±_{2n}(q).
#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "sym")]
    Sym,
    #[serde(rename = "alt")]
    Alt,
    #[serde(rename = "gl")]
    GL,
    #[serde(rename = "sl")]
    SL,
    #[serde(rename = "pgl")]
    PGL,
    #[serde(rename = "psl")]
    PSL,
    #[serde(rename = "gu")]
    GU,
    #[serde(rename = "su")]
    SU,
    #[serde(rename = "pgu")]
    PGU,
    #[serde(rename = "psu")]
    PSU,
    #[serde(rename = "sp")]
    Sp,
    #[serde(rename = "psp")]
    PSp,
    #[serde(rename = "soodd")]
    SOodd,
    #[serde(rename = "oplus")]
    Oplus,
    #[serde(rename = "ominus")]
    Ominus,
    #[serde(rename = "omegaplus")]
    OmegaPlus,
    #[serde(rename = "omegaminus")]
    OmegaMinus,
    #[serde(rename = "pomegaplus")]
    POmegaPlus,
    #[serde(rename = "pomegaminus")]
    POmegaMinus,
}

impl Family {
    pub const ALL: [Family; 19] = [
        Family::Sym,
        Family::Alt,
        Family::GL,
        Family::SL,
        Family::PGL,
        Family::PSL,
        Family::GU,
        Family::SU,
        Family::PGU,
        Family::PSU,
        Family::Sp,
        Family::PSp,
        Family::SOodd,
        Family::Oplus,
        Family::Ominus,
        Family::OmegaPlus,
        Family::OmegaMinus,
        Family::POmegaPlus,
        Family::POmegaMinus,
    ];

    /// Lower-case name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Family::Sym => "sym",
            Family::Alt => "alt",
            Family::GL => "gl",
            Family::SL => "sl",
            Family::PGL => "pgl",
            Family::PSL => "psl",
            Family::GU => "gu",
            Family::SU => "su",
            Family::PGU => "pgu",
            Family::PSU => "psu",
            Family::Sp => "sp",
            Family::PSp => "psp",
            Family::SOodd => "soodd",
            Family::Oplus => "oplus",
            Family::Ominus => "ominus",
            Family::OmegaPlus => "omegaplus",
            Family::OmegaMinus => "omegaminus",
            Family::POmegaPlus => "pomegaplus",
            Family::POmegaMinus => "pomegaminus",
        }
    }

    /// Whether the family is a group of Lie type (needs q).
    pub fn is_lie_type(self) -> bool {
        !matches!(self, Family::Sym | Family::Alt)
    }

    /// +1 or −1 for the orthogonal families of even dimension, 0 otherwise.
    pub fn orthogonal_sign(self) -> i32 {
        match self {
            Family::Oplus | Family::OmegaPlus | Family::POmegaPlus => 1,
            Family::Ominus | Family::OmegaMinus | Family::POmegaMinus => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| Error::OutOfRange(format!("unknown family `{s}`")))
    }
}

/// A concrete group: family, rank parameter n and (for Lie type) the field size q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFamilySpec {
    pub family: Family,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
}

impl GroupFamilySpec {
    /// Checks n ≥ 1, q a prime power for Lie type and absent otherwise.
    pub fn new(family: Family, n: u32, q: Option<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        match (family.is_lie_type(), q) {
            (true, None) => return Err(Error::OutOfRange(format!("{family} needs q"))),
            (true, Some(q)) => {
                prime_power(q).ok_or(Error::NotPrimePower(q))?;
            }
            (false, Some(_)) => return Err(Error::OutOfRange(format!("{family} takes no q"))),
            (false, None) => {}
        }
        Ok(GroupFamilySpec { family, n, q })
    }

    /// q, or 0 for Sym/Alt.
    pub fn q(&self) -> u64 {
        self.q.unwrap_or(0)
    }

    /// Characteristic r and exponent f with q = r^f (Lie type only).
    pub fn char_and_exponent(&self) -> Option<(u64, u32)> {
        self.q.and_then(prime_power)
    }
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            Some(q) => write!(f, "{}({},{})", self.family, self.n, q),
            None => write!(f, "{}({})", self.family, self.n),
        }
    }
}
