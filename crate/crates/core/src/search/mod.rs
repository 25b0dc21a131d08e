//! Exhaustive enumeration of Syl_p-regular, Steinberg-like and p-vanishing characters.
//!
//! A query fixes a prime p, a mode (which classes the character must vanish on) and a
//! level ℓ (the target degree is ℓ·|G|_p). All nonnegative integer combinations of the
//! irreducibles meeting the constraints are found by [`enumerate`]; every solution is
//! then re-checked by [`classify`], which evaluates the character directly.

mod classify;
mod engine;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ctable::{ValidatedTable, VirtualCharacter};
use crate::error::{Error, Result};
use crate::numth::require_prime;

pub use classify::{classify, Classification};

/// Which classes a solution must vanish on, and how the level is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Vanishes on nontrivial p-elements, degree ℓ·|G|_p.
    SylRegular,
    /// Vanishes on p-singular elements, degree ℓ·|G|_p.
    SteinbergLike,
    /// Vanishes on p-singular elements, every level 1..=ℓ.
    PVanishing,
    /// Vanishes on nontrivial p-elements, every level 1..=ℓ.
    SylVanishing,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::SylRegular, Mode::SteinbergLike, Mode::PVanishing, Mode::SylVanishing];

    pub fn name(self) -> &'static str {
        match self {
            Mode::SylRegular => "syl_regular",
            Mode::SteinbergLike => "steinberg_like",
            Mode::PVanishing => "p_vanishing",
            Mode::SylVanishing => "syl_vanishing",
        }
    }

    /// Constraints are imposed on all p-singular classes rather than only p-elements.
    pub fn uses_singular_classes(self) -> bool {
        matches!(self, Mode::SteinbergLike | Mode::PVanishing)
    }

    /// Enumerates every level up to ℓ instead of ℓ alone.
    pub fn is_cumulative(self) -> bool {
        matches!(self, Mode::PVanishing | Mode::SylVanishing)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "syl_regular" | "sylreg" => Ok(Mode::SylRegular),
            "steinberg_like" | "steinberg" => Ok(Mode::SteinbergLike),
            "p_vanishing" | "pvanish" => Ok(Mode::PVanishing),
            "syl_vanishing" | "sylvanish" => Ok(Mode::SylVanishing),
            _ => Err(Error::OutOfRange(format!("unknown search mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchQuery {
    pub p: u64,
    pub mode: Mode,
    pub level: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_solutions: Option<usize>,
}

impl SearchQuery {
    pub fn new(p: u64, mode: Mode, level: u64) -> Self {
        SearchQuery { p, mode, level, max_solutions: None }
    }

    pub fn with_max_solutions(mut self, cap: usize) -> Self {
        self.max_solutions = Some(cap);
        self
    }
}

/// The query as echoed in a report, with the table it ran on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryEcho {
    pub table: String,
    #[serde(with = "bigstr")]
    pub order: BigUint,
    #[serde(with = "bigstr")]
    pub sylow_order: BigUint,
    #[serde(flatten)]
    pub query: SearchQuery,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub mult: Vec<u64>,
    /// Labels of the constituents, repeated by multiplicity.
    pub constituents: Vec<String>,
    #[serde(flatten)]
    pub flags: Classification,
}

impl Solution {
    pub fn character(&self) -> VirtualCharacter {
        VirtualCharacter::new(self.mult.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Wall-clock time; the only field that differs between identical runs.
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub query: QueryEcho,
    pub exhaustive: bool,
    pub solutions: Vec<Solution>,
    pub stats: SearchStats,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

/// Run a query. Solutions are sorted by multiplicity vector (in table row order);
/// for cumulative modes the levels are concatenated in increasing order.
pub fn enumerate(table: &ValidatedTable, q: &SearchQuery) -> Result<SearchReport> {
    require_prime(q.p)?;
    if !(&table.group_order % q.p).is_zero() {
        return Err(Error::PrimeNotDividing { p: q.p });
    }
    if q.level == 0 {
        return Err(Error::OutOfRange("level must be positive".into()));
    }
    let start = Instant::now();
    let sylow = table.sylow_order(q.p);
    let (singular, p_elements) = table.classes_by_p_type(q.p);
    let classes = if q.mode.uses_singular_classes() { singular } else { p_elements };
    let levels: Vec<u64> = if q.mode.is_cumulative() { (1..=q.level).collect() } else { vec![q.level] };

    let mut found = Vec::new();
    let mut nodes = 0;
    let mut exhaustive = true;
    for l in levels {
        let remaining = q.max_solutions.map(|c| c.saturating_sub(found.len()));
        if remaining == Some(0) {
            exhaustive = false;
            break;
        }
        let target = BigInt::from(&sylow * l);
        let system = engine::System::build(table, &target, &classes, l)?;
        let out = system.enumerate(remaining);
        nodes += out.nodes;
        exhaustive &= !out.truncated;
        found.extend(out.solutions);
    }

    let solutions = found
        .into_par_iter()
        .map(|mult| {
            let v = VirtualCharacter::new(mult);
            let flags = classify(table, q.p, &v)?;
            let vanishes = if q.mode.uses_singular_classes() { flags.is_p_vanishing } else { flags.is_syl_vanishing };
            if !vanishes || flags.degree.is_zero() || (&flags.degree % &sylow) != BigUint::zero() {
                return Err(Error::Search(format!("solution {:?} fails re-verification", v.multiplicities)));
            }
            let constituents = v
                .multiplicities
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(table.irreducibles[i].label.clone(), m as usize))
                .collect();
            Ok(Solution { mult: v.multiplicities, constituents, flags })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SearchReport {
        query: QueryEcho {
            table: table.name.clone(),
            order: table.group_order.clone(),
            sylow_order: sylow,
            query: q.clone(),
        },
        exhaustive,
        solutions,
        stats: SearchStats { nodes, wall_ms: start.elapsed().as_millis() as u64 },
    })
}

/// Serialise big integers as decimal strings.
pub(crate) mod bigstr {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("not an integer: `{s}`")))
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => s.serialize_str(&x.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(|_| serde::de::Error::custom(format!("not an integer: `{s}`"))))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmchar::sn_table;

    fn sn(n: u32) -> ValidatedTable {
        sn_table(n).unwrap().validated().unwrap()
    }

    fn degrees(r: &SearchReport, t: &ValidatedTable) -> Vec<Vec<u64>> {
        r.solutions.iter().map(|s| s.support().iter().map(|&i| u64::try_from(t.degree(i)).unwrap()).collect()).collect()
    }

    impl Solution {
        fn support(&self) -> Vec<usize> {
            self.character().support()
        }
    }

    #[test]
    fn s6_steinberg_like_is_the_degree_16_irreducible() {
        let t = sn(6);
        let r = enumerate(&t, &SearchQuery::new(2, Mode::SteinbergLike, 1)).unwrap();
        assert!(r.exhaustive);
        assert_eq!(degrees(&r, &t), vec![vec![16]]);
    }

    #[test]
    fn s4_has_two_steinberg_like() {
        let t = sn(4);
        let r = enumerate(&t, &SearchQuery::new(2, Mode::SteinbergLike, 1)).unwrap();
        assert_eq!(r.solutions.len(), 2);
        for s in &r.solutions {
            assert!(s.flags.is_steinberg_like);
            assert_eq!(s.flags.degree, BigUint::from(8u32));
        }
    }

    #[test]
    fn rejects_bad_queries() {
        let t = sn(4);
        assert!(matches!(
            enumerate(&t, &SearchQuery::new(5, Mode::SylRegular, 1)),
            Err(Error::PrimeNotDividing { p: 5 })
        ));
        assert!(enumerate(&t, &SearchQuery::new(4, Mode::SylRegular, 1)).is_err());
        assert!(enumerate(&t, &SearchQuery::new(2, Mode::SylRegular, 0)).is_err());
    }

    #[test]
    fn cap_marks_truncation() {
        let t = sn(4);
        let r = enumerate(&t, &SearchQuery::new(2, Mode::SteinbergLike, 1).with_max_solutions(1)).unwrap();
        assert_eq!(r.solutions.len(), 1);
        assert!(!r.exhaustive);
        let r = enumerate(&t, &SearchQuery::new(2, Mode::SteinbergLike, 1).with_max_solutions(2)).unwrap();
        assert!(r.exhaustive);
    }

    #[test]
    fn report_round_trips() {
        let t = sn(5);
        let r = enumerate(&t, &SearchQuery::new(2, Mode::SylVanishing, 2)).unwrap();
        assert_eq!(SearchReport::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_json().contains("\"mode\":\"syl_vanishing\""));
    }

    #[test]
    fn mode_names() {
        for m in Mode::ALL {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
        }
        assert_eq!("sylreg".parse::<Mode>().unwrap(), Mode::SylRegular);
        assert_eq!("pvanish".parse::<Mode>().unwrap(), Mode::PVanishing);
    }
}
