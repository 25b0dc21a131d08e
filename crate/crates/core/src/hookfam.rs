//! Sums of hook characters of S_n and A_n that vanish on all elements of even order.
//!
//! Γ_i is the character of S_n for the hook [i, 1^{n−i}] (so Γ_1 is the sign and Γ_n
//! the trivial character), of degree C(n−1, i−1). The families are sums of these:
//! all of them, or the even/odd indexed ones, or on A_n (where Γ_i and Γ_{n+1−i}
//! restrict to the same character) half of such a sum, with one of the two constituents
//! of the middle hook Γ_{(n+1)/2} when n is odd.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::ctable::{CharacterTable, VirtualCharacter};
use crate::error::{Error, Result};
use crate::search::{classify, Solution};
use crate::symmchar::{an_layout, an_table, mn_value, partitions_of, sn_table, Partition, MAX_N};

/// Which hook sum, with the parity of n it is defined for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaVariant {
    /// S_n, n even: Γ_1 + … + Γ_n.
    Full,
    /// S_n, n odd: Γ_2 + Γ_4 + … + Γ_{n−1}.
    E,
    /// S_n, n odd: Γ_1 + Γ_3 + … + Γ_n.
    O,
    /// A_n, n even: Γ_1 + … + Γ_{n/2}.
    A0,
    /// A_n, n ≡ 1 mod 4: Γ_2 + Γ_4 + … + Γ_{(n−1)/2}.
    Ea,
    /// A_n, n ≡ 1 mod 4: Γ_1 + Γ_3 + … + Γ_{(n−3)/2} + Γ⁺_{(n+1)/2}.
    OPlus,
    /// As [`GammaVariant::OPlus`] with Γ⁻_{(n+1)/2}.
    OMinus,
    /// A_n, n ≡ 3 mod 4: Γ_1 + Γ_3 + … + Γ_{(n−1)/2}.
    Oa,
    /// A_n, n ≡ 3 mod 4: Γ_2 + Γ_4 + … + Γ_{(n−3)/2} + Γ⁺_{(n+1)/2}.
    EPlus,
    /// As [`GammaVariant::EPlus`] with Γ⁻_{(n+1)/2}.
    EMinus,
}

impl GammaVariant {
    pub const ALL: [GammaVariant; 10] = [
        GammaVariant::Full,
        GammaVariant::E,
        GammaVariant::O,
        GammaVariant::A0,
        GammaVariant::Ea,
        GammaVariant::OPlus,
        GammaVariant::OMinus,
        GammaVariant::Oa,
        GammaVariant::EPlus,
        GammaVariant::EMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaVariant::Full => "full",
            GammaVariant::E => "e",
            GammaVariant::O => "o",
            GammaVariant::A0 => "a0",
            GammaVariant::Ea => "ea",
            GammaVariant::OPlus => "o_plus",
            GammaVariant::OMinus => "o_minus",
            GammaVariant::Oa => "oa",
            GammaVariant::EPlus => "e_plus",
            GammaVariant::EMinus => "e_minus",
        }
    }

    /// Lives on A_n rather than S_n.
    pub fn is_alternating(self) -> bool {
        !matches!(self, GammaVariant::Full | GammaVariant::E | GammaVariant::O)
    }

    /// Whether the variant is defined for this n (within the table range).
    pub fn admits(self, n: u32) -> bool {
        if n > MAX_N {
            return false;
        }
        match self {
            GammaVariant::Full => n >= 2 && n.is_multiple_of(2),
            GammaVariant::E | GammaVariant::O => n >= 3 && n % 2 == 1,
            GammaVariant::A0 => n >= 4 && n.is_multiple_of(2),
            GammaVariant::Ea | GammaVariant::OPlus | GammaVariant::OMinus => n >= 5 && n % 4 == 1,
            GammaVariant::Oa | GammaVariant::EPlus | GammaVariant::EMinus => n >= 7 && n % 4 == 3,
        }
    }

    /// Hook indices i (Γ_i) in the sum, and the sign of the middle constituent if any.
    fn hooks(self, n: u32) -> (Vec<u32>, Option<bool>) {
        let evens = |hi: u32| (1..=hi).filter(|i| i % 2 == 0).collect::<Vec<_>>();
        let odds = |hi: u32| (1..=hi).filter(|i| i % 2 == 1).collect::<Vec<_>>();
        match self {
            GammaVariant::Full => ((1..=n).collect(), None),
            GammaVariant::E => (evens(n - 1), None),
            GammaVariant::O => (odds(n), None),
            GammaVariant::A0 => ((1..=n / 2).collect(), None),
            GammaVariant::Ea => (evens((n - 1) / 2), None),
            GammaVariant::OPlus => (odds((n - 3) / 2), Some(true)),
            GammaVariant::OMinus => (odds((n - 3) / 2), Some(false)),
            GammaVariant::Oa => (odds((n - 1) / 2), None),
            GammaVariant::EPlus => (evens((n - 3) / 2), Some(true)),
            GammaVariant::EMinus => (evens((n - 3) / 2), Some(false)),
        }
    }

    /// The verdict expected for this n: Steinberg-like exactly when n is 2^k (full, a0)
    /// or 2^k + 1 (e, o, ea, o±); never for oa, e±.
    pub fn expected_steinberg_like(self, n: u32) -> bool {
        match self {
            GammaVariant::Full | GammaVariant::A0 => n.is_power_of_two(),
            GammaVariant::E | GammaVariant::O | GammaVariant::Ea | GammaVariant::OPlus | GammaVariant::OMinus => {
                (n - 1).is_power_of_two()
            }
            GammaVariant::Oa | GammaVariant::EPlus | GammaVariant::EMinus => false,
        }
    }
}

impl fmt::Display for GammaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GammaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown variant `{s}`")))
    }
}

fn check(n: u32, v: GammaVariant) -> Result<()> {
    if v.admits(n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("variant {v} is not defined for n = {n}")))
    }
}

/// The table the variant lives on: S_n or A_n.
pub fn family_table(n: u32, v: GammaVariant) -> Result<CharacterTable> {
    check(n, v)?;
    if v.is_alternating() {
        an_table(n)
    } else {
        sn_table(n)
    }
}

/// Multiplicity vector of the family over [`family_table`].
pub fn gamma_family(n: u32, v: GammaVariant) -> Result<VirtualCharacter> {
    check(n, v)?;
    let (hooks, middle) = v.hooks(n);
    if !v.is_alternating() {
        let rows = partitions_of(n);
        let idx: Vec<usize> =
            hooks.iter().map(|&i| rows.iter().position(|r| *r == Partition::hook(n, i)).expect("hook row")).collect();
        return Ok(VirtualCharacter::from_rows(rows.len(), &idx));
    }
    let (rows, _) = an_layout(n);
    let find = |lam: &Partition, split: Option<bool>| {
        rows.iter().position(|r| &r.partition == lam && r.split == split).expect("hook row of A_n")
    };
    let mut idx: Vec<usize> = hooks
        .iter()
        .map(|&i| {
            let (a, b) = (Partition::hook(n, i), Partition::hook(n, n + 1 - i));
            find(if a > b { &a } else { &b }, None)
        })
        .collect();
    if let Some(sign) = middle {
        idx.push(find(&Partition::hook(n, n.div_ceil(2)), Some(sign)));
    }
    Ok(VirtualCharacter::from_rows(rows.len(), &idx))
}

/// Γ_k^{r}(h) for the hook [k, 1^{r−k}] of S_r, zero outside 1 ≤ k ≤ r.
fn small_hook(r: u32, k: u32, h: &Partition) -> Result<i64> {
    if k == 0 || k > r {
        return Ok(0);
    }
    mn_value(&Partition::hook(r, k), h)
}

/// Γ_i(g) for g = c·h with c an m-cycle (m even) and h ∈ S_{n−m} of cycle type `h`,
/// via the three-case reduction to hook characters of S_{n−m}.
pub fn hook_value_with_cycle(n: u32, m: u32, i: u32, h: &Partition) -> Result<i64> {
    if m == 0 || m >= n || m % 2 == 1 {
        return Err(Error::OutOfRange(format!("need 0 < m < n with m even, got m = {m}, n = {n}")));
    }
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("hook index {i} outside 1..={n}")));
    }
    let r = n - m;
    if h.size() != r {
        return Err(Error::OutOfRange(format!("h = {h} is not a partition of {r}")));
    }
    if i <= m {
        Ok(-small_hook(r, i, h)?)
    } else if i > r {
        small_hook(r, i - m, h)
    } else {
        Ok(small_hook(r, i - m, h)? - small_hook(r, i, h)?)
    }
}

/// Outcome of checking one family against the expected verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub table: String,
    pub n: u32,
    pub variant: GammaVariant,
    pub p: u64,
    #[serde(with = "crate::search::bigstr")]
    pub sylow_order: BigUint,
    /// The family itself, in the same shape as a search solution.
    pub solutions: Vec<Solution>,
    pub expected_steinberg_like: bool,
    /// 2-vanishing, degree as stated, and Steinberg-like exactly when expected.
    pub ok: bool,
}

/// Expected degree: 2^{n−1} for the full sum, 2^{n−2} for e/o and a0, 2^{n−3} otherwise.
fn expected_degree(n: u32, v: GammaVariant) -> BigUint {
    let e = match v {
        GammaVariant::Full => n - 1,
        GammaVariant::E | GammaVariant::O | GammaVariant::A0 => n - 2,
        _ => n - 3,
    };
    BigUint::from(2u32).pow(e)
}

/// Evaluate the family on every class of even order of its table.
pub fn verify_family(n: u32, v: GammaVariant) -> Result<FamilyReport> {
    let table = family_table(n, v)?;
    verify_family_on(&table, n, v)
}

/// As [`verify_family`], reusing an already built S_n or A_n table.
pub fn verify_family_on(table: &CharacterTable, n: u32, v: GammaVariant) -> Result<FamilyReport> {
    check(n, v)?;
    let chi = gamma_family(n, v)?;
    if chi.multiplicities.len() != table.num_irreducibles() {
        return Err(Error::Dimension { expected: table.num_irreducibles(), got: chi.multiplicities.len() });
    }
    let flags = classify(table, 2, &chi)?;
    let expected = v.expected_steinberg_like(n);
    let ok = flags.is_p_vanishing && flags.degree == expected_degree(n, v) && flags.is_steinberg_like == expected;
    let constituents = chi.support().iter().map(|&i| table.irreducibles[i].label.clone()).collect();
    Ok(FamilyReport {
        table: table.name.clone(),
        n,
        variant: v,
        p: 2,
        sylow_order: table.sylow_order(2),
        solutions: vec![Solution { mult: chi.multiplicities, constituents, flags }],
        expected_steinberg_like: expected,
        ok,
    })
}
