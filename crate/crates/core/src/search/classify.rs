use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::ctable::{CharacterTable, VirtualCharacter};
use crate::error::{Error, Result};
use crate::numth::require_prime;

use super::bigstr;

/// Properties of a character, found by evaluating it on every relevant class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(with = "bigstr")]
    pub degree: BigUint,
    /// χ(1)/|S| when χ vanishes on all nontrivial p-elements, otherwise undefined.
    #[serde(with = "bigstr::option")]
    pub level: Option<BigUint>,
    pub is_p_vanishing: bool,
    pub is_syl_vanishing: bool,
    pub is_syl_regular: bool,
    pub is_steinberg_like: bool,
    /// Multiplicity of the trivial character.
    pub contains_trivial: u64,
}

/// Evaluate `v` on the p-singular classes of `t`, independently of the search.
pub fn classify(t: &CharacterTable, p: u64, v: &VirtualCharacter) -> Result<Classification> {
    require_prime(p)?;
    let k = t.num_irreducibles();
    if v.multiplicities.len() != k {
        return Err(Error::Dimension { expected: k, got: v.multiplicities.len() });
    }
    let sylow = t.sylow_order(p);
    let degree = t
        .evaluate(v, 0)
        .to_integer()
        .and_then(|d| d.to_biguint())
        .ok_or_else(|| Error::Invalid("degree is not a nonnegative integer".into()))?;
    let (singular, p_elements) = t.classes_by_p_type(p);
    let vanishes = |cs: &[usize]| cs.iter().all(|&c| t.evaluate(v, c).is_zero());
    let is_syl_vanishing = vanishes(&p_elements);
    // a character vanishing on p-singular classes vanishes on p-elements in particular
    let is_p_vanishing = is_syl_vanishing && vanishes(&singular);
    let level = if is_syl_vanishing {
        let (l, r) = degree.div_rem(&sylow);
        r.is_zero().then_some(l)
    } else {
        None
    };
    Ok(Classification {
        is_syl_regular: is_syl_vanishing && degree == sylow,
        is_steinberg_like: is_p_vanishing && degree == sylow,
        is_p_vanishing,
        is_syl_vanishing,
        level,
        contains_trivial: v.multiplicities.first().copied().unwrap_or(0),
        degree,
    })
}
