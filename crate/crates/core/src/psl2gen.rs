//! Generic character tables of SL₂(q) and PSL₂(q) for odd prime powers q ≥ 5.
//!
//! Class labels (SL₂): `1`, `z` (= −1), `u`, `u'` (unipotent, with 1 resp. a nonsquare
//! in the corner), `zu`, `zu'`, `a{l}` for the split torus element diag(α^l, α^{−l}),
//! l = 1..(q−3)/2, and `b{m}` for the m-th power of a generator of the nonsplit torus,
//! m = 1..(q−1)/2.
//!
//! Row labels: `1`, `St`, `ps{k}` (principal series of degree q+1 attached to the k-th
//! power of a generator of the dual of F_q^×, k = 1..(q−3)/2), `ds{l}` (discrete series
//! of degree q−1, l = 1..(q−1)/2), `xi1`, `xi2` of degree (q+1)/2 and `eta1`, `eta2`
//! of degree (q−1)/2.
//!
//! PSL₂(q) keeps the rows trivial on z and fuses each class with the class of −g.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::ctable::{CharacterTable, ClassInfo, Irreducible};
use crate::cyclo::{gauss_sum, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::numth::prime_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Psl2Variant {
    SL2,
    PSL2,
}

/// q = r^f odd, q ≥ 5, and which group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl2Spec {
    pub q: u64,
    pub r: u64,
    pub f: u32,
    pub variant: Psl2Variant,
}

impl Psl2Spec {
    pub fn new(q: u64, variant: Psl2Variant) -> Result<Self> {
        let (r, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if r == 2 || q < 5 {
            return Err(Error::OutOfRange(format!("q = {q}: odd prime power q ≥ 5 required")));
        }
        Ok(Psl2Spec { q, r, f, variant })
    }
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_int(v)
}

/// ζ_n^k + ζ_n^{−k}
fn two_cos(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n as u32, k) + Cyclotomic::root_of_unity(n as u32, -k)
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

struct Sl2 {
    classes: Vec<ClassInfo>,
    rows: Vec<Irreducible>,
}

fn build_sl2(spec: &Psl2Spec) -> Sl2 {
    let q = spec.q as i64;
    let (r, f) = (spec.r, spec.f);
    let eps: i64 = if (q - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let root = if f % 2 == 0 {
        int((r as i64).pow(f / 2))
    } else {
        gauss_sum(r as u32).scale(&Rational::from_integer((r as i64).pow((f - 1) / 2).into()))
    };
    let half = Rational::new(1.into(), 2.into());
    let big = |v: i64| BigUint::from(v as u64);

    let nsplit = (q - 3) / 2;
    let nnon = (q - 1) / 2;
    let mut classes = vec![
        ClassInfo { label: "1".into(), size: big(1), element_order: 1 },
        ClassInfo { label: "z".into(), size: big(1), element_order: 2 },
    ];
    for (lab, ord) in [("u", r), ("u'", r), ("zu", 2 * r), ("zu'", 2 * r)] {
        classes.push(ClassInfo { label: lab.into(), size: big((q * q - 1) / 2), element_order: ord });
    }
    for l in 1..=nsplit {
        let ord = (q - 1) / l.gcd(&(q - 1));
        classes.push(ClassInfo { label: format!("a{l}"), size: big(q * (q + 1)), element_order: ord as u64 });
    }
    for m in 1..=nnon {
        let ord = (q + 1) / m.gcd(&(q + 1));
        classes.push(ClassInfo { label: format!("b{m}"), size: big(q * (q - 1)), element_order: ord as u64 });
    }

    let row = |label: String, head: [Cyclotomic; 6], a: &dyn Fn(i64) -> Cyclotomic, b: &dyn Fn(i64) -> Cyclotomic| {
        let mut values: Vec<Cyclotomic> = head.into_iter().collect();
        values.extend((1..=nsplit).map(a));
        values.extend((1..=nnon).map(b));
        Irreducible { label, values }
    };

    let mut rows = Vec::new();
    rows.push(row("1".into(), std::array::from_fn(|_| int(1)), &|_| int(1), &|_| int(1)));
    rows.push(row("St".into(), [int(q), int(q), int(0), int(0), int(0), int(0)], &|_| int(1), &|_| int(-1)));
    for k in 1..=nsplit {
        let s = sign(k);
        rows.push(row(
            format!("ps{k}"),
            [int(q + 1), int(s * (q + 1)), int(1), int(1), int(s), int(s)],
            &|l| two_cos(q as u64 - 1, k * l),
            &|_| int(0),
        ));
    }
    for j in 1..=nnon {
        let s = sign(j);
        rows.push(row(
            format!("ds{j}"),
            [int(q - 1), int(s * (q - 1)), int(-1), int(-1), int(-s), int(-s)],
            &|_| int(0),
            &|m| -two_cos(q as u64 + 1, j * m),
        ));
    }
    let plus = (int(1) + &root).scale(&half);
    let minus = (int(1) - &root).scale(&half);
    for (lab, x, y) in [("xi1", &plus, &minus), ("xi2", &minus, &plus)] {
        rows.push(row(
            lab.into(),
            [
                int((q + 1) / 2),
                int(eps * (q + 1) / 2),
                x.clone(),
                y.clone(),
                x.scale(&Rational::from_integer(eps.into())),
                y.scale(&Rational::from_integer(eps.into())),
            ],
            &|l| int(sign(l)),
            &|_| int(0),
        ));
    }
    let plus = (int(-1) + &root).scale(&half);
    let minus = (int(-1) - &root).scale(&half);
    for (lab, x, y) in [("eta1", &plus, &minus), ("eta2", &minus, &plus)] {
        rows.push(row(
            lab.into(),
            [
                int((q - 1) / 2),
                int(-eps * (q - 1) / 2),
                x.clone(),
                y.clone(),
                x.scale(&Rational::from_integer((-eps).into())),
                y.scale(&Rational::from_integer((-eps).into())),
            ],
            &|_| int(0),
            &|m| int(-sign(m)),
        ));
    }
    Sl2 { classes, rows }
}

/// Character table of SL₂(q) or PSL₂(q), q odd prime power ≥ 5.
pub fn psl2_table(spec: &Psl2Spec) -> CharacterTable {
    let q = spec.q as i64;
    let s = build_sl2(spec);
    match spec.variant {
        Psl2Variant::SL2 => CharacterTable {
            name: format!("SL2({q})"),
            group_order: BigUint::from((q * (q * q - 1)) as u64),
            classes: s.classes,
            powermaps: None,
            irreducibles: s.rows,
        },
        Psl2Variant::PSL2 => {
            let nsplit = (q - 3) / 2;
            // (kept SL₂ class index, PSL₂ size, PSL₂ element order)
            let mut keep: Vec<(usize, u64, u64)> = vec![(0, 1, 1)];
            let r = spec.r;
            let usize_ = ((q * q - 1) / 2) as u64;
            keep.push((2, usize_, r));
            keep.push((3, usize_, r));
            let hs = (q - 1) / 2;
            for l in 1..=nsplit {
                let partner = hs - l;
                if l <= partner {
                    let size = if l == partner { q * (q + 1) / 2 } else { q * (q + 1) };
                    keep.push((5 + l as usize, size as u64, (hs / l.gcd(&hs)) as u64));
                }
            }
            let hn = (q + 1) / 2;
            for m in 1..=(q - 1) / 2 {
                let partner = hn - m;
                if m <= partner {
                    let size = if m == partner { q * (q - 1) / 2 } else { q * (q - 1) };
                    keep.push((5 + nsplit as usize + m as usize, size as u64, (hn / m.gcd(&hn)) as u64));
                }
            }
            let classes = keep
                .iter()
                .map(|&(i, size, ord)| ClassInfo {
                    label: s.classes[i].label.clone(),
                    size: BigUint::from(size),
                    element_order: ord,
                })
                .collect();
            let irreducibles = s
                .rows
                .into_iter()
                .filter(|row| row.values[1] == row.values[0])
                .map(|row| Irreducible {
                    label: row.label,
                    values: keep.iter().map(|&(i, _, _)| row.values[i].clone()).collect(),
                })
                .collect();
            CharacterTable {
                name: format!("L2({q})"),
                group_order: BigUint::from((q * (q * q - 1) / 2) as u64),
                classes,
                powermaps: None,
                irreducibles,
            }
        }
    }
}

/// Shorthand for `psl2_table(&Psl2Spec::new(q, PSL2)?)`.
pub fn psl2(q: u64) -> Result<CharacterTable> {
    Ok(psl2_table(&Psl2Spec::new(q, Psl2Variant::PSL2)?))
}

/// Shorthand for `psl2_table(&Psl2Spec::new(q, SL2)?)`.
pub fn sl2(q: u64) -> Result<CharacterTable> {
    Ok(psl2_table(&Psl2Spec::new(q, Psl2Variant::SL2)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(t: &CharacterTable) -> Vec<u64> {
        let mut d: Vec<u64> = t.degrees().iter().map(|x| x.try_into().unwrap()).collect();
        d.sort();
        d
    }

    #[test]
    fn generated_tables_validate() {
        for q in [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 31] {
            for t in [sl2(q).unwrap(), psl2(q).unwrap()] {
                let rep = t.validate();
                assert!(rep.ok, "{}: {:?}", t.name, &rep.failures[..rep.failures.len().min(4)]);
                assert_eq!(t.num_classes(), t.num_irreducibles());
            }
        }
    }

    #[test]
    fn psl2_7_degrees() {
        assert_eq!(sorted_degrees(&psl2(7).unwrap()), vec![1, 3, 3, 6, 7, 8]);
        assert_eq!(sorted_degrees(&psl2(5).unwrap()), vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn rejects_bad_q() {
        assert!(psl2(8).is_err());
        assert!(psl2(15).is_err());
        assert!(psl2(3).is_err());
    }
}
