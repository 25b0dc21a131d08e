//! Partitions, the Murnaghan–Nakayama rule and full character tables of S_n and A_n.
//!
//! Rows are ordered reverse-lexicographically by partition (the trivial character
//! [n] first). Classes are ordered lexicographically by cycle type so that the
//! identity [1^n] is class 0.

mod mn;
mod partition;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::ctable::{CharacterTable, ClassInfo, Irreducible};
use crate::cyclo::{sqrt_integer, Cyclotomic, Rational};
use crate::error::{Error, Result};

pub use mn::{hook_degree, mn_value, MnCache};
pub use partition::{partitions_of, Partition};

/// Largest n for which full tables are built.
pub const MAX_N: u32 = 17;

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Character values of S_n: rows in reverse-lex order, classes in lex order.
pub struct SnValues {
    pub rows: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

/// All χ^λ(μ) for partitions of n, computed row-parallel with per-worker caches.
pub fn sn_values(n: u32) -> SnValues {
    let rows = partitions_of(n);
    let mut classes = rows.clone();
    classes.reverse();
    let values = rows
        .par_iter()
        .map_init(MnCache::new, |cache, lam| {
            classes.iter().map(|mu| cache.value(lam, mu).expect("same size")).collect()
        })
        .collect();
    SnValues { rows, classes, values }
}

fn check_range(n: u32, lo: u32) -> Result<()> {
    if n < lo || n > MAX_N {
        return Err(Error::OutOfRange(format!("n = {n} outside {lo}..={MAX_N}")));
    }
    Ok(())
}

/// Character table of the symmetric group S_n, 1 ≤ n ≤ 17, with power maps.
pub fn sn_table(n: u32) -> Result<CharacterTable> {
    check_range(n, 1)?;
    let sv = sn_values(n);
    let order = factorial(n);
    let classes: Vec<ClassInfo> = sv
        .classes
        .iter()
        .map(|mu| ClassInfo {
            label: mu.to_string(),
            size: &order / mu.centralizer_order(),
            element_order: mu.element_order(),
        })
        .collect();
    let irreducibles = sv
        .rows
        .iter()
        .zip(&sv.values)
        .map(|(lam, vals)| Irreducible {
            label: lam.to_string(),
            values: vals.iter().map(|&v| Cyclotomic::from_int(v)).collect(),
        })
        .collect();
    let index: BTreeMap<&Partition, usize> = sv.classes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut powermaps = BTreeMap::new();
    for p in (2..=n).filter(|&p| (2..p).all(|d| p % d != 0)) {
        let map = sv.classes.iter().map(|mu| index[&mu.power(p)]).collect();
        powermaps.insert(p.to_string(), map);
    }
    Ok(CharacterTable {
        name: format!("S{n}"),
        group_order: order,
        classes,
        powermaps: if powermaps.is_empty() { None } else { Some(powermaps) },
        irreducibles,
    })
}

/// One class of A_n: its cycle type and, for split classes, the sign of the half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnClass {
    pub cycle_type: Partition,
    pub split: Option<bool>,
}

/// One row of A_n: a partition (representative of {λ, λ'}) and, for self-conjugate λ,
/// which of the two constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnRow {
    pub partition: Partition,
    pub split: Option<bool>,
}

/// Row and class bookkeeping of [`an_table`], in table order.
pub fn an_layout(n: u32) -> (Vec<AnRow>, Vec<AnClass>) {
    let mut classes = Vec::new();
    let mut cts = partitions_of(n);
    cts.reverse();
    for mu in cts.into_iter().filter(|m| m.is_even_permutation()) {
        if mu.splits_in_alternating() && n > 1 {
            classes.push(AnClass { cycle_type: mu.clone(), split: Some(true) });
            classes.push(AnClass { cycle_type: mu, split: Some(false) });
        } else {
            classes.push(AnClass { cycle_type: mu, split: None });
        }
    }
    let mut rows = Vec::new();
    for lam in partitions_of(n) {
        let conj = lam.conjugate();
        if lam == conj {
            rows.push(AnRow { partition: lam.clone(), split: Some(true) });
            rows.push(AnRow { partition: lam, split: Some(false) });
        } else if lam > conj {
            rows.push(AnRow { partition: lam, split: None });
        }
    }
    (rows, classes)
}

fn an_class_label(c: &AnClass) -> String {
    match c.split {
        None => c.cycle_type.to_string(),
        Some(true) => format!("{}+", c.cycle_type),
        Some(false) => format!("{}-", c.cycle_type),
    }
}

fn an_row_label(r: &AnRow) -> String {
    match r.split {
        None => r.partition.to_string(),
        Some(true) => format!("{}+", r.partition),
        Some(false) => format!("{}-", r.partition),
    }
}

/// Character table of the alternating group A_n, 3 ≤ n ≤ 17.
///
/// Non-self-conjugate λ restrict irreducibly (λ and λ' agree on A_n). A self-conjugate
/// λ splits into λ⁺, λ⁻, which agree (with half the S_n value) except on the two classes
/// of cycle type h = diagonal hook lengths of λ, where they take (ε ± √(εΠh))/2 with
/// ε = (−1)^{(n−r)/2}, r the number of diagonal hooks. λ⁺ takes the "+" value on the
/// first of the two classes.
pub fn an_table(n: u32) -> Result<CharacterTable> {
    check_range(n, 3)?;
    let sv = sn_values(n);
    let (rows, classes) = an_layout(n);
    let order = factorial(n) / BigUint::from(2u32);
    let col_of = |mu: &Partition| sv.classes.iter().position(|m| m == mu).expect("cycle type present");
    let row_of = |lam: &Partition| sv.rows.iter().position(|m| m == lam).expect("partition present");
    let class_info: Vec<ClassInfo> = classes
        .iter()
        .map(|c| {
            let full = factorial(n) / c.cycle_type.centralizer_order();
            let size = if c.split.is_some() { full / BigUint::from(2u32) } else { full };
            ClassInfo { label: an_class_label(c), size, element_order: c.cycle_type.element_order() }
        })
        .collect();
    let half = Rational::new(1.into(), 2.into());
    let irreducibles = rows
        .iter()
        .map(|r| {
            let srow = &sv.values[row_of(&r.partition)];
            let values = match r.split {
                None => classes.iter().map(|c| Cyclotomic::from_int(srow[col_of(&c.cycle_type)])).collect(),
                Some(sign) => {
                    let h = Partition::from_parts(r.partition.diagonal_hooks());
                    let nr = h.len() as u32;
                    let eps: i64 = if ((n - nr) / 2).is_multiple_of(2) { 1 } else { -1 };
                    let prod: i64 = h.parts().iter().map(|&x| x as i64).product();
                    let root = sqrt_integer(eps * prod);
                    classes
                        .iter()
                        .map(|c| {
                            let v = srow[col_of(&c.cycle_type)];
                            match c.split {
                                Some(cs) if c.cycle_type == h => {
                                    let base = Cyclotomic::from_int(eps);
                                    let s = if cs == sign { root.clone() } else { -&root };
                                    (base + s).scale(&half)
                                }
                                _ => Cyclotomic::from_int(v).scale(&half),
                            }
                        })
                        .collect()
                }
            };
            Irreducible { label: an_row_label(r), values }
        })
        .collect();
    Ok(CharacterTable { name: format!("A{n}"), group_order: order, classes: class_info, powermaps: None, irreducibles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(t: &CharacterTable) -> Vec<u64> {
        let mut d: Vec<u64> = t.degrees().iter().map(|x| x.try_into().unwrap()).collect();
        d.sort();
        d
    }

    #[test]
    fn small_tables() {
        let s4 = sn_table(4).unwrap();
        assert_eq!(degrees(&s4), vec![1, 1, 2, 3, 3]);
        assert!(s4.validate().ok, "{:?}", s4.validate().failures);
        let a5 = an_table(5).unwrap();
        assert_eq!(degrees(&a5), vec![1, 3, 3, 4, 5]);
        assert!(a5.validate().ok, "{:?}", a5.validate().failures);
        let a4 = an_table(4).unwrap();
        assert_eq!(degrees(&a4), vec![1, 1, 1, 3]);
        assert!(a4.validate().ok);
        let s8 = sn_table(8).unwrap();
        assert_eq!(degrees(&s8).iter().filter(|&&d| d == 64).count(), 2);
        assert!(sn_table(18).is_err() && an_table(2).is_err());
    }

    #[test]
    fn a5_split_values() {
        let a5 = an_table(5).unwrap();
        let rows: Vec<usize> =
            (0..a5.num_irreducibles()).filter(|&i| a5.irreducibles[i].label.starts_with("[3,1,1]")).collect();
        let cols: Vec<usize> = (0..a5.num_classes()).filter(|&c| a5.classes[c].label.starts_with("[5]")).collect();
        assert_eq!((rows.len(), cols.len()), (2, 2));
        let half = Rational::new(1.into(), 2.into());
        let root5 = sqrt_integer(5);
        let plus = (Cyclotomic::one() + &root5).scale(&half);
        let minus = (Cyclotomic::one() - &root5).scale(&half);
        let mut seen: Vec<Cyclotomic> = Vec::new();
        for &r in &rows {
            for &c in &cols {
                let v = a5.value(r, c).clone();
                assert!(v == plus || v == minus);
                seen.push(v);
            }
        }
        // each row takes both values, each class sees both values
        assert_ne!(seen[0], seen[1]);
        assert_ne!(seen[0], seen[2]);
    }

    #[test]
    fn tables_validate_through_twelve() {
        for n in 1..=12 {
            let s = sn_table(n).unwrap();
            let rep = s.validate();
            assert!(rep.ok, "S{n}: {:?}", &rep.failures[..rep.failures.len().min(3)]);
            if n >= 3 {
                let a = an_table(n).unwrap();
                let rep = a.validate();
                assert!(rep.ok, "A{n}: {:?}", &rep.failures[..rep.failures.len().min(3)]);
            }
        }
    }
}
