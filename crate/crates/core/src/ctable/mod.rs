//! Character-table data model, JSON ingestion/emission, p-type class predicates
//! and direct products.

mod validate;

use std::collections::BTreeMap;
use std::io::Read;
use std::ops::Deref;
use std::path::Path;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

pub use validate::{ValidationFailure, ValidationReport};

/// A conjugacy class: label, size and the order of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: String,
    #[serde(serialize_with = "ser_big", deserialize_with = "de_big")]
    pub size: BigUint,
    #[serde(rename = "order")]
    pub element_order: u64,
}

/// One irreducible character as its row of values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Irreducible {
    pub label: String,
    pub values: Vec<Cyclotomic>,
}

/// Ordinary character table. Class 0 is the identity and row 0 the trivial character.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub name: String,
    #[serde(rename = "order", serialize_with = "ser_big", deserialize_with = "de_big")]
    pub group_order: BigUint,
    pub classes: Vec<ClassInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powermaps: Option<BTreeMap<String, Vec<usize>>>,
    pub irreducibles: Vec<Irreducible>,
}

fn ser_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn de_big<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Str(String),
        Int(u64),
    }
    match Raw::deserialize(d)? {
        Raw::Int(v) => Ok(BigUint::from(v)),
        Raw::Str(s) => {
            s.trim().parse::<BigUint>().map_err(|_| serde::de::Error::custom(format!("non-integer size `{s}`")))
        }
    }
}

/// Multiplicity vector over a table's irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VirtualCharacter {
    pub multiplicities: Vec<u64>,
}

impl VirtualCharacter {
    pub fn new(multiplicities: Vec<u64>) -> Self {
        VirtualCharacter { multiplicities }
    }

    /// The character with multiplicity one on each listed row.
    pub fn from_rows(len: usize, rows: &[usize]) -> Self {
        let mut m = vec![0; len];
        for &r in rows {
            m[r] += 1;
        }
        VirtualCharacter { multiplicities: m }
    }

    pub fn support(&self) -> Vec<usize> {
        self.multiplicities.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, _)| i).collect()
    }
}

impl CharacterTable {
    /// Parse a table from JSON text. The table is not validated.
    pub fn from_json(text: &str) -> Result<Self> {
        let t: CharacterTable = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        t.check_shape()?;
        Ok(t)
    }

    /// Read a table from a JSON stream. The table is not validated.
    pub fn ingest<R: Read>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::from_json(&text)
    }

    /// Read a table from a JSON file. The table is not validated.
    pub fn ingest_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::ingest(std::io::BufReader::new(file))
    }

    fn check_shape(&self) -> Result<()> {
        if self.classes.is_empty() {
            return Err(Error::Malformed("no classes".into()));
        }
        let k = self.classes.len();
        for (i, row) in self.irreducibles.iter().enumerate() {
            if row.values.len() != k {
                return Err(Error::Malformed(format!(
                    "row {i} ({}) has {} values, expected {k}",
                    row.label,
                    row.values.len()
                )));
            }
        }
        if let Some(pm) = &self.powermaps {
            for (p, map) in pm {
                if map.len() != k || map.iter().any(|&c| c >= k) {
                    return Err(Error::Malformed(format!("power map {p} has wrong shape")));
                }
            }
        }
        Ok(())
    }

    /// Compact canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables always serialize")
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreducibles(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.irreducibles[row].values[class]
    }

    /// Degree of an irreducible, assuming the value at the identity is a positive integer.
    pub fn degree(&self, row: usize) -> BigUint {
        self.value(row, 0).to_integer().and_then(|d| d.to_biguint()).expect("degree is a nonnegative integer")
    }

    pub fn degrees(&self) -> Vec<BigUint> {
        (0..self.num_irreducibles()).map(|i| self.degree(i)).collect()
    }

    /// Run all consistency checks.
    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    /// Validate and wrap; the error carries the first failures.
    pub fn validated(self) -> Result<ValidatedTable> {
        let report = self.validate();
        if report.ok {
            Ok(ValidatedTable(self))
        } else {
            let msg = report.failures.iter().take(3).map(|f| f.to_string()).collect::<Vec<_>>().join("; ");
            Err(Error::Invalid(msg))
        }
    }

    /// Classes whose element order is divisible by p, and classes of nontrivial
    /// p-elements. Both are empty when p does not divide the group order.
    ///
    /// A character vanishes on S \ {1} for a Sylow p-subgroup S exactly when it
    /// vanishes on every nontrivial p-element class, since every p-element is
    /// conjugate into S.
    pub fn classes_by_p_type(&self, p: u64) -> (Vec<usize>, Vec<usize>) {
        if !(&self.group_order % p).is_zero() {
            return (Vec::new(), Vec::new());
        }
        let singular: Vec<usize> =
            (0..self.num_classes()).filter(|&c| self.classes[c].element_order.is_multiple_of(p)).collect();
        let p_elements = singular.iter().copied().filter(|&c| is_power_of(self.classes[c].element_order, p)).collect();
        (singular, p_elements)
    }

    /// Largest power of p dividing the group order.
    pub fn sylow_order(&self, p: u64) -> BigUint {
        let mut n = self.group_order.clone();
        let mut out = BigUint::one();
        let pb = BigUint::from(p);
        while !n.is_zero() && (&n % &pb).is_zero() {
            n /= &pb;
            out *= &pb;
        }
        out
    }

    /// Sum of the rows weighted by a multiplicity vector.
    pub fn evaluate(&self, v: &VirtualCharacter, class: usize) -> Cyclotomic {
        v.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| self.value(i, class).scale(&crate::cyclo::Rational::from_integer(m.into())))
            .sum()
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n <= 1 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A table that has passed [`CharacterTable::validate`].
#[derive(Clone, Debug)]
pub struct ValidatedTable(CharacterTable);

impl ValidatedTable {
    pub fn into_inner(self) -> CharacterTable {
        self.0
    }
}

impl Deref for ValidatedTable {
    type Target = CharacterTable;
    fn deref(&self) -> &CharacterTable {
        &self.0
    }
}

/// Character table of G × H: classes and rows are pairs in row-major order.
pub fn direct_product(a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let mut classes = Vec::with_capacity(a.num_classes() * b.num_classes());
    for ca in &a.classes {
        for cb in &b.classes {
            classes.push(ClassInfo {
                label: format!("{}x{}", ca.label, cb.label),
                size: &ca.size * &cb.size,
                element_order: ca.element_order.lcm(&cb.element_order),
            });
        }
    }
    let mut irreducibles = Vec::with_capacity(a.num_irreducibles() * b.num_irreducibles());
    for ra in &a.irreducibles {
        for rb in &b.irreducibles {
            let values = ra.values.iter().flat_map(|va| rb.values.iter().map(move |vb| va * vb)).collect();
            irreducibles.push(Irreducible { label: format!("{}x{}", ra.label, rb.label), values });
        }
    }
    let powermaps = match (&a.powermaps, &b.powermaps) {
        (Some(pa), Some(pb)) => {
            let kb = b.num_classes();
            let mut out = BTreeMap::new();
            for (p, ma) in pa {
                if let Some(mb) = pb.get(p) {
                    let m = ma.iter().flat_map(|&i| mb.iter().map(move |&j| i * kb + j)).collect();
                    out.insert(p.clone(), m);
                }
            }
            if out.is_empty() {
                None
            } else {
                Some(out)
            }
        }
        _ => None,
    };
    CharacterTable {
        name: format!("{}x{}", a.name, b.name),
        group_order: &a.group_order * &b.group_order,
        classes,
        powermaps,
        irreducibles,
    }
}

/// Table of the trivial group.
pub fn trivial_table() -> CharacterTable {
    CharacterTable {
        name: "1".into(),
        group_order: BigUint::one(),
        classes: vec![ClassInfo { label: "1a".into(), size: BigUint::one(), element_order: 1 }],
        powermaps: None,
        irreducibles: vec![Irreducible { label: "1".into(), values: vec![Cyclotomic::one()] }],
    }
}
