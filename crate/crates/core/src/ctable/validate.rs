use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CharacterTable;
use crate::cyclo::{Cyclotomic, Rational};

/// One failed consistency check, located by row/class indices where possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationFailure {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class2: Option<usize>,
    pub detail: String,
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        for (name, v) in [("row", self.row), ("row", self.row2), ("class", self.class), ("class", self.class2)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        write!(f, ": {}", self.detail)
    }
}

/// Outcome of [`CharacterTable::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub name: String,
    pub ok: bool,
    pub failures: Vec<ValidationFailure>,
    /// Cell most likely responsible for the orthogonality failures, when the failing
    /// row pairs share a single row and the failing class pairs a single class.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suspect_cell: Option<(usize, usize)>,
}

fn fail(check: &str, detail: String) -> ValidationFailure {
    ValidationFailure { check: check.into(), row: None, row2: None, class: None, class2: None, detail }
}

/// Table entry with a small-integer fast path.
#[derive(Clone)]
enum Cell {
    Int(i64),
    Cyc(Cyclotomic),
}

impl Cell {
    fn new(v: &Cyclotomic) -> Cell {
        match v.to_integer().and_then(|i| i.to_i64()) {
            Some(i) if i.unsigned_abs() < (1 << 40) => Cell::Int(i),
            _ => Cell::Cyc(v.clone()),
        }
    }

    fn as_cyc(&self) -> Cyclotomic {
        match self {
            Cell::Int(i) => Cyclotomic::from_int(*i),
            Cell::Cyc(c) => c.clone(),
        }
    }
}

/// Exact accumulator: i128 while everything is a small integer, cyclotomic otherwise.
struct Acc {
    int: i128,
    big: BigInt,
    cyc: Cyclotomic,
}

impl Acc {
    fn new() -> Self {
        Acc { int: 0, big: BigInt::zero(), cyc: Cyclotomic::zero() }
    }

    fn add_int(&mut self, v: i128) {
        match self.int.checked_add(v) {
            Some(s) => self.int = s,
            None => {
                self.big += BigInt::from(self.int) + BigInt::from(v);
                self.int = 0;
            }
        }
    }

    /// Add weight·a·b.
    fn add_product(&mut self, weight: Option<i128>, weight_big: &BigInt, a: &Cell, b: &Cell) {
        if let (Cell::Int(x), Cell::Int(y)) = (a, b) {
            let xy = *x as i128 * *y as i128;
            if let Some(w) = weight {
                if let Some(t) = xy.checked_mul(w) {
                    self.add_int(t);
                    return;
                }
            }
            self.big += weight_big * BigInt::from(xy);
            return;
        }
        let prod = a.as_cyc() * b.as_cyc();
        if !prod.is_zero() {
            self.cyc = &self.cyc + &prod.scale(&Rational::from_integer(weight_big.clone()));
        }
    }

    fn finish(self) -> Cyclotomic {
        let whole = BigInt::from(self.int) + self.big;
        self.cyc + Cyclotomic::from_int(whole)
    }
}

pub(super) fn validate(t: &CharacterTable) -> ValidationReport {
    let mut failures = Vec::new();
    let k = t.num_classes();
    let order = &t.group_order;

    if k == 0 {
        failures.push(fail("shape", "no classes".into()));
        return ValidationReport { name: t.name.clone(), ok: false, failures, suspect_cell: None };
    }
    if t.irreducibles.len() != k {
        failures.push(fail("shape", format!("{} irreducibles for {} classes", t.irreducibles.len(), k)));
    }
    for (i, row) in t.irreducibles.iter().enumerate() {
        if row.values.len() != k {
            let mut f = fail("shape", format!("row has {} values", row.values.len()));
            f.row = Some(i);
            failures.push(f);
        }
    }
    if !failures.is_empty() {
        return ValidationReport { name: t.name.clone(), ok: false, failures, suspect_cell: None };
    }

    let c0 = &t.classes[0];
    if !c0.size.is_one() || c0.element_order != 1 {
        let mut f = fail("identity", "class 0 must have size 1 and element order 1".into());
        f.class = Some(0);
        failures.push(f);
    }
    let total: BigUint = t.classes.iter().map(|c| &c.size).sum();
    if &total != order {
        failures.push(fail("class-sizes", format!("sizes sum to {total}, order is {order}")));
    }
    for (c, cl) in t.classes.iter().enumerate() {
        let bad_size = cl.size.is_zero() || !(order % &cl.size).is_zero();
        let bad_order = cl.element_order == 0 || !(order % cl.element_order).is_zero();
        if bad_size || bad_order {
            let mut f = fail("class-info", format!("size {} / element order {}", cl.size, cl.element_order));
            f.class = Some(c);
            failures.push(f);
        }
    }

    if t.irreducibles[0].values.iter().any(|v| *v != Cyclotomic::one()) {
        let mut f = fail("trivial", "row 0 is not the trivial character".into());
        f.row = Some(0);
        failures.push(f);
    }
    let mut degrees = Vec::with_capacity(k);
    for (i, row) in t.irreducibles.iter().enumerate() {
        match row.values[0].to_integer() {
            Some(d) if d > BigInt::zero() => degrees.push(d),
            _ => {
                let mut f = fail("degree", format!("value at identity is {}", row.values[0]));
                f.row = Some(i);
                f.class = Some(0);
                failures.push(f);
                degrees.push(BigInt::zero());
            }
        }
    }
    let sumsq: BigInt = degrees.iter().map(|d| d * d).sum();
    if sumsq != BigInt::from(order.clone()) {
        failures.push(fail("degree-squares", format!("sum of squared degrees {sumsq} != {order}")));
    }

    let cells: Vec<Vec<Cell>> = t.irreducibles.iter().map(|r| r.values.iter().map(Cell::new).collect()).collect();
    let conj: Vec<Vec<Cell>> =
        t.irreducibles.iter().map(|r| r.values.iter().map(|v| Cell::new(&v.conj())).collect()).collect();
    let sizes_big: Vec<BigInt> = t.classes.iter().map(|c| BigInt::from(c.size.clone())).collect();
    let sizes_small: Vec<Option<i128>> = t.classes.iter().map(|c| c.size.to_i128()).collect();
    let one_big = BigInt::one();

    let order_c = Cyclotomic::from_int(BigInt::from(order.clone()));
    let row_fail: Vec<ValidationFailure> = (0..k)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for j in i..k {
                let mut acc = Acc::new();
                for c in 0..k {
                    acc.add_product(sizes_small[c], &sizes_big[c], &cells[i][c], &conj[j][c]);
                }
                let s = acc.finish();
                let want = if i == j { order_c.clone() } else { Cyclotomic::zero() };
                if s != want {
                    let mut f = fail("row-orthogonality", format!("inner product {s}, expected {want}"));
                    f.row = Some(i);
                    f.row2 = Some(j);
                    out.push(f);
                }
            }
            out
        })
        .collect();

    let col_fail: Vec<ValidationFailure> = (0..k)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut out = Vec::new();
            let centralizer = if t.classes[a].size.is_zero() { BigUint::zero() } else { order / &t.classes[a].size };
            for b in a..k {
                let mut acc = Acc::new();
                for r in 0..k {
                    acc.add_product(Some(1), &one_big, &cells[r][a], &conj[r][b]);
                }
                let s = acc.finish();
                let want =
                    if a == b { Cyclotomic::from_int(BigInt::from(centralizer.clone())) } else { Cyclotomic::zero() };
                if s != want {
                    let mut f = fail("column-orthogonality", format!("sum {s}, expected {want}"));
                    f.class = Some(a);
                    f.class2 = Some(b);
                    out.push(f);
                }
            }
            out
        })
        .collect();

    let suspect_cell = locate(&row_fail, &col_fail);
    failures.extend(row_fail);
    failures.extend(col_fail);

    failures.extend(galois_checks(t));

    ValidationReport { name: t.name.clone(), ok: failures.is_empty(), failures, suspect_cell }
}

/// The index common to every failing pair, if there is exactly one.
fn common_index(pairs: impl Iterator<Item = (usize, usize)>) -> Option<usize> {
    let mut cand: Option<Vec<usize>> = None;
    for (a, b) in pairs {
        let here = if a == b { vec![a] } else { vec![a, b] };
        cand = Some(match cand {
            None => here,
            Some(prev) => prev.into_iter().filter(|x| here.contains(x)).collect(),
        });
    }
    match cand {
        Some(v) if v.len() == 1 => Some(v[0]),
        _ => None,
    }
}

fn locate(rows: &[ValidationFailure], cols: &[ValidationFailure]) -> Option<(usize, usize)> {
    let r = common_index(rows.iter().map(|f| (f.row.unwrap(), f.row2.unwrap())))?;
    let c = common_index(cols.iter().map(|f| (f.class.unwrap(), f.class2.unwrap())))?;
    Some((r, c))
}

/// Brauer's permutation lemma (as many rational rows as rational columns) and, when
/// power maps are supplied, χ(g^r) = σ_r(χ(g)) for primes r coprime to the order of g.
fn galois_checks(t: &CharacterTable) -> Vec<ValidationFailure> {
    let mut out = Vec::new();
    let k = t.num_classes();
    let rational_rows = t.irreducibles.iter().filter(|r| r.values.iter().all(|v| v.is_rational())).count();
    let rational_cols = (0..k).filter(|&c| t.irreducibles.iter().all(|r| r.values[c].is_rational())).count();
    if rational_rows != rational_cols {
        out.push(fail(
            "rationality",
            format!("{rational_rows} rational characters but {rational_cols} rational classes"),
        ));
    }
    if let Some(pm) = &t.powermaps {
        for (p, map) in pm {
            let Ok(r) = p.parse::<u64>() else {
                out.push(fail("powermap", format!("bad prime key {p}")));
                continue;
            };
            for c in 0..k {
                let ord = t.classes[c].element_order;
                let img = map[c];
                let expect_order = ord / ord.gcd(&r);
                if t.classes[img].element_order != expect_order {
                    let mut f = fail("powermap", format!("{r}-th power has order {}", t.classes[img].element_order));
                    f.class = Some(c);
                    out.push(f);
                    continue;
                }
                if ord.is_multiple_of(r) {
                    continue;
                }
                let bad = t.irreducibles.iter().position(|row| {
                    let v = &row.values[c];
                    let n = v.conductor() as u64;
                    // x ≡ r mod ord(g) and coprime to the conductor acts as σ_r on the values
                    let lift = (0..n.max(1)).map(|j| r + j * ord).find(|x| x.gcd(&n) == 1);
                    match lift {
                        Some(x) => v.galois((x % n) as i64).map(|g| g != row.values[img]).unwrap_or(true),
                        None => true,
                    }
                });
                if let Some(row) = bad {
                    let mut f = fail("powermap-galois", format!("value at {r}-th power is not the Galois image"));
                    f.row = Some(row);
                    f.class = Some(c);
                    out.push(f);
                }
            }
        }
    }
    out
}
