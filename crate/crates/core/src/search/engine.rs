//! Integer enumeration for Σ m_i χ_i(1) = target and Σ m_i χ_i(c) = 0 on a class set.
//!
//! Every constraint is rewritten as a row of rational coordinates (one per power-basis
//! coordinate of the class values), brought to reduced row echelon form and scaled to
//! integers. The DFS then only branches on the free variables; pivot variables are
//! solved exactly at the leaves. Each row, original or reduced, becomes an interval
//! constraint Σ a_f x_f ∈ [L, U] over the free variables, and at every node the range of
//! the next variable is cut down by every row using suffix bounds of the rest.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::ctable::CharacterTable;
use crate::cyclo::euler_phi;
use crate::error::{Error, Result};

/// Stop pushing work into parallel tasks once this many prefixes exist.
const TARGET_TASKS: usize = 256;
const MAX_SPLIT_DEPTH: usize = 6;

/// A constraint Σ a_f x_f ∈ [lo, hi] over the free variables (in DFS order).
#[derive(Clone, Debug)]
struct Row {
    a: Vec<i128>,
    lo: i128,
    hi: i128,
    /// Suffix bounds: min/max of Σ_{t ≥ j} a_t x_t over the box.
    suf_lo: Vec<i128>,
    suf_hi: Vec<i128>,
}

/// c · x_var + Σ a_f x_f = b, the row with index `row` in `rows`.
#[derive(Clone, Debug)]
struct Pivot {
    var: usize,
    c: i128,
    b: i128,
    row: usize,
}

/// Reduced system ready for enumeration.
#[derive(Debug)]
pub(crate) struct System {
    /// Number of table rows.
    width: usize,
    /// Table row of each variable.
    vars: Vec<usize>,
    ub: Vec<i64>,
    free: Vec<usize>,
    pivots: Vec<Pivot>,
    rows: Vec<Row>,
    consistent: bool,
}

/// Result of one enumeration run.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub solutions: Vec<Vec<u64>>,
    pub nodes: u64,
    pub truncated: bool,
}

fn rat_row_to_ints(row: &[BigRational]) -> Vec<BigInt> {
    let den = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| (r * BigRational::from_integer(den.clone())).to_integer()).collect()
}

/// Divide by the content and fix the sign of the first nonzero entry.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x /= &g;
        if neg {
            *x = -&*x;
        }
    }
    v
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .filter(|v| v.abs() < (1i128 << 100))
        .ok_or_else(|| Error::Search("constraint coefficients exceed the supported range".into()))
}

/// In-place reduced row echelon form of `m` (each row has `ncols` coefficient columns
/// followed by the right-hand side); returns the pivot column of each nonzero row.
fn rref(m: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

impl System {
    /// Build the system for the given target degree, constrained classes and a cap on
    /// the multiplicity of the trivial character (row 0).
    pub(crate) fn build(table: &CharacterTable, target: &BigInt, classes: &[usize], trivial_cap: u64) -> Result<Self> {
        let width = table.num_irreducibles();
        let degrees = table.degrees();
        let mut vars = Vec::new();
        let mut ub = Vec::new();
        for (i, d) in degrees.iter().enumerate() {
            let d = BigInt::from(d.clone());
            let mut u = (target / &d).to_i64().ok_or_else(|| Error::Search("target degree too large".into()))?;
            if i == 0 {
                u = u.min(trivial_cap as i64);
            }
            if u > 0 {
                vars.push(i);
                ub.push(u);
            }
        }
        let nv = vars.len();

        // original rows over all variables, as primitive integer vectors with rhs
        let mut orig: Vec<Vec<BigInt>> = Vec::new();
        let mut deg_row: Vec<BigInt> = vars.iter().map(|&i| BigInt::from(degrees[i].clone())).collect();
        deg_row.push(target.clone());
        orig.push(deg_row);
        for &c in classes {
            let m = vars.iter().fold(1u32, |acc, &i| acc.lcm(&table.value(i, c).conductor()));
            let dim = euler_phi(m) as usize;
            let coords: Vec<Vec<BigRational>> = vars.iter().map(|&i| table.value(i, c).coords_in(m)).collect();
            for j in 0..dim {
                let mut row: Vec<BigRational> = coords.iter().map(|v| v[j].clone()).collect();
                if row.iter().all(|x| x.is_zero()) {
                    continue;
                }
                row.push(BigRational::zero());
                orig.push(primitive(rat_row_to_ints(&row)));
            }
        }
        orig.sort();
        orig.dedup();

        // pivot on low-degree columns so that branching happens on high-degree ones
        let mut col_order: Vec<usize> = (0..nv).collect();
        col_order.sort_by(|&a, &b| degrees[vars[a]].cmp(&degrees[vars[b]]).then(a.cmp(&b)));
        let mut m: Vec<Vec<BigRational>> = orig
            .iter()
            .map(|r| {
                let mut row: Vec<BigRational> =
                    col_order.iter().map(|&v| BigRational::from_integer(r[v].clone())).collect();
                row.push(BigRational::from_integer(r[nv].clone()));
                row
            })
            .collect();
        let pivot_cols = rref(&mut m, nv);
        let rank = pivot_cols.len();
        let consistent = m[rank..].iter().all(|r| r[nv].is_zero());
        let pivot_vars: Vec<usize> = pivot_cols.iter().map(|&c| col_order[c]).collect();

        // free variables, highest degree first
        let mut free: Vec<usize> = (0..nv).filter(|v| !pivot_vars.contains(v)).collect();
        free.sort_by(|&a, &b| degrees[vars[b]].cmp(&degrees[vars[a]]).then(a.cmp(&b)));
        let free_pos = |v: usize| free.iter().position(|&f| f == v);

        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for (k, &pv) in pivot_vars.iter().enumerate() {
            // row k of m is in col_order coordinates
            let mut ints = rat_row_to_ints(&m[k]);
            let pcol = pivot_cols[k];
            if ints[pcol].is_negative() {
                ints.iter_mut().for_each(|x| *x = -&*x);
            }
            let c = to_i128(&ints[pcol])?;
            let b = to_i128(&ints[nv])?;
            let mut a = vec![0i128; free.len()];
            for (col, x) in ints[..nv].iter().enumerate() {
                if let Some(pos) = free_pos(col_order[col]) {
                    a[pos] = to_i128(x)?;
                }
            }
            // Σ a x_f = b − c x_p ∈ [b − c·ub_p, b]
            let lo = b - c * ub[pv] as i128;
            pivots.push(Pivot { var: pv, c, b, row: rows.len() });
            rows.push(Row { a, lo, hi: b, suf_lo: Vec::new(), suf_hi: Vec::new() });
        }
        for r in &orig {
            let mut a = vec![0i128; free.len()];
            let (mut plo, mut phi) = (0i128, 0i128);
            for v in 0..nv {
                let x = to_i128(&r[v])?;
                match free_pos(v) {
                    Some(pos) => a[pos] = x,
                    None => {
                        let span = x * ub[v] as i128;
                        plo += span.min(0);
                        phi += span.max(0);
                    }
                }
            }
            let t = to_i128(&r[nv])?;
            rows.push(Row { a, lo: t - phi, hi: t - plo, suf_lo: Vec::new(), suf_hi: Vec::new() });
        }
        for row in rows.iter_mut() {
            let n = free.len();
            row.suf_lo = vec![0; n + 1];
            row.suf_hi = vec![0; n + 1];
            for j in (0..n).rev() {
                let span = row.a[j] * ub[free[j]] as i128;
                row.suf_lo[j] = row.suf_lo[j + 1] + span.min(0);
                row.suf_hi[j] = row.suf_hi[j + 1] + span.max(0);
            }
        }
        Ok(System { width, vars, ub, free, pivots, rows, consistent })
    }

    /// Allowed range of the free variable at `depth` given partial row sums.
    fn range(&self, depth: usize, sums: &[i128]) -> Option<(i64, i64)> {
        let u = self.ub[self.free[depth]] as i128;
        let (mut lo, mut hi) = (0i128, u);
        for (row, &s) in self.rows.iter().zip(sums) {
            let a = row.a[depth];
            // a·x ∈ [L − S − hi', U − S − lo']
            let l = row.lo - s - row.suf_hi[depth + 1];
            let h = row.hi - s - row.suf_lo[depth + 1];
            if a == 0 {
                if l > 0 || h < 0 {
                    return None;
                }
                continue;
            }
            let (xl, xh) = if a > 0 {
                (Integer::div_ceil(&l, &a), Integer::div_floor(&h, &a))
            } else {
                (Integer::div_ceil(&h, &a), Integer::div_floor(&l, &a))
            };
            lo = lo.max(xl);
            hi = hi.min(xh);
            if lo > hi {
                return None;
            }
        }
        Some((lo as i64, hi as i64))
    }

    fn leaf(&self, assign: &[i64], sums: &[i128]) -> Option<Vec<u64>> {
        let mut out = vec![0u64; self.width];
        for (j, &x) in assign.iter().enumerate() {
            out[self.vars[self.free[j]]] = x as u64;
        }
        for p in &self.pivots {
            let num = p.b - sums[p.row];
            if num % p.c != 0 {
                return None;
            }
            let x = num / p.c;
            if x < 0 || x > self.ub[p.var] as i128 {
                return None;
            }
            out[self.vars[p.var]] = x as u64;
        }
        // rows not tied to a pivot are checked by the range pass at depth = len; recheck here
        for (row, &s) in self.rows.iter().zip(sums) {
            if s < row.lo || s > row.hi {
                return None;
            }
        }
        Some(out)
    }

    fn dfs(&self, depth: usize, assign: &mut Vec<i64>, sums: &mut Vec<i128>, sink: &mut Sink) {
        sink.nodes += 1;
        if sink.full() {
            return;
        }
        if depth == self.free.len() {
            if let Some(sol) = self.leaf(assign, sums) {
                sink.solutions.push(sol);
            }
            return;
        }
        if depth == sink.prefix_depth {
            sink.prefixes.push((assign.clone(), sums.clone()));
            return;
        }
        let Some((lo, hi)) = self.range(depth, sums) else {
            return;
        };
        for x in lo..=hi {
            for (row, s) in self.rows.iter().zip(sums.iter_mut()) {
                *s += row.a[depth] * x as i128;
            }
            assign.push(x);
            self.dfs(depth + 1, assign, sums, sink);
            assign.pop();
            for (row, s) in self.rows.iter().zip(sums.iter_mut()) {
                *s -= row.a[depth] * x as i128;
            }
            if sink.full() {
                return;
            }
        }
    }

    /// Enumerate all solutions; at most `cap + 1` are kept per task so truncation is
    /// decided the same way on any number of threads.
    pub(crate) fn enumerate(&self, cap: Option<usize>) -> Outcome {
        if !self.consistent {
            return Outcome::default();
        }
        let limit = cap.map(|c| c + 1);
        let n = self.free.len();
        // pick the shallowest split depth giving enough tasks
        let mut depth = 0;
        let mut head = Sink::new(0, None);
        head.nodes = 1;
        head.prefixes.push((Vec::new(), vec![0; self.rows.len()]));
        while depth < n.min(MAX_SPLIT_DEPTH) && head.prefixes.len() < TARGET_TASKS {
            let mut next = Sink::new(depth + 1, None);
            next.nodes = head.nodes;
            for (mut a, mut s) in std::mem::take(&mut head.prefixes) {
                // the prefix node itself was counted when it was collected
                next.nodes -= 1;
                self.dfs(depth, &mut a, &mut s, &mut next);
            }
            // solutions found above the split depth (n small) stay in order
            next.solutions.splice(0..0, std::mem::take(&mut head.solutions));
            head = next;
            depth += 1;
        }
        let tasks: Vec<Sink> = head
            .prefixes
            .par_iter()
            .map(|(a, s)| {
                let mut sink = Sink::new(usize::MAX, limit);
                let (mut a, mut s) = (a.clone(), s.clone());
                self.dfs(depth, &mut a, &mut s, &mut sink);
                // the prefix node was already counted
                sink.nodes -= 1;
                sink
            })
            .collect();
        let mut out = Outcome { solutions: head.solutions, nodes: head.nodes, truncated: false };
        for t in tasks {
            out.nodes += t.nodes;
            out.solutions.extend(t.solutions);
        }
        out.solutions.sort();
        out.solutions.dedup();
        if let Some(c) = cap {
            if out.solutions.len() > c {
                out.solutions.truncate(c);
                out.truncated = true;
            }
        }
        out
    }
}

struct Sink {
    prefix_depth: usize,
    limit: Option<usize>,
    nodes: u64,
    solutions: Vec<Vec<u64>>,
    prefixes: Vec<(Vec<i64>, Vec<i128>)>,
}

impl Sink {
    fn new(prefix_depth: usize, limit: Option<usize>) -> Self {
        Sink { prefix_depth, limit, nodes: 0, solutions: Vec::new(), prefixes: Vec::new() }
    }

    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.solutions.len() >= l)
    }
}
