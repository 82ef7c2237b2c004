//! Fraction-free integer elimination.
//!
//! Rows are scaled to primitive integer vectors. Every routine first runs over
//! `i64` with checked arithmetic and falls back to `BigInt` on overflow, so the
//! results never depend on which path was taken.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mat::SparseVec;
use super::Rat;

pub(crate) trait Ring: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn mag_cmp(&self, o: &Self) -> Ordering;
    fn to_big(&self) -> BigInt;
}

impl Ring for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|v| *v != i64::MIN)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|v| *v != i64::MIN)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn mag_cmp(&self, o: &Self) -> Ordering {
        self.unsigned_abs().cmp(&o.unsigned_abs())
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn mag_cmp(&self, o: &Self) -> Ordering {
        self.abs().cmp(&o.abs())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type IRow<T> = Vec<(usize, T)>;

/// Clears denominators row by row.
pub(crate) fn integer_rows(rows: &[SparseVec]) -> Vec<IRow<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut l = BigInt::one();
            for (_, x) in row {
                l = l.lcm(x.denom());
            }
            row.iter().map(|(c, x)| (*c, x.numer() * (&l / x.denom()))).collect()
        })
        .collect()
}

fn small_rows(rows: &[IRow<BigInt>]) -> Option<Vec<IRow<i64>>> {
    rows.iter()
        .map(|r| r.iter().map(|(c, x)| x.to_i64().filter(|v| *v != i64::MIN).map(|v| (*c, v))).collect())
        .collect()
}

fn primitive<T: Ring>(mut row: IRow<T>) -> IRow<T> {
    if row.is_empty() {
        return row;
    }
    let mut g = row[0].1.gcd(&row[0].1);
    for (_, x) in &row[1..] {
        g = g.gcd(x);
    }
    let one = g.div_exact(&g);
    if g != one {
        for e in row.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
    row
}

/// `a * x - b * y`, dropping zeros.
fn combine<T: Ring>(x: &[(usize, T)], a: &T, y: &[(usize, T)], b: &T) -> Option<IRow<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, x[i].1.mul(a)?));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = y[j].1.mul(b)?;
            out.push((y[j].0, v.neg()?));
            j += 1;
        } else {
            let v = x[i].1.mul(a)?.sub(&y[j].1.mul(b)?)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn entry<T: Ring>(row: &[(usize, T)], c: usize) -> Option<&T> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|k| &row[k].1)
}

/// Rank by sparse elimination with Markowitz-style pivoting: shortest row
/// first, then the entry of smallest magnitude, ties broken by index.
fn rank_sparse<T: Ring>(mut rows: Vec<IRow<T>>, ncols: usize) -> Option<usize> {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    let mut queue = BTreeSet::new();
    for (r, row) in rows.iter().enumerate() {
        if !row.is_empty() {
            queue.insert((row.len(), r));
            for (c, _) in row {
                col_rows[*c].insert(r);
            }
        }
    }
    let mut rank = 0;
    while let Some((_, r)) = queue.pop_first() {
        let prow = core::mem::take(&mut rows[r]);
        for (c, _) in &prow {
            col_rows[*c].remove(&r);
        }
        let (pc, pv) =
            prow.iter().min_by(|a, b| a.1.mag_cmp(&b.1).then(a.0.cmp(&b.0))).cloned().expect("nonempty pivot row");
        rank += 1;
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for s in targets {
            queue.remove(&(rows[s].len(), s));
            let srow = core::mem::take(&mut rows[s]);
            for (c, _) in &srow {
                col_rows[*c].remove(&s);
            }
            let sv = entry(&srow, pc).expect("column index").clone();
            let g = pv.gcd(&sv);
            let new = primitive(combine(&srow, &pv.div_exact(&g), &prow, &sv.div_exact(&g))?);
            for (c, _) in &new {
                col_rows[*c].insert(s);
            }
            if !new.is_empty() {
                queue.insert((new.len(), s));
            }
            rows[s] = new;
        }
    }
    Some(rank)
}

/// Echelon form keyed by leading column, then back substitution.
fn rref_sparse<T: Ring>(rows: Vec<IRow<T>>) -> Option<BTreeMap<usize, IRow<T>>> {
    let mut piv: BTreeMap<usize, IRow<T>> = BTreeMap::new();
    for row in rows {
        let mut row = primitive(row);
        while let Some((lead, lv)) = row.first().cloned() {
            match piv.get(&lead) {
                Some(p) => {
                    let g = p[0].1.gcd(&lv);
                    row = primitive(combine(&row, &p[0].1.div_exact(&g), p, &lv.div_exact(&g))?);
                }
                None => {
                    piv.insert(lead, row);
                    break;
                }
            }
        }
    }
    let keys: Vec<usize> = piv.keys().rev().copied().collect();
    for &c in &keys {
        let mut row = piv.remove(&c).expect("pivot row");
        loop {
            let hit = row[1..].iter().find(|e| piv.contains_key(&e.0)).map(|e| (e.0, e.1.clone()));
            let Some((d, dv)) = hit else { break };
            let p = &piv[&d];
            let g = p[0].1.gcd(&dv);
            row = primitive(combine(&row, &p[0].1.div_exact(&g), p, &dv.div_exact(&g))?);
        }
        piv.insert(c, row);
    }
    Some(piv)
}

fn to_rat_rows<T: Ring>(piv: BTreeMap<usize, IRow<T>>) -> Vec<SparseVec> {
    piv.into_values()
        .map(|row| {
            let lead = row[0].1.to_big();
            row.iter().map(|(c, x)| (*c, Rat::from_parts(x.to_big(), lead.clone()))).collect()
        })
        .collect()
}

pub(crate) fn rank_rows(rows: &[SparseVec], ncols: usize) -> usize {
    let big = integer_rows(rows);
    if let Some(small) = small_rows(&big) {
        if let Some(r) = rank_sparse(small, ncols) {
            return r;
        }
    }
    rank_sparse(big, ncols).expect("bigint arithmetic does not overflow")
}

pub(crate) fn rref_rows(rows: &[SparseVec]) -> Vec<SparseVec> {
    let big = integer_rows(rows);
    if let Some(small) = small_rows(&big) {
        if let Some(p) = rref_sparse(small) {
            return to_rat_rows(p);
        }
    }
    to_rat_rows(rref_sparse(big).expect("bigint arithmetic does not overflow"))
}

/// Dense Gauss-Jordan over `Rat`, used for narrow matrices.
pub(crate) fn rref_dense(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut d = vec![Rat::zero(); ncols];
            for (c, x) in r {
                d[*c] = x.clone();
            }
            d
        })
        .collect();
    let mut top = 0;
    for c in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(p) = (top..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(top, p);
        let inv = m[top][c].recip();
        for x in m[top].iter_mut() {
            *x *= &inv;
        }
        let prow = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != top && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        top += 1;
    }
    m.truncate(top);
    m.into_iter().map(|r| r.into_iter().enumerate().filter(|e| !e.1.is_zero()).collect()).collect()
}
