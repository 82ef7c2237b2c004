use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Rat;
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Rat)>;

/// Sorts by index, merges repeated indices and drops zeros.
pub fn normalize(mut v: Vec<(usize, Rat)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// `a + c * b`.
pub fn axpy(a: &[(usize, Rat)], c: &Rat, b: &[(usize, Rat)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let x = &a[i].1 + &(c * &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn dot(a: &[(usize, Rat)], b: &[(usize, Rat)]) -> Rat {
    let (mut i, mut j) = (0, 0);
    let mut s = Rat::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

pub fn lookup(v: &[(usize, Rat)], i: usize) -> Option<&Rat> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// Sparse rational matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Mat { rows: n, cols: n, data: (0..n).map(|i| vec![(i, Rat::one())]).collect() }
    }

    /// Builds a matrix from rows of `(col, value)` pairs in any order.
    pub fn from_rows(cols: usize, rows: Vec<Vec<(usize, Rat)>>) -> Result<Self> {
        let data: Vec<SparseVec> = rows.into_iter().map(normalize).collect();
        for r in &data {
            if let Some(&(c, _)) = r.last() {
                if c >= cols {
                    return Err(Error::IndexOutOfRange(alloc::format!("column {c} >= {cols}")));
                }
            }
        }
        Ok(Mat { rows: data.len(), cols, data })
    }

    pub fn from_dense(cols: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::SizeMismatch(alloc::format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.push(r.iter().enumerate().filter(|e| !e.1.is_zero()).map(|(i, x)| (i, x.clone())).collect());
        }
        Ok(Mat { rows: rows.len(), cols, data })
    }

    /// Convenience constructor from integer rows; all rows must have length `cols`.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect();
        Mat::from_dense(cols, &dense).expect("row length")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Rat)] {
        &self.data[r]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        lookup(&self.data[r], c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => row.insert(k, (c, v)),
        }
    }

    pub fn push_row(&mut self, row: Vec<(usize, Rat)>) {
        let row = normalize(row);
        if let Some(&(c, _)) = row.last() {
            assert!(c < self.cols, "index out of range");
        }
        self.data.push(row);
        self.rows += 1;
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Mat {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix product `self * o`.
    pub fn mul(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.rows {
            return Err(Error::SizeMismatch(alloc::format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Vec::new();
                for (k, x) in row {
                    for (c, y) in &o.data[*k] {
                        acc.push((*c, x * y));
                    }
                }
                normalize(acc)
            })
            .collect();
        Ok(Mat { rows: self.rows, cols: o.cols, data })
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[(usize, Rat)]) -> SparseVec {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let x = dot(row, v);
            if !x.is_zero() {
                out.push((r, x));
            }
        }
        out
    }

    /// `v^T * self` for a row vector `v`.
    pub fn apply_left(&self, v: &[(usize, Rat)]) -> SparseVec {
        let mut acc = Vec::new();
        for (r, x) in v {
            for (c, y) in &self.data[*r] {
                acc.push((*c, x * y));
            }
        }
        normalize(acc)
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        if c.is_zero() {
            return Mat::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(i, x)| (*i, x * c)).collect()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, o: &Mat) -> Result<Mat> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::SizeMismatch(alloc::format!("{}x{} plus {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let one = Rat::one();
        let data = self.data.iter().zip(&o.data).map(|(a, b)| axpy(a, &one, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        self.data
            .iter()
            .map(|row| {
                let mut d = vec![Rat::zero(); self.cols];
                for (c, x) in row {
                    d[*c] = x.clone();
                }
                d
            })
            .collect()
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for ra in &self.data {
            for rb in &o.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, x) in ra {
                    for (cb, y) in rb {
                        row.push((ca * o.cols + cb, x * y));
                    }
                }
                data.push(row);
            }
        }
        Mat { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for row in self.to_dense() {
            write!(f, "  [")?;
            for (k, x) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
