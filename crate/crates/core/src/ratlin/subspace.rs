use alloc::vec::Vec;

use super::elim;
use super::mat::{axpy, lookup, normalize, Mat, SparseVec};
use super::Rat;
use crate::error::{Error, Result};

const DENSE_LIMIT: usize = 64;

/// Reduced row-echelon basis of the row space of `rows`.
pub fn rref_rows(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    if ncols < DENSE_LIMIT {
        elim::rref_dense(rows, ncols)
    } else {
        elim::rref_rows(rows)
    }
}

/// Row rank over the rationals.
pub fn rank(m: &Mat) -> usize {
    if m.ncols() < DENSE_LIMIT && m.nrows() < 4 * DENSE_LIMIT {
        elim::rref_dense(m.rows(), m.ncols()).len()
    } else if m.nrows() > m.ncols() {
        let t = m.transpose();
        elim::rank_rows(t.rows(), t.ncols())
    } else {
        elim::rank_rows(m.rows(), m.ncols())
    }
}

/// Subspace of `Q^ambient` stored as its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_mat(&Mat::identity(ambient))
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<(usize, Rat)>>) -> Result<Self> {
        let rows: Vec<SparseVec> = vectors.into_iter().map(normalize).collect();
        for r in &rows {
            if let Some(&(c, _)) = r.last() {
                if c >= ambient {
                    return Err(Error::IndexOutOfRange(alloc::format!("coordinate {c} >= {ambient}")));
                }
            }
        }
        Ok(Self::from_normalized(ambient, &rows))
    }

    /// Row space of `m`.
    pub fn from_mat(m: &Mat) -> Self {
        Self::from_normalized(m.ncols(), m.rows())
    }

    fn from_normalized(ambient: usize, rows: &[SparseVec]) -> Self {
        let rows = rref_rows(rows, ambient);
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Mat {
        Mat::from_rows(self.ambient, self.rows.clone()).expect("rows in range")
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut k = 0;
        for c in 0..self.ambient {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// `v` minus its component along the basis, read off at the pivots.
    /// The result vanishes at every pivot column.
    pub fn reduce(&self, v: &[(usize, Rat)]) -> SparseVec {
        let mut out: SparseVec = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = lookup(&out, p).cloned() {
                out = axpy(&out, &(-c), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[(usize, Rat)]) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().enumerate().filter_map(|(k, &p)| lookup(v, p).map(|x| (k, x.clone()))).collect())
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.ambient == o.ambient && self.rows.iter().all(|r| o.contains(r))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        if self.ambient != o.ambient {
            return Err(Error::SizeMismatch(alloc::format!("ambient {} vs {}", self.ambient, o.ambient)));
        }
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().cloned());
        Ok(Self::from_normalized(self.ambient, &rows))
    }
}

/// Null space of `m` (vectors `v` with `m v = 0`).
pub fn kernel(m: &Mat) -> Subspace {
    let r = Subspace::from_mat(m);
    let mut vecs = Vec::new();
    for f in r.free_columns() {
        let mut v = alloc::vec![(f, Rat::one())];
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if let Some(x) = lookup(row, f) {
                v.push((p, -x));
            }
        }
        vecs.push(normalize(v));
    }
    Subspace::from_normalized(m.ncols(), &vecs)
}

/// `{ w : <v, w> = v^T P w = 0 for all v in s }`.
pub fn orth_complement(s: &Subspace, pairing: &Mat) -> Result<Subspace> {
    let n = s.ambient_dim();
    if pairing.nrows() != n || pairing.ncols() != n {
        return Err(Error::SizeMismatch(alloc::format!(
            "pairing {}x{} for ambient {n}",
            pairing.nrows(),
            pairing.ncols()
        )));
    }
    if rank(pairing) != n {
        return Err(Error::SingularPairing);
    }
    let sp = s.basis().mul(pairing)?;
    Ok(kernel(&sp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(x: i64) -> Rat {
        Rat::from_int(x)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Mat::zeros(3, 3)), 0);
        assert_eq!(rank(&Mat::identity(3)), 3);
        assert_eq!(rank(&Mat::from_i64(3, &[&[1, 2, 3], &[2, 4, 6]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Mat::identity(2)).dim(), 0);
        let k = kernel(&Mat::from_i64(2, &[&[1, 1]]));
        assert_eq!(k.rows(), &[vec![(0, r(1)), (1, r(-1))]]);
        assert_eq!(kernel(&Mat::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn orth_examples() {
        let id = Mat::identity(2);
        assert_eq!(orth_complement(&Subspace::zero(2), &id).unwrap(), Subspace::full(2));
        assert_eq!(orth_complement(&Subspace::full(2), &id).unwrap(), Subspace::zero(2));
        let s = Subspace::span(2, vec![vec![(0, r(1)), (1, r(1))]]).unwrap();
        let o = orth_complement(&s, &id).unwrap();
        assert_eq!(o, Subspace::span(2, vec![vec![(0, r(1)), (1, r(-1))]]).unwrap());
        assert_eq!(orth_complement(&s, &Mat::zeros(2, 2)), Err(Error::SingularPairing));
    }

    #[test]
    fn reduce_and_coordinates() {
        let s = Subspace::span(3, vec![vec![(0, r(2)), (1, r(2))], vec![(1, r(1)), (2, r(1))]]).unwrap();
        let v = vec![(0, r(1)), (1, r(2)), (2, r(1))];
        assert!(s.contains(&v));
        assert_eq!(s.coordinates(&v).unwrap(), vec![(0, r(1)), (1, r(2))]);
        let w = vec![(2, r(1))];
        assert!(!s.contains(&w));
        assert_eq!(s.free_columns(), vec![2]);
    }
}
