use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{rank, Mat};
use crate::error::{Error, Result};

/// Cochain complex `C^lo -> C^{lo+1} -> ... -> C^hi` over the rationals.
///
/// `diffs[k]` maps degree `lo + k` to degree `lo + k + 1` and has shape
/// `dims[k+1] x dims[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    lowest: i32,
    dims: Vec<usize>,
    diffs: Vec<Mat>,
}

impl ChainComplex {
    pub fn new(lowest: i32, dims: Vec<usize>, diffs: Vec<Mat>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::SizeMismatch(alloc::format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.ncols() != dims[k] || d.nrows() != dims[k + 1] {
                return Err(Error::SizeMismatch(alloc::format!(
                    "differential from degree {} is {}x{}, expected {}x{}",
                    lowest + k as i32,
                    d.nrows(),
                    d.ncols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        Ok(ChainComplex { lowest, dims, diffs })
    }

    pub fn lowest(&self) -> i32 {
        self.lowest
    }

    pub fn highest(&self) -> i32 {
        self.lowest + self.dims.len() as i32 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, q: i32) -> usize {
        self.index(q).map_or(0, |k| self.dims[k])
    }

    /// Differential leaving degree `q`.
    pub fn differential(&self, q: i32) -> Option<&Mat> {
        self.index(q).and_then(|k| self.diffs.get(k))
    }

    fn index(&self, q: i32) -> Option<usize> {
        let k = q - self.lowest;
        (k >= 0 && (k as usize) < self.dims.len()).then_some(k as usize)
    }

    /// True when consecutive differentials compose to zero.
    pub fn is_differential(&self) -> bool {
        self.diffs.windows(2).all(|w| w[1].mul(&w[0]).map(|p| p.is_zero()).unwrap_or(false))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if (self.lowest + k as i32).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Homology dimension in every degree of the complex.
pub fn homology_dims(c: &ChainComplex) -> Result<BTreeMap<i32, usize>> {
    if !c.is_differential() {
        return Err(Error::SizeMismatch("consecutive differentials do not compose to zero".into()));
    }
    let ranks: Vec<usize> = c.diffs.iter().map(rank).collect();
    let mut out = BTreeMap::new();
    for (k, &d) in c.dims.iter().enumerate() {
        let out_rank = ranks.get(k).copied().unwrap_or(0);
        let in_rank = if k > 0 { ranks[k - 1] } else { 0 };
        out.insert(c.lowest + k as i32, d - out_rank - in_rank);
    }
    Ok(out)
}

/// Euler characteristic of a homology table.
pub fn homology_euler(h: &BTreeMap<i32, usize>) -> i64 {
    h.iter().map(|(q, &d)| if q.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}
