use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cobar::cobar_slice;
use super::kcomplex::koszul_slice;
use super::pairing::quadratic_dual;
use crate::dioperad::{arities, box_dim, check_weight, quotient_slice, DimTable, Presentation, WEIGHT_LIMIT};
use crate::error::Result;
use crate::ratlin::{homology_dims, rank, Mat};

/// Koszul complex data at one bi-arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulityRow {
    pub arity: (usize, usize),
    pub lowest: i32,
    pub dims: Vec<usize>,
    pub homology: BTreeMap<i32, usize>,
    /// `Some(true)` when the cobar complex has cohomology only in degree 0.
    pub cobar_concentrated: Option<bool>,
}

impl KoszulityRow {
    pub fn exact(&self) -> bool {
        self.homology.values().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if (self.lowest + k as i32) % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Both complexes agree about acyclicity where both were computed.
    pub fn consistent(&self) -> bool {
        self.cobar_concentrated.map_or(true, |c| c == self.exact())
    }
}

pub fn koszulity_row(p: &Presentation, m: usize, n: usize, with_cobar: bool) -> Result<KoszulityRow> {
    let k = koszul_slice(p, m, n)?;
    let cobar_concentrated = if with_cobar && m + n >= 3 {
        let h = homology_dims(cobar_slice(p, m, n)?.complex())?;
        Some(h.iter().all(|(&q, &d)| q == 0 || d == 0))
    } else {
        None
    };
    Ok(KoszulityRow {
        arity: (m, n),
        lowest: k.complex().lowest(),
        dims: k.complex().dims().to_vec(),
        homology: k.homology()?,
        cobar_concentrated,
    })
}

/// Koszul complex verdicts for `3 <= m+n <= w+2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulityTable {
    pub max_weight: usize,
    pub rows: Vec<KoszulityRow>,
}

impl KoszulityTable {
    pub fn is_koszul(&self) -> bool {
        self.rows.iter().all(KoszulityRow::exact)
    }

    pub fn first_nonexact(&self) -> Option<(usize, usize)> {
        self.rows.iter().find(|r| !r.exact()).map(|r| r.arity)
    }

    pub fn consistent(&self) -> bool {
        self.rows.iter().all(KoszulityRow::consistent)
    }

    pub fn get(&self, arity: (usize, usize)) -> Option<&KoszulityRow> {
        self.rows.iter().find(|r| r.arity == arity)
    }
}

pub fn koszulity_check(p: &Presentation, w: usize, with_cobar: bool) -> Result<KoszulityTable> {
    check_weight(1, w + 1, WEIGHT_LIMIT)?;
    let rows = arities(w).into_iter().map(|(m, n)| koszulity_row(p, m, n, with_cobar)).collect::<Result<Vec<_>>>()?;
    Ok(KoszulityTable { max_weight: w, rows })
}

/// Which factor sits on the root side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// `A □ B^op`: brackets below, cobrackets above.
    AB,
    /// `B^op □ A`.
    BA,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::AB => Orientation::BA,
            Orientation::BA => Orientation::AB,
        }
    }
}

impl core::fmt::Display for Orientation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Orientation::AB => "A□B^op",
            Orientation::BA => "B^op□A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributiveRow {
    pub arity: (usize, usize),
    pub dim: usize,
    /// box dimension, indexed by orientation
    pub box_dims: [usize; 2],
    /// rank in `P(m,n)` of the trees allowed by each orientation
    pub spanned: [usize; 2],
}

impl DistributiveRow {
    pub fn decomposes(&self, o: Orientation) -> bool {
        let k = o as usize;
        self.dim == self.box_dims[k] && self.spanned[k] == self.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributiveReport {
    pub verdict: Option<Orientation>,
    pub rows: Vec<DistributiveRow>,
    /// rows for the quadratic dual, in the flipped orientation
    pub dual_rows: Vec<DistributiveRow>,
}

impl DistributiveReport {
    /// The dual decomposes in the flipped orientation whenever `p` does.
    pub fn dual_holds(&self) -> Option<bool> {
        self.verdict.map(|o| self.dual_rows.iter().all(|r| r.decomposes(o.flip())))
    }
}

/// The bi-arities at which the decomposition is decided.
pub const DISTRIBUTIVE_ARITIES: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];

/// `(A, B^op)`: the `(1,n)` and `(m,1)` parts of `P` as tables up to weight `w`.
fn factor_tables(p: &Presentation, w: usize) -> Result<(DimTable, DimTable)> {
    let mut a = DimTable::from_fn(w, |_, _| 0);
    let mut b = DimTable::from_fn(w, |_, _| 0);
    for k in 2..=w + 1 {
        a.insert((1, k), crate::dioperad::quotient_dim(p, 1, k)?);
        b.insert((k, 1), crate::dioperad::quotient_dim(p, k, 1)?);
    }
    Ok((a, b))
}

fn allowed(o: Orientation, src: (usize, usize), dst: (usize, usize)) -> bool {
    let (bad_src, bad_dst) = match o {
        Orientation::AB => ((1usize, 2usize), (2usize, 1usize)),
        Orientation::BA => ((2, 1), (1, 2)),
    };
    !(src == bad_src && dst == bad_dst)
}

fn rows_of(p: &Presentation) -> Result<Vec<DistributiveRow>> {
    let (a, b) = factor_tables(p, 3)?;
    let mut rows = Vec::new();
    for (m, n) in DISTRIBUTIVE_ARITIES {
        let q = quotient_slice(p, m, n)?;
        let proj = q.projection().transpose();
        let mut spanned = [0; 2];
        for o in [Orientation::AB, Orientation::BA] {
            let mut cols = Vec::new();
            for (k, t) in q.free().trees().iter().enumerate() {
                if t.edges().iter().all(|e| allowed(o, t.shape(e.src.0), t.shape(e.dst.0))) {
                    cols.extend(q.free().tree_range(k).map(|b| proj.row(b).to_vec()));
                }
            }
            spanned[o as usize] = rank(&Mat::from_rows(q.dim(), cols)?);
        }
        rows.push(DistributiveRow {
            arity: (m, n),
            dim: q.dim(),
            box_dims: [box_dim(&a, &b, m, n)?, box_dim(&b, &a, m, n)?],
            spanned,
        });
    }
    Ok(rows)
}

/// Decides whether `P(m,n)` is the box product of its two factors at the
/// bi-arities of [`DISTRIBUTIVE_ARITIES`], and checks the dual in the
/// flipped orientation.
pub fn distributive_check(p: &Presentation) -> Result<DistributiveReport> {
    let rows = rows_of(p)?;
    let verdict = [Orientation::AB, Orientation::BA].into_iter().find(|&o| rows.iter().all(|r| r.decomposes(o)));
    let dual_rows = if verdict.is_some() { rows_of(&quadratic_dual(p)?)? } else { Vec::new() };
    Ok(DistributiveReport { verdict, rows, dual_rows })
}
