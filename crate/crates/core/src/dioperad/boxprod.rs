use alloc::vec;
use alloc::vec::Vec;

use super::quotient::DimTable;
use crate::error::{Error, Result};
use crate::trees::{enumerate_trees, DiTree, Profile};

/// One cell of `(P1 □ P2)(m,n)`: a reduced tree whose vertices are colored 1
/// (root side, decorated by `P1`) or 2 (leaf side, decorated by `P2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCell {
    pub tree: DiTree,
    pub colors: Vec<u8>,
    pub dim: usize,
}

/// `(P1 □ P2)(m,n)` in the collapsed model: identity vertices are left
/// implicit, so every edge runs from a color-2 vertex into a color-1 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSlice {
    m: usize,
    n: usize,
    cells: Vec<BoxCell>,
}

fn lookup(t: &DimTable, shape: (usize, usize)) -> Result<usize> {
    t.get(shape).ok_or(Error::WeightBoundExceeded { weight: shape.0 + shape.1 - 2, bound: t.max_weight() })
}

impl BoxSlice {
    pub fn new(p1: &DimTable, p2: &DimTable, m: usize, n: usize) -> Result<Self> {
        let mut cells = Vec::new();
        if (m, n) == (1, 1) {
            cells.push(BoxCell { tree: DiTree::unit(), colors: Vec::new(), dim: 1 });
            return Ok(BoxSlice { m, n, cells });
        }
        lookup(p1, (m, n))?;
        lookup(p2, (m, n))?;
        for t in enumerate_trees(m, n, &Profile::Reduced) {
            if t.num_vertices() == 1 {
                for (c, table) in [(1u8, p1), (2u8, p2)] {
                    let d = lookup(table, (m, n))?;
                    if d > 0 {
                        cells.push(BoxCell { tree: t.clone(), colors: vec![c], dim: d });
                    }
                }
                continue;
            }
            let nv = t.num_vertices();
            let mut colors = vec![0u8; nv];
            let mut ok = true;
            for e in t.edges() {
                for (v, c) in [(e.src.0, 2u8), (e.dst.0, 1u8)] {
                    if colors[v] != 0 && colors[v] != c {
                        ok = false;
                    }
                    colors[v] = c;
                }
            }
            if !ok {
                continue;
            }
            let mut d = 1;
            for (v, &c) in colors.iter().enumerate() {
                d *= lookup(if c == 1 { p1 } else { p2 }, t.shape(v))?;
            }
            if d > 0 {
                cells.push(BoxCell { tree: t, colors, dim: d });
            }
        }
        Ok(BoxSlice { m, n, cells })
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn cells(&self) -> &[BoxCell] {
        &self.cells
    }

    pub fn dim(&self) -> usize {
        self.cells.iter().map(|c| c.dim).sum()
    }
}

/// `dim (P1 □ P2)(m,n)`.
pub fn box_dim(p1: &DimTable, p2: &DimTable, m: usize, n: usize) -> Result<usize> {
    Ok(BoxSlice::new(p1, p2, m, n)?.dim())
}

/// Box dimensions at every bi-arity of weight at most `w`.
pub fn box_table(p1: &DimTable, p2: &DimTable, w: usize) -> Result<DimTable> {
    let mut t = DimTable::new();
    t.insert((1, 1), 1);
    for (m, n) in super::quotient::arities(w) {
        t.insert((m, n), box_dim(p1, p2, m, n)?);
    }
    Ok(t)
}
