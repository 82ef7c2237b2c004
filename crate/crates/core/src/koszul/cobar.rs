use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::basis::DecoratedBasis;
use super::pairing::quadratic_dual;
use super::quot::Quotients;
use crate::dioperad::{check_weight, free_slice, quotient_dim, Presentation, WEIGHT_LIMIT};
use crate::error::{Error, Result};
use crate::ratlin::{homology_dims, ChainComplex, Mat, Rat, SparseVec};
use crate::sbimod::expand_tensor;
use crate::trees::{enumerate_trees, DiTree, Profile};

/// `D P(m,n)`: reduced trees decorated by the duals of `P̄`, graded so that
/// the corolla sits in degree `3-m-n` and trivalent trees in degree 0.
#[derive(Clone, Debug)]
pub struct CobarComplexSlice {
    m: usize,
    n: usize,
    /// terms by number of internal edges
    terms: Vec<DecoratedBasis>,
    complex: ChainComplex,
}

impl CobarComplexSlice {
    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &[DecoratedBasis] {
        &self.terms
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn homology(&self) -> Result<BTreeMap<i32, usize>> {
        homology_dims(&self.complex)
    }
}

/// Sum of all edge contractions applied to one basis element of the term
/// with `k+1` edges, expressed in the term with `k` edges.
fn contract_all(q: &mut Quotients, src: &DecoratedBasis, b: usize, target: &DecoratedBasis) -> Result<SparseVec> {
    let e = q.presentation().generators();
    let (k, idx) = src.locate(b);
    let t = &src.trees()[k];
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (ei, ed) in t.edges().iter().enumerate() {
        let (raw, merged) = t.contract_raw(ei)?;
        let c = raw.canonicalize_full();
        let sign = if ei % 2 == 0 { c.edge_sign } else { -c.edge_sign };
        let (v, i0) = ed.dst;
        let (w, j0) = ed.src;
        let upper = q.lift(t.shape(v), &[(idx[v] as usize, Rat::one())])?;
        let lower = q.lift(t.shape(w), &[(idx[w] as usize, Rat::one())])?;
        let x = upper.compose(i0 + 1, j0 + 1, &lower, e)?.act(&c.out_perm[merged], &c.in_perm[merged], e)?;
        let mut placed: Vec<SparseVec> = vec![Vec::new(); raw.num_vertices()];
        placed[c.vertex_map[merged]] = q.reduce(&x)?;
        let old: Vec<usize> = (0..t.num_vertices()).filter(|&u| u != w).collect();
        for (r, &u) in old.iter().enumerate() {
            if r == merged {
                continue;
            }
            let v1 = [(idx[u] as usize, Rat::one())];
            placed[c.vertex_map[r]] = q.act(t.shape(u), &v1, &c.out_perm[r], &c.in_perm[r])?;
        }
        for (d, x) in expand_tensor(&placed) {
            let col = target
                .index_of(&c.tree, &d)
                .ok_or_else(|| Error::MalformedTree(alloc::format!("contracted tree {} has no term", c.tree)))?;
            let s = acc.entry(col).or_insert_with(Rat::zero);
            *s = &*s + &(&x * &Rat::from_int(sign));
        }
    }
    Ok(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
}

pub fn cobar_slice(p: &Presentation, m: usize, n: usize) -> Result<CobarComplexSlice> {
    check_weight(m, n, WEIGHT_LIMIT)?;
    let lowest = 3 - (m + n) as i32;
    if m + n < 3 {
        let complex = ChainComplex::new(lowest, Vec::new(), Vec::new())?;
        return Ok(CobarComplexSlice { m, n, terms: Vec::new(), complex });
    }
    let top = m + n - 3;
    let mut by_edges: Vec<Vec<DiTree>> = vec![Vec::new(); top + 1];
    for t in enumerate_trees(m, n, &Profile::Reduced) {
        by_edges[t.edges().len()].push(t);
    }
    let mut q = Quotients::new(p);
    let mut terms = Vec::with_capacity(top + 1);
    for trees in by_edges {
        let mut entries = Vec::with_capacity(trees.len());
        for t in trees {
            let dims = (0..t.num_vertices()).map(|v| q.dim(t.shape(v))).collect::<Result<Vec<_>>>()?;
            entries.push((t, dims));
        }
        terms.push(DecoratedBasis::new(entries));
    }
    let mut diffs = Vec::with_capacity(top);
    for k in 0..top {
        let rows = (0..terms[k + 1].dim())
            .map(|b| contract_all(&mut q, &terms[k + 1], b, &terms[k]))
            .collect::<Result<Vec<_>>>()?;
        diffs.push(Mat::from_rows(terms[k].dim(), rows)?);
    }
    let dims = terms.iter().map(|t| t.dim()).collect();
    let complex = ChainComplex::new(lowest, dims, diffs)?;
    if !complex.is_differential() {
        return Err(Error::NotADifferential(alloc::format!("cobar complex at ({m},{n})")));
    }
    Ok(CobarComplexSlice { m, n, terms, complex })
}

/// Outcome of comparing the top cobar term and its cohomology with the
/// quadratic dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Report {
    pub top_dim: usize,
    pub dual_free_dim: usize,
    pub h0: usize,
    pub dual_dim: usize,
}

impl H0Report {
    pub fn holds(&self) -> bool {
        self.top_dim == self.dual_free_dim && self.h0 == self.dual_dim
    }
}

/// Compares `H^0 D P(m,n)` with `P^!(m,n)` and the degree-0 term with
/// `F(E^∨)(m,n)`.
pub fn h0_report(p: &Presentation, m: usize, n: usize) -> Result<H0Report> {
    if m + n < 3 {
        return Err(Error::IndexOutOfRange(alloc::format!("bi-arity ({m},{n}) has no cobar term")));
    }
    let slice = cobar_slice(p, m, n)?;
    let dual = quadratic_dual(p)?;
    let h = slice.homology()?;
    Ok(H0Report {
        top_dim: slice.complex().dim(0),
        dual_free_dim: free_slice(&dual, m, n)?.dim(),
        h0: h.get(&0).copied().unwrap_or(0),
        dual_dim: quotient_dim(&dual, m, n)?,
    })
}

pub fn h0_check(p: &Presentation, m: usize, n: usize) -> Result<bool> {
    Ok(h0_report(p, m, n)?.holds())
}
