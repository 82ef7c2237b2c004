use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::free::{FreeElement, FreeSlice};
use super::presentation::{slice_generators, Presentation, SLOTS};
use crate::error::{Error, Result};
use crate::ratlin::{rank, Mat, Rat, SparseVec, Subspace};
use crate::sbimod::{canonical_decorated, unflatten};
use crate::trees::{enumerate_trees, Profile};

/// Largest weight `m+n-2` any slice may be built at.
pub const WEIGHT_LIMIT: usize = 6;

pub(crate) fn check_weight(m: usize, n: usize, bound: usize) -> Result<()> {
    let w = (m + n).saturating_sub(2);
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(alloc::format!("bi-arity ({m},{n})")));
    }
    if w > bound {
        return Err(Error::WeightBoundExceeded { weight: w, bound });
    }
    Ok(())
}

/// `F(E)(m,n)` for the generators of `p`.
pub fn free_slice(p: &Presentation, m: usize, n: usize) -> Result<FreeSlice> {
    check_weight(m, n, WEIGHT_LIMIT)?;
    Ok(FreeSlice::new(p.generators(), m, n))
}

/// Spanning vectors of the ideal `(R)(m,n)`: each is an outer tree with one
/// weight-2 vertex into which a basis relation has been substituted.
pub fn ideal_spanning_rows(p: &Presentation, slice: &FreeSlice) -> Result<Vec<SparseVec>> {
    let (m, n) = slice.arity();
    let e = p.generators();
    let mut rows = Vec::new();
    if m + n < 4 {
        return Ok(rows);
    }
    for slot in SLOTS {
        let rels = p.relation_elements(slot);
        if rels.is_empty() {
            continue;
        }
        let mut shapes = e.shapes();
        shapes.push(slot);
        for outer in enumerate_trees(m, n, &Profile::Shapes(shapes)) {
            let special: Vec<usize> = (0..outer.num_vertices()).filter(|&v| outer.shape(v) == slot).collect();
            if special.len() != 1 {
                continue;
            }
            let v = special[0];
            let others: Vec<usize> = (0..outer.num_vertices()).filter(|&u| u != v).collect();
            let dims: Vec<usize> = others.iter().map(|&u| e.dim(outer.shape(u))).collect();
            let count: usize = dims.iter().product();
            for k in 0..count {
                let idx = unflatten(&dims, k);
                for r in &rels {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for ((inner, d2), c) in r.terms() {
                        let t = outer.substitute(v, inner)?;
                        let mut decos: Vec<SparseVec> = Vec::with_capacity(t.num_vertices());
                        for (pos, _) in others.iter().enumerate().filter(|(_, &u)| u < v) {
                            decos.push(vec![(idx[pos] as usize, Rat::one())]);
                        }
                        for &x in d2 {
                            decos.push(vec![(x as usize, Rat::one())]);
                        }
                        for (pos, _) in others.iter().enumerate().filter(|(_, &u)| u > v) {
                            decos.push(vec![(idx[pos] as usize, Rat::one())]);
                        }
                        let (ct, terms) = canonical_decorated(e, &t, &decos)?;
                        for (d, x) in terms {
                            let b = slice
                                .index_of(&ct, &d)
                                .ok_or_else(|| Error::MalformedTree(alloc::format!("tree {ct} not in slice")))?;
                            let s = acc.entry(b).or_insert_with(Rat::zero);
                            *s = &*s + &(&x * c);
                        }
                    }
                    let row: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    Ok(rows)
}

/// `(R)(m,n)` as a subspace of the free slice.
pub fn ideal_slice(p: &Presentation, m: usize, n: usize) -> Result<(FreeSlice, Subspace)> {
    let slice = free_slice(p, m, n)?;
    let rows = ideal_spanning_rows(p, &slice)?;
    let ideal = Subspace::span(slice.dim(), rows)?;
    Ok((slice, ideal))
}

/// The ideal at every bi-arity of weight `2..=w`.
pub fn ideal_closure(p: &Presentation, w: usize) -> Result<BTreeMap<(usize, usize), Subspace>> {
    check_weight(1, w + 1, WEIGHT_LIMIT)?;
    let mut out = BTreeMap::new();
    for (m, n) in arities(w) {
        if m + n >= 4 {
            out.insert((m, n), ideal_slice(p, m, n)?.1);
        }
    }
    Ok(out)
}

/// Bi-arities `(m,n)` with `1 <= m+n-2 <= w`, by weight then `m`.
pub fn arities(w: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 3..=w + 2 {
        for m in 1..s {
            out.push((m, s - m));
        }
    }
    out
}

/// Checks that the ideals up to weight `w` are bimodule-stable and that
/// grafting a generator onto any ideal element of weight `< w` lands in the
/// ideal one weight up.
pub fn ideal_sweep(p: &Presentation, w: usize) -> Result<bool> {
    let e = p.generators();
    let mut slices: BTreeMap<(usize, usize), (FreeSlice, Subspace)> = BTreeMap::new();
    for (m, n) in arities(w) {
        slices.insert((m, n), ideal_slice(p, m, n)?);
    }
    let gens: Vec<FreeElement> = e
        .shapes()
        .into_iter()
        .flat_map(|(a, b)| (0..e.dim((a, b)) as u32).map(move |k| FreeElement::generator(a, b, k)))
        .collect();
    for (&(m, n), (slice, ideal)) in &slices {
        if !super::presentation::is_stable(ideal, &slice_generators(e, slice)?) {
            return Ok(false);
        }
        for r in ideal.rows() {
            let x = slice.from_vec(r);
            for g in &gens {
                let (gm, gn) = g.arity();
                let mut products = Vec::new();
                for i in 1..=n {
                    for j in 1..=gm {
                        products.push(x.compose(i, j, g, e)?);
                    }
                }
                for i in 1..=gn {
                    for j in 1..=m {
                        products.push(g.compose(i, j, &x, e)?);
                    }
                }
                for y in products {
                    let (ym, yn) = y.arity();
                    if let Some((s2, i2)) = slices.get(&(ym, yn)) {
                        if !i2.contains(&s2.to_vec(&y)?) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `P(m,n) = F(E)(m,n) / (R)(m,n)` with the non-pivot free basis elements
/// as quotient basis.
#[derive(Clone, Debug)]
pub struct QuotientSlice {
    free: FreeSlice,
    ideal: Subspace,
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl QuotientSlice {
    pub fn new(free: FreeSlice, ideal: Subspace) -> Self {
        let basis = ideal.free_columns();
        let mut position = vec![None; free.dim()];
        for (k, &b) in basis.iter().enumerate() {
            position[b] = Some(k);
        }
        QuotientSlice { free, ideal, basis, position }
    }

    pub fn arity(&self) -> (usize, usize) {
        self.free.arity()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn free(&self) -> &FreeSlice {
        &self.free
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Free basis indices of the quotient basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Coordinates of the class of a free vector.
    pub fn reduce(&self, v: &[(usize, Rat)]) -> SparseVec {
        self.ideal
            .reduce(v)
            .into_iter()
            .map(|(c, x)| (self.position[c].expect("reduced vectors avoid pivots"), x))
            .collect()
    }

    pub fn reduce_element(&self, x: &FreeElement) -> Result<SparseVec> {
        Ok(self.reduce(&self.free.to_vec(x)?))
    }

    /// Representative of quotient basis element `k`.
    pub fn lift(&self, k: usize) -> FreeElement {
        self.free.basis_element(self.basis[k])
    }

    /// Matrix of the projection `F(E)(m,n) -> P(m,n)`.
    pub fn projection(&self) -> Mat {
        let cols: Vec<SparseVec> = (0..self.free.dim()).map(|b| self.reduce(&[(b, Rat::one())])).collect();
        Mat::from_rows(self.dim(), cols).expect("projection columns in range").transpose()
    }
}

pub fn quotient_slice(p: &Presentation, m: usize, n: usize) -> Result<QuotientSlice> {
    let (free, ideal) = ideal_slice(p, m, n)?;
    Ok(QuotientSlice::new(free, ideal))
}

/// `dim P(m,n)` by rank alone, without building the quotient basis.
pub fn quotient_dim(p: &Presentation, m: usize, n: usize) -> Result<usize> {
    let slice = free_slice(p, m, n)?;
    let rows = ideal_spanning_rows(p, &slice)?;
    if rows.is_empty() {
        return Ok(slice.dim());
    }
    let mat = Mat::from_rows(slice.dim(), rows)?;
    Ok(slice.dim() - rank(&mat))
}

/// Dimensions of a collection of bimodules indexed by bi-arity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DimTable {
    dims: BTreeMap<(usize, usize), usize>,
}

impl DimTable {
    pub fn new() -> Self {
        DimTable::default()
    }

    /// Table filled by `f` at every bi-arity of weight at most `w`, with
    /// `(1,1)` set to 1.
    pub fn from_fn(w: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut t = DimTable::new();
        t.insert((1, 1), 1);
        for (m, n) in arities(w) {
            t.insert((m, n), f(m, n));
        }
        t
    }

    /// Quotient dimensions of `p` up to weight `w`.
    pub fn of_presentation(p: &Presentation, w: usize) -> Result<Self> {
        check_weight(1, w + 1, WEIGHT_LIMIT)?;
        let mut t = DimTable::new();
        t.insert((1, 1), 1);
        for (m, n) in arities(w) {
            t.insert((m, n), quotient_dim(p, m, n)?);
        }
        Ok(t)
    }

    pub fn insert(&mut self, k: (usize, usize), d: usize) {
        self.dims.insert(k, d);
    }

    pub fn get(&self, k: (usize, usize)) -> Option<usize> {
        self.dims.get(&k).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.dims.iter().map(|(k, v)| (*k, *v))
    }

    /// Largest weight present.
    pub fn max_weight(&self) -> usize {
        self.dims.keys().map(|&(m, n)| m + n - 2).max().unwrap_or(0)
    }

    pub fn opposite(&self) -> Self {
        DimTable { dims: self.dims.iter().map(|(&(m, n), &d)| ((n, m), d)).collect() }
    }

    /// Arity-wise tensor product over the common bi-arities.
    pub fn tensor(&self, o: &DimTable) -> Self {
        DimTable { dims: self.dims.iter().filter_map(|(k, d)| o.get(*k).map(|e| (*k, d * e))).collect() }
    }

    /// The classical `Lie` operad viewed as a dioperad: `(n-1)!` at `(1,n)`.
    pub fn lie(w: usize) -> Self {
        DimTable::from_fn(w, |m, n| if m == 1 { (1..n).product() } else { 0 })
    }

    /// `Com` viewed as a dioperad: 1 at every `(1,n)`.
    pub fn com(w: usize) -> Self {
        DimTable::from_fn(w, |m, _| usize::from(m == 1))
    }

    /// The unit dioperad: only `(1,1)`.
    pub fn unit(w: usize) -> Self {
        DimTable::from_fn(w, |_, _| 0)
    }
}
