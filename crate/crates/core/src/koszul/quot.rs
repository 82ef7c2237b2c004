use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::dioperad::{quotient_slice, FreeElement, Presentation, QuotientSlice};
use crate::error::Result;
use crate::perm::Perm;
use crate::ratlin::{Rat, SparseVec};

/// Quotient slices of one presentation, built on first use.
pub(crate) struct Quotients<'a> {
    p: &'a Presentation,
    slices: BTreeMap<(usize, usize), QuotientSlice>,
}

impl<'a> Quotients<'a> {
    pub fn new(p: &'a Presentation) -> Self {
        Quotients { p, slices: BTreeMap::new() }
    }

    pub fn presentation(&self) -> &'a Presentation {
        self.p
    }

    pub fn ensure(&mut self, shape: (usize, usize)) -> Result<()> {
        if !self.slices.contains_key(&shape) {
            let q = quotient_slice(self.p, shape.0, shape.1)?;
            self.slices.insert(shape, q);
        }
        Ok(())
    }

    /// Slice at `shape`; [`Quotients::ensure`] must have been called.
    pub fn get(&self, shape: (usize, usize)) -> &QuotientSlice {
        &self.slices[&shape]
    }

    pub fn dim(&mut self, shape: (usize, usize)) -> Result<usize> {
        self.ensure(shape)?;
        Ok(self.get(shape).dim())
    }

    pub fn lift(&mut self, shape: (usize, usize), v: &[(usize, Rat)]) -> Result<FreeElement> {
        self.ensure(shape)?;
        let q = self.get(shape);
        let free: Vec<(usize, Rat)> = v.iter().map(|(k, c)| (q.basis()[*k], c.clone())).collect();
        Ok(q.free().from_vec(&free))
    }

    pub fn reduce(&mut self, x: &FreeElement) -> Result<SparseVec> {
        let shape = x.arity();
        self.ensure(shape)?;
        self.get(shape).reduce_element(x)
    }

    /// `(pi, sigma)` applied to a quotient vector.
    pub fn act(&mut self, shape: (usize, usize), v: &[(usize, Rat)], pi: &Perm, sigma: &Perm) -> Result<SparseVec> {
        if pi.is_identity() && sigma.is_identity() {
            return Ok(v.to_vec());
        }
        let x = self.lift(shape, v)?.act(pi, sigma, self.p.generators())?;
        self.reduce(&x)
    }
}
