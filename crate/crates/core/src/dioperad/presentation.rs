use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::free::{FreeElement, FreeSlice};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ratlin::{Mat, SparseVec, Subspace};
use crate::sbimod::{Generators, SBimoduleSpace};

/// The three weight-2 bi-arities carrying quadratic relations.
pub const SLOTS: [(usize, usize); 3] = [(1, 3), (3, 1), (2, 2)];

/// A relation as written by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRelation {
    pub name: String,
    pub element: FreeElement,
}

/// Quadratic presentation `<E; R>` with generators at `(1,2)` and `(2,1)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    gens: Generators,
    declared: Vec<NamedRelation>,
    relations: BTreeMap<(usize, usize), Subspace>,
}

/// Matrix of `(pi, sigma)` on a slice that is closed under relabeling.
pub fn slice_action(e: &Generators, slice: &FreeSlice, pi: &Perm, sigma: &Perm) -> Result<Mat> {
    let mut cols: Vec<SparseVec> = Vec::with_capacity(slice.dim());
    for b in 0..slice.dim() {
        let x = slice.basis_element(b).act(pi, sigma, e)?;
        cols.push(slice.to_vec(&x)?);
    }
    Ok(Mat::from_rows(slice.dim(), cols)?.transpose())
}

/// Adjacent transpositions on both sides, as slice matrices.
pub fn slice_generators(e: &Generators, slice: &FreeSlice) -> Result<Vec<Mat>> {
    let (m, n) = slice.arity();
    let mut out = Vec::new();
    for a in 0..m.saturating_sub(1) {
        out.push(slice_action(e, slice, &Perm::transposition(m, a), &Perm::identity(n))?);
    }
    for a in 0..n.saturating_sub(1) {
        out.push(slice_action(e, slice, &Perm::identity(m), &Perm::transposition(n, a))?);
    }
    Ok(out)
}

/// Smallest subspace containing `s` and stable under the matrices `gens`.
pub fn stable_closure(s: &Subspace, gens: &[Mat]) -> Subspace {
    let mut cur = s.clone();
    loop {
        let mut rows: Vec<SparseVec> = cur.rows().to_vec();
        for g in gens {
            for r in cur.rows() {
                let v = g.apply(r);
                if !cur.contains(&v) {
                    rows.push(v);
                }
            }
        }
        if rows.len() == cur.dim() {
            return cur;
        }
        cur = Subspace::span(cur.ambient_dim(), rows).expect("closure rows in range");
    }
}

/// Whether `s` is stable under every matrix in `gens`.
pub fn is_stable(s: &Subspace, gens: &[Mat]) -> bool {
    gens.iter().all(|g| s.rows().iter().all(|r| s.contains(&g.apply(r))))
}

fn check_generator(s: &SBimoduleSpace, shape: (usize, usize)) -> Result<()> {
    if s.arity() != shape {
        return Err(Error::SizeMismatch(alloc::format!(
            "generator space at {:?} declared for slot {:?}",
            s.arity(),
            shape
        )));
    }
    Ok(())
}

impl Presentation {
    /// Presentation whose relation spaces are the bimodule closures of the
    /// declared relations.
    pub fn new(
        name: impl Into<String>,
        e12: SBimoduleSpace,
        e21: SBimoduleSpace,
        declared: Vec<NamedRelation>,
    ) -> Result<Self> {
        check_generator(&e12, (1, 2))?;
        check_generator(&e21, (2, 1))?;
        let mut gens = Generators::new();
        gens.insert(e12);
        gens.insert(e21);
        let mut relations = BTreeMap::new();
        for slot in SLOTS {
            let slice = FreeSlice::new(&gens, slot.0, slot.1);
            let mut rows = Vec::new();
            for r in declared.iter().filter(|r| r.element.arity() == slot) {
                rows.push(slice.to_vec(&r.element)?);
            }
            let s = Subspace::span(slice.dim(), rows)?;
            let closed = if s.dim() == 0 { s } else { stable_closure(&s, &slice_generators(&gens, &slice)?) };
            relations.insert(slot, closed);
        }
        for r in &declared {
            if !SLOTS.contains(&r.element.arity()) {
                return Err(Error::SizeMismatch(alloc::format!(
                    "relation {} has bi-arity {:?}",
                    r.name,
                    r.element.arity()
                )));
            }
        }
        Ok(Presentation { name: name.into(), gens, declared, relations })
    }

    /// Presentation with the given relation subspaces, which must be
    /// bimodule-stable. The declared relations are their basis vectors.
    pub fn from_subspaces(
        name: impl Into<String>,
        e12: SBimoduleSpace,
        e21: SBimoduleSpace,
        rels: BTreeMap<(usize, usize), Subspace>,
    ) -> Result<Self> {
        check_generator(&e12, (1, 2))?;
        check_generator(&e21, (2, 1))?;
        let mut gens = Generators::new();
        gens.insert(e12);
        gens.insert(e21);
        let mut relations = BTreeMap::new();
        let mut declared = Vec::new();
        for slot in SLOTS {
            let slice = FreeSlice::new(&gens, slot.0, slot.1);
            let s = rels.get(&slot).cloned().unwrap_or_else(|| Subspace::zero(slice.dim()));
            if s.ambient_dim() != slice.dim() {
                return Err(Error::SizeMismatch(alloc::format!("relation space at {slot:?}")));
            }
            if !is_stable(&s, &slice_generators(&gens, &slice)?) {
                return Err(Error::InvalidAction(alloc::format!("relations at {slot:?} are not bimodule-stable")));
            }
            for (k, r) in s.rows().iter().enumerate() {
                declared.push(NamedRelation {
                    name: alloc::format!("R{}{}.{}", slot.0, slot.1, k + 1),
                    element: slice.from_vec(r),
                });
            }
            relations.insert(slot, s);
        }
        Ok(Presentation { name: name.into(), gens, declared, relations })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn e12(&self) -> SBimoduleSpace {
        self.gens.iter().find(|s| s.arity() == (1, 2)).cloned().expect("E(1,2) present")
    }

    pub fn e21(&self) -> SBimoduleSpace {
        self.gens.iter().find(|s| s.arity() == (2, 1)).cloned().expect("E(2,1) present")
    }

    pub fn declared(&self) -> &[NamedRelation] {
        &self.declared
    }

    pub fn relation(&self, slot: (usize, usize)) -> &Subspace {
        &self.relations[&slot]
    }

    pub fn relations(&self) -> &BTreeMap<(usize, usize), Subspace> {
        &self.relations
    }

    pub fn slot_slice(&self, slot: (usize, usize)) -> FreeSlice {
        FreeSlice::new(&self.gens, slot.0, slot.1)
    }

    /// Relation subspace of one slot as free elements.
    pub fn relation_elements(&self, slot: (usize, usize)) -> Vec<FreeElement> {
        let slice = self.slot_slice(slot);
        self.relations[&slot].rows().iter().map(|r| slice.from_vec(r)).collect()
    }

    /// The same generators with the relations of `slot` replaced by `s`.
    pub fn with_relation(&self, slot: (usize, usize), s: Subspace) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.insert(slot, s);
        let mut p = Presentation::from_subspaces(self.name.clone(), self.e12(), self.e21(), rels)?;
        p.declared = self
            .declared
            .iter()
            .filter(|r| r.element.arity() != slot)
            .cloned()
            .chain(p.declared.iter().filter(|r| r.element.arity() == slot).cloned())
            .collect();
        Ok(p)
    }

    /// Opposite presentation: reversed trees and exchanged actions.
    pub fn opposite(&self) -> Result<Self> {
        let e_op = self.gens.map(SBimoduleSpace::opposite);
        let e12 = self.e21().opposite();
        let e21 = self.e12().opposite();
        let mut rels = BTreeMap::new();
        for slot in SLOTS {
            let target = (slot.1, slot.0);
            let slice = FreeSlice::new(&e_op, target.0, target.1);
            let mut rows = Vec::new();
            for x in self.relation_elements(slot) {
                rows.push(slice.to_vec(&x.opposite(&e_op)?)?);
            }
            rels.insert(target, Subspace::span(slice.dim(), rows)?);
        }
        let name = match self.name.strip_suffix("^op") {
            Some(base) => String::from(base),
            None => alloc::format!("{}^op", self.name),
        };
        let mut p = Presentation::from_subspaces(name, e12, e21, rels)?;
        let mut declared = Vec::new();
        for r in &self.declared {
            declared.push(NamedRelation { name: r.name.clone(), element: r.element.opposite(&e_op)? });
        }
        p.declared = declared;
        Ok(p)
    }
}
