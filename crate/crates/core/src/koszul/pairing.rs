use alloc::collections::BTreeMap;
use alloc::vec;

use crate::dioperad::{FreeSlice, Presentation, SLOTS};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ratlin::{orth_complement, Mat, Rat, Subspace};
use crate::sbimod::{Generators, SBimoduleSpace, TwistKind};
use crate::trees::{DiTree, Slot};

/// Sign of the basis tree `t` (one internal edge) under the identification
/// `F(E^∨)(i,j) = F(E)(i,j)^∨`.
pub fn pairing_sign(t: &DiTree) -> Result<i64> {
    if t.num_vertices() != 2 {
        return Err(Error::MalformedTree(alloc::format!("pairing sign of {t} needs two vertices")));
    }
    let ed = t.edges()[0];
    let (f, i0) = ed.dst;
    let (g, j0) = ed.src;
    let (m1, n1) = t.shape(f);
    let (m2, n2) = t.shape(g);
    let raw = DiTree::graft(&DiTree::corolla(m1, n1), i0 + 1, j0 + 1, &DiTree::corolla(m2, n2))?;
    let (m, n) = t.arity();
    let mut pi = vec![usize::MAX; m];
    let mut sigma = vec![usize::MAX; n];
    for (rv, tv) in [(0, f), (1, g)] {
        let (a, b) = (&raw.vertices()[rv], &t.vertices()[tv]);
        for (x, y) in a.outs.iter().zip(&b.outs) {
            if let (Slot::Root(p), Slot::Root(q)) = (x, y) {
                pi[*p as usize - 1] = *q as usize - 1;
            }
        }
        for (x, y) in a.ins.iter().zip(&b.ins) {
            if let (Slot::Leaf(p), Slot::Leaf(q)) = (x, y) {
                sigma[*p as usize - 1] = *q as usize - 1;
            }
        }
    }
    let pi = Perm::from_images(pi)?;
    let sigma = Perm::from_images(sigma)?;
    let (i, j) = (i0 + 1, j0 + 1);
    let s = (i - 1) * (n2 + 1) + (j - 1) * (m1 + 1) + (m2 - 1) * (n1 - 1);
    Ok(pi.sign() * sigma.sign() * if s % 2 == 0 { 1 } else { -1 })
}

/// Diagonal pairing of `F(E)(i,j)` with `F(E^∨)(i,j)` at the three
/// quadratic slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    mats: BTreeMap<(usize, usize), Mat>,
}

impl PairingTable {
    pub fn new(e: &Generators) -> Result<Self> {
        let mut mats = BTreeMap::new();
        for slot in SLOTS {
            let slice = FreeSlice::new(e, slot.0, slot.1);
            let mut m = Mat::zeros(slice.dim(), slice.dim());
            for (k, t) in slice.trees().iter().enumerate() {
                let s = Rat::from_int(pairing_sign(t)?);
                for b in slice.tree_range(k) {
                    m.set(b, b, s.clone());
                }
            }
            mats.insert(slot, m);
        }
        Ok(PairingTable { mats })
    }

    pub fn get(&self, slot: (usize, usize)) -> &Mat {
        &self.mats[&slot]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Mat)> {
        self.mats.iter()
    }
}

/// `E^∨` for both generator spaces.
pub fn dual_generators(p: &Presentation) -> (SBimoduleSpace, SBimoduleSpace) {
    (p.e12().twist(TwistKind::Vee), p.e21().twist(TwistKind::Vee))
}

/// The quadratic dual `<E^∨; R^⊥>`.
pub fn quadratic_dual(p: &Presentation) -> Result<Presentation> {
    let table = PairingTable::new(p.generators())?;
    let (e12, e21) = dual_generators(p);
    let mut rels = BTreeMap::new();
    for slot in SLOTS {
        rels.insert(slot, orth_complement(p.relation(slot), table.get(slot))?);
    }
    let name = match p.name().strip_suffix('!') {
        Some(base) => alloc::string::String::from(base),
        None => alloc::format!("{}!", p.name()),
    };
    Presentation::from_subspaces(name, e12, e21, rels)
}

/// Whether the relation subspaces of `a` and `b` coincide slot by slot
/// (same generator dimensions, same canonical bases).
pub fn same_relations(a: &Presentation, b: &Presentation) -> bool {
    SLOTS.iter().all(|&s| a.relation(s) == b.relation(s))
        && a.generators().shapes().iter().all(|&sh| a.generators().get(sh) == b.generators().get(sh))
}

/// Checks `<g x, g ξ> = sgn(g) <x, ξ>` for the adjacent transpositions.
pub fn pairing_is_equivariant(p: &Presentation) -> Result<bool> {
    let e = p.generators();
    let (d12, d21) = dual_generators(p);
    let mut ev = Generators::new();
    ev.insert(d12);
    ev.insert(d21);
    let table = PairingTable::new(e)?;
    for slot in SLOTS {
        let s1 = FreeSlice::new(e, slot.0, slot.1);
        let s2 = FreeSlice::new(&ev, slot.0, slot.1);
        let a = crate::dioperad::slice_generators(e, &s1)?;
        let b = crate::dioperad::slice_generators(&ev, &s2)?;
        let pm = table.get(slot);
        for (x, y) in a.iter().zip(&b) {
            let lhs = x.transpose().mul(pm)?.mul(y)?;
            if lhs != pm.scale(&Rat::from_int(-1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `dim R + dim R^⊥ = dim F(E)` at every slot.
pub fn complement_dims_add_up(p: &Presentation, dual: &Presentation) -> bool {
    SLOTS.iter().all(|&s| {
        let r: &Subspace = p.relation(s);
        r.dim() + dual.relation(s).dim() == r.ambient_dim()
    })
}
