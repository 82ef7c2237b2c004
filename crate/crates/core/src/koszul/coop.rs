use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::dioperad::{check_weight, free_slice, FreeElement, FreeSlice, Presentation, SLOTS, WEIGHT_LIMIT};
use crate::error::{Error, Result};
use crate::perm::parity_sign;
use crate::ratlin::{dot, kernel, Mat, Rat, SparseVec, Subspace};
use crate::sbimod::expand_tensor;

/// `P^¡(m,n)` inside `F(E)(m,n)`, with generators read as odd elements and
/// the canonical vertex order as their order.
///
/// An element belongs to `P^¡` when for every internal edge its two-vertex
/// part, ordered (root side, leaf side), lies in `R`.
#[derive(Clone, Debug)]
pub struct CoopSlice {
    free: FreeSlice,
    space: Subspace,
    row_of_pivot: Vec<Option<usize>>,
}

impl CoopSlice {
    pub fn arity(&self) -> (usize, usize) {
        self.free.arity()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn free(&self) -> &FreeSlice {
        &self.free
    }

    /// Reduced row echelon basis.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Basis row whose pivot is the free basis element `b`.
    pub fn row_of_pivot(&self, b: usize) -> Option<usize> {
        self.row_of_pivot[b]
    }

    pub fn element(&self, k: usize) -> FreeElement {
        self.free.from_vec(&self.space.rows()[k])
    }
}

/// Functionals vanishing on `R` at each slot.
fn annihilators(p: &Presentation) -> BTreeMap<(usize, usize), Vec<SparseVec>> {
    SLOTS
        .iter()
        .map(|&s| {
            let r = p.relation(s);
            let ann = if r.dim() == 0 { Subspace::full(r.ambient_dim()) } else { kernel(&r.basis()) };
            (s, ann.rows().to_vec())
        })
        .collect()
}

pub fn coop_slice(p: &Presentation, m: usize, n: usize) -> Result<CoopSlice> {
    check_weight(m, n, WEIGHT_LIMIT)?;
    let free = free_slice(p, m, n)?;
    let space = if m + n <= 3 { Subspace::full(free.dim()) } else { kernel(&constraints(p, &free)?) };
    let mut row_of_pivot = vec![None; free.dim()];
    for (k, &c) in space.pivots().iter().enumerate() {
        row_of_pivot[c] = Some(k);
    }
    Ok(CoopSlice { free, space, row_of_pivot })
}

fn constraints(p: &Presentation, free: &FreeSlice) -> Result<Mat> {
    let e = p.generators();
    let ann = annihilators(p);
    let slots: BTreeMap<(usize, usize), FreeSlice> = SLOTS.iter().map(|&s| (s, p.slot_slice(s))).collect();
    let mut row_ids: BTreeMap<(crate::trees::DiTree, Vec<u32>, usize), usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, Rat>> = Vec::new();
    for b in 0..free.dim() {
        let (k, deco) = free.locate(b);
        let t = &free.trees()[k];
        for (ei, ed) in t.edges().iter().enumerate() {
            let (raw, merged) = t.contract_raw(ei)?;
            let c = raw.canonicalize_full();
            let (v, i0) = ed.dst;
            let (w, j0) = ed.src;
            let local = FreeElement::generator(t.shape(v).0, t.shape(v).1, deco[v])
                .compose(i0 + 1, j0 + 1, &FreeElement::generator(t.shape(w).0, t.shape(w).1, deco[w]), e)?
                .act(&c.out_perm[merged], &c.in_perm[merged], e)?;
            let slot = local.arity();
            let lv = slots[&slot].to_vec(&local)?;
            let old: Vec<usize> = (0..t.num_vertices()).filter(|&u| u != w).collect();
            let mut others: Vec<(usize, usize)> = Vec::new();
            for (r, &u) in old.iter().enumerate() {
                if r != merged {
                    others.push((c.vertex_map[r], u));
                }
            }
            others.sort();
            let mut order = vec![v, w];
            order.extend(others.iter().map(|x| x.1));
            let sign = Rat::from_int(parity_sign(&order));
            let mut factors: Vec<SparseVec> = Vec::with_capacity(others.len());
            for &(_, u) in &others {
                let r = old.iter().position(|&x| x == u).expect("surviving vertex");
                let space = e.get(t.shape(u)).ok_or_else(|| Error::SizeMismatch("generator shape".into()))?;
                let unit = vec![(deco[u] as usize, Rat::one())];
                factors.push(if c.out_perm[r].is_identity() && c.in_perm[r].is_identity() {
                    unit
                } else {
                    space.action(&c.out_perm[r], &c.in_perm[r])?.apply(&unit)
                });
            }
            for (phi_k, phi) in ann[&slot].iter().enumerate() {
                let val = dot(phi, &lv);
                if val.is_zero() {
                    continue;
                }
                for (od, x) in expand_tensor(&factors) {
                    let key = (c.tree.clone(), od, phi_k);
                    let id = *row_ids.entry(key).or_insert_with(|| {
                        rows.push(BTreeMap::new());
                        rows.len() - 1
                    });
                    let s = rows[id].entry(b).or_insert_with(Rat::zero);
                    *s = &*s + &(&(&val * &x) * &sign);
                }
            }
        }
    }
    let rows: Vec<SparseVec> =
        rows.into_iter().map(|r| r.into_iter().filter(|(_, x)| !x.is_zero()).collect()).collect();
    Mat::from_rows(free.dim(), rows)
}
