use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::SBimoduleSpace;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ratlin::{Mat, Rat, SparseVec};
use crate::trees::DiTree;

/// Generator spaces indexed by vertex shape `(outputs, inputs)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Generators {
    spaces: BTreeMap<(usize, usize), SBimoduleSpace>,
}

impl Generators {
    pub fn new() -> Self {
        Generators::default()
    }

    pub fn insert(&mut self, s: SBimoduleSpace) {
        self.spaces.insert(s.arity(), s);
    }

    pub fn get(&self, shape: (usize, usize)) -> Option<&SBimoduleSpace> {
        self.spaces.get(&shape).filter(|s| s.dim() > 0)
    }

    pub fn dim(&self, shape: (usize, usize)) -> usize {
        self.get(shape).map_or(0, SBimoduleSpace::dim)
    }

    /// Shapes with nonzero generator spaces.
    pub fn shapes(&self) -> Vec<(usize, usize)> {
        self.spaces.iter().filter(|(_, s)| s.dim() > 0).map(|(k, _)| *k).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SBimoduleSpace> {
        self.spaces.values()
    }

    pub fn map(&self, f: impl Fn(&SBimoduleSpace) -> SBimoduleSpace) -> Generators {
        let mut g = Generators::new();
        for s in self.spaces.values() {
            g.insert(f(s));
        }
        g
    }
}

/// `E(T)`: the tensor product of generator spaces over the vertices of a
/// tree, with the product basis in vertex order (first vertex most
/// significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedSpace {
    pub tree: DiTree,
    pub dims: Vec<usize>,
}

impl DecoratedSpace {
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[u32]) -> usize {
        flatten(&self.dims, idx)
    }

    pub fn unflatten(&self, k: usize) -> Vec<u32> {
        unflatten(&self.dims, k)
    }
}

pub fn flatten(dims: &[usize], idx: &[u32]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i as usize)
}

pub fn unflatten(dims: &[usize], mut k: usize) -> Vec<u32> {
    let mut out = vec![0u32; dims.len()];
    for v in (0..dims.len()).rev() {
        out[v] = (k % dims[v]) as u32;
        k /= dims[v];
    }
    out
}

pub fn decorated_space(e: &Generators, t: &DiTree) -> DecoratedSpace {
    let dims = t.vertices().iter().map(|v| e.dim(v.shape())).collect();
    DecoratedSpace { tree: t.clone(), dims }
}

/// Expands a tensor product of sparse vectors into multi-index terms.
pub fn expand_tensor(factors: &[SparseVec]) -> Vec<(Vec<u32>, Rat)> {
    let mut acc: Vec<(Vec<u32>, Rat)> = vec![(Vec::new(), Rat::one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (idx, c) in &acc {
            for (i, x) in f {
                let mut j = idx.clone();
                j.push(*i as u32);
                next.push((j, c * x));
            }
        }
        acc = next;
    }
    acc
}

/// Canonicalizes a decorated tree whose vertex `v` carries the vector
/// `decos[v]` of `E(shape of v)`. Slot reorderings act through the generator
/// matrices. Returns the canonical tree and its coefficients on the product
/// basis.
pub fn canonical_decorated(e: &Generators, t: &DiTree, decos: &[SparseVec]) -> Result<(DiTree, Vec<(Vec<u32>, Rat)>)> {
    let c = t.canonicalize_full();
    let nv = t.num_vertices();
    let mut placed: Vec<SparseVec> = vec![Vec::new(); nv];
    for v in 0..nv {
        let space = e
            .get(t.shape(v))
            .ok_or_else(|| Error::SizeMismatch(alloc::format!("no generators of shape {:?}", t.shape(v))))?;
        let dv = if c.out_perm[v].is_identity() && c.in_perm[v].is_identity() {
            decos[v].clone()
        } else {
            space.action(&c.out_perm[v], &c.in_perm[v])?.apply(&decos[v])
        };
        placed[c.vertex_map[v]] = dv;
    }
    Ok((c.tree, expand_tensor(&placed)))
}

/// Matrix of the relabeling `(pi, sigma)` from `d` to the canonical
/// relabeled tree's decorated space.
pub fn relabel_action(e: &Generators, d: &DecoratedSpace, pi: &Perm, sigma: &Perm) -> Result<(DecoratedSpace, Mat)> {
    let (m, n) = d.tree.arity();
    if pi.len() != m || sigma.len() != n {
        return Err(Error::SizeMismatch("relabeling sizes".into()));
    }
    let raw = d.tree.relabel(pi, sigma);
    let target = decorated_space(e, &raw.canonicalize().0);
    let mut cols: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(d.dim());
    for k in 0..d.dim() {
        let idx = d.unflatten(k);
        let decos: Vec<SparseVec> = idx.iter().map(|&i| vec![(i as usize, Rat::one())]).collect();
        let (_, terms) = canonical_decorated(e, &raw, &decos)?;
        cols.push(terms.into_iter().map(|(j, x)| (target.flatten(&j), x)).collect());
    }
    let mat = Mat::from_rows(target.dim(), cols)?.transpose();
    Ok((target, mat))
}
