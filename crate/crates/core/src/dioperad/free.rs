use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ratlin::{Rat, SparseVec};
use crate::sbimod::{canonical_decorated, flatten, unflatten, Generators};
use crate::trees::{enumerate_trees, DiTree, Profile};

/// Basis element of a free dioperad: a canonical tree with one generator
/// basis index per vertex.
pub type Term = (DiTree, Vec<u32>);

/// Element of a free dioperad `F(E)(m,n)`, stored in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeElement {
    m: usize,
    n: usize,
    terms: BTreeMap<Term, Rat>,
}

impl FreeElement {
    pub fn zero(m: usize, n: usize) -> Self {
        FreeElement { m, n, terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        Self::basis(DiTree::unit(), Vec::new())
    }

    /// Generator `k` of shape `(m,n)` on the corolla.
    pub fn generator(m: usize, n: usize, k: u32) -> Self {
        Self::basis(DiTree::corolla(m, n), vec![k])
    }

    /// A single basis term; the tree must already be canonical.
    pub fn basis(tree: DiTree, deco: Vec<u32>) -> Self {
        let (m, n) = tree.arity();
        let mut terms = BTreeMap::new();
        terms.insert((tree, deco), Rat::one());
        FreeElement { m, n, terms }
    }

    /// Decorated tree with arbitrary vertex vectors, canonicalized.
    pub fn from_decorated(e: &Generators, t: &DiTree, decos: &[SparseVec]) -> Result<Self> {
        let (c, terms) = canonical_decorated(e, t, decos)?;
        let mut out = FreeElement::zero(t.m(), t.n());
        for (d, x) in terms {
            out.add_term((c.clone(), d), x);
        }
        Ok(out)
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &DiTree, d: &[u32]) -> Rat {
        self.terms.get(&(t.clone(), d.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, key: Term, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key);
        match slot {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return FreeElement::zero(self.m, self.n);
        }
        let terms = self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect();
        FreeElement { m: self.m, n: self.n, terms }
    }

    pub fn add(&self, o: &FreeElement) -> Result<Self> {
        if self.arity() != o.arity() {
            return Err(Error::SizeMismatch("adding elements of different arities".into()));
        }
        let mut out = self.clone();
        for (k, x) in &o.terms {
            out.add_term(k.clone(), x.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &FreeElement) -> Result<Self> {
        self.add(&o.scale(&Rat::from_int(-1)))
    }

    /// `self i∘j o`: output `j` of `o` feeds input `i` of `self`.
    pub fn compose(&self, i: usize, j: usize, o: &FreeElement, e: &Generators) -> Result<Self> {
        if i == 0 || i > self.n || j == 0 || j > o.m {
            return Err(Error::IndexOutOfRange(alloc::format!(
                "composition {i}∘{j} of ({},{}) and ({},{})",
                self.m,
                self.n,
                o.m,
                o.n
            )));
        }
        let mut out = FreeElement::zero(self.m + o.m - 1, self.n + o.n - 1);
        for ((t1, d1), c1) in &self.terms {
            for ((t2, d2), c2) in &o.terms {
                let g = DiTree::graft(t1, i, j, t2)?;
                let decos: Vec<SparseVec> =
                    d1.iter().chain(d2.iter()).map(|&k| vec![(k as usize, Rat::one())]).collect();
                let (c, terms) = canonical_decorated(e, &g, &decos)?;
                let c12 = c1 * c2;
                for (d, x) in terms {
                    out.add_term((c.clone(), d), &x * &c12);
                }
            }
        }
        Ok(out)
    }

    /// `(pi, sigma) . self`: root `k` becomes root `pi(k)`, leaf `k` becomes
    /// leaf `sigma(k)`.
    pub fn act(&self, pi: &Perm, sigma: &Perm, e: &Generators) -> Result<Self> {
        if pi.len() != self.m || sigma.len() != self.n {
            return Err(Error::SizeMismatch("permutation sizes".into()));
        }
        let mut out = FreeElement::zero(self.m, self.n);
        for ((t, d), c) in &self.terms {
            let r = t.relabel(pi, sigma);
            let decos: Vec<SparseVec> = d.iter().map(|&k| vec![(k as usize, Rat::one())]).collect();
            let (ct, terms) = canonical_decorated(e, &r, &decos)?;
            for (dd, x) in terms {
                out.add_term((ct.clone(), dd), &x * c);
            }
        }
        Ok(out)
    }

    /// The same element in the opposite dioperad: trees reversed, generator
    /// spaces viewed through [`crate::sbimod::SBimoduleSpace::opposite`].
    pub fn opposite(&self, e_op: &Generators) -> Result<Self> {
        let mut out = FreeElement::zero(self.n, self.m);
        for ((t, d), c) in &self.terms {
            let r = t.reverse();
            let decos: Vec<SparseVec> = d.iter().map(|&k| vec![(k as usize, Rat::one())]).collect();
            let (ct, terms) = canonical_decorated(e_op, &r, &decos)?;
            for (dd, x) in terms {
                out.add_term((ct.clone(), dd), &x * c);
            }
        }
        Ok(out)
    }
}

/// Basis of `F(E)(m,n)`: canonical trees with vertex shapes from `E`, each
/// followed by its decoration multi-indices in lexicographic order.
#[derive(Clone, Debug)]
pub struct FreeSlice {
    m: usize,
    n: usize,
    trees: Vec<DiTree>,
    dims: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    index: HashMap<DiTree, usize>,
    dim: usize,
}

impl FreeSlice {
    pub fn new(e: &Generators, m: usize, n: usize) -> Self {
        let shapes = e.shapes();
        let trees = if (m, n) == (1, 1) {
            vec![DiTree::unit()]
        } else if shapes.is_empty() {
            Vec::new()
        } else {
            enumerate_trees(m, n, &Profile::Shapes(shapes))
        };
        Self::from_trees(e, m, n, trees)
    }

    /// Slice spanned by the given canonical trees.
    pub fn from_trees(e: &Generators, m: usize, n: usize, trees: Vec<DiTree>) -> Self {
        let mut dims = Vec::with_capacity(trees.len());
        let mut offsets = Vec::with_capacity(trees.len() + 1);
        let mut index = HashMap::with_capacity(trees.len());
        let mut dim = 0;
        for (k, t) in trees.iter().enumerate() {
            let d: Vec<usize> = t.vertices().iter().map(|v| e.dim(v.shape())).collect();
            offsets.push(dim);
            dim += d.iter().product::<usize>();
            dims.push(d);
            index.insert(t.clone(), k);
        }
        offsets.push(dim);
        FreeSlice { m, n, trees, dims, offsets, index, dim }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trees(&self) -> &[DiTree] {
        &self.trees
    }

    pub fn tree_index(&self, t: &DiTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Range of basis indices belonging to tree `k`.
    pub fn tree_range(&self, k: usize) -> core::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn vertex_dims(&self, k: usize) -> &[usize] {
        &self.dims[k]
    }

    pub fn index_of(&self, t: &DiTree, d: &[u32]) -> Option<usize> {
        let k = self.tree_index(t)?;
        Some(self.offsets[k] + flatten(&self.dims[k], d))
    }

    /// Tree number and decoration of basis element `b`.
    pub fn locate(&self, b: usize) -> (usize, Vec<u32>) {
        let k = self.offsets.partition_point(|&o| o <= b) - 1;
        (k, unflatten(&self.dims[k], b - self.offsets[k]))
    }

    pub fn basis_term(&self, b: usize) -> Term {
        let (k, d) = self.locate(b);
        (self.trees[k].clone(), d)
    }

    pub fn basis_element(&self, b: usize) -> FreeElement {
        let (t, d) = self.basis_term(b);
        FreeElement::basis(t, d)
    }

    pub fn to_vec(&self, x: &FreeElement) -> Result<SparseVec> {
        if x.arity() != self.arity() {
            return Err(Error::SizeMismatch("element and slice arities differ".into()));
        }
        let mut v: SparseVec = Vec::with_capacity(x.len());
        for ((t, d), c) in x.terms() {
            let k = self
                .index_of(t, d)
                .ok_or_else(|| Error::MalformedTree(alloc::format!("tree {t} is not in the slice")))?;
            v.push((k, c.clone()));
        }
        Ok(crate::ratlin::normalize(v))
    }

    pub fn from_vec(&self, v: &[(usize, Rat)]) -> FreeElement {
        let mut out = FreeElement::zero(self.m, self.n);
        for (b, c) in v {
            out.add_term(self.basis_term(*b), c.clone());
        }
        out
    }
}
