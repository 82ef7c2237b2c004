use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::sbimod::{flatten, unflatten};
use crate::trees::DiTree;

/// Basis of a direct sum over canonical trees of tensor products of vertex
/// spaces. Trees whose product is zero are dropped.
#[derive(Clone, Debug, Default)]
pub struct DecoratedBasis {
    trees: Vec<DiTree>,
    dims: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    index: HashMap<DiTree, usize>,
}

impl DecoratedBasis {
    pub fn new(entries: impl IntoIterator<Item = (DiTree, Vec<usize>)>) -> Self {
        let mut b = DecoratedBasis { offsets: alloc::vec![0], ..Default::default() };
        for (t, d) in entries {
            let size: usize = d.iter().product();
            if size == 0 {
                continue;
            }
            b.index.insert(t.clone(), b.trees.len());
            b.trees.push(t);
            b.dims.push(d);
            b.offsets.push(b.offsets.last().unwrap() + size);
        }
        b
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn trees(&self) -> &[DiTree] {
        &self.trees
    }

    pub fn vertex_dims(&self, k: usize) -> &[usize] {
        &self.dims[k]
    }

    pub fn tree_index(&self, t: &DiTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn index_of(&self, t: &DiTree, d: &[u32]) -> Option<usize> {
        let k = self.tree_index(t)?;
        Some(self.offsets[k] + flatten(&self.dims[k], d))
    }

    /// Tree number and vertex indices of basis element `b`.
    pub fn locate(&self, b: usize) -> (usize, Vec<u32>) {
        let k = self.offsets.partition_point(|&o| o <= b) - 1;
        (k, unflatten(&self.dims[k], b - self.offsets[k]))
    }
}
