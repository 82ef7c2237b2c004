use alloc::vec::Vec;

use super::ditree::DiTree;
use crate::error::{Error, Result};

/// Ordered forest: component `i` carries the `i`-th consecutive block of
/// leaf labels and of root labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiForest {
    components: Vec<DiTree>,
}

impl DiForest {
    pub fn new(components: Vec<DiTree>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::MalformedTree("empty forest".into()));
        }
        Ok(DiForest { components })
    }

    pub fn components(&self) -> &[DiTree] {
        &self.components
    }

    /// `(m_1..m_k)` and `(n_1..n_k)`.
    pub fn blocks(&self) -> (Vec<usize>, Vec<usize>) {
        (self.components.iter().map(DiTree::m).collect(), self.components.iter().map(DiTree::n).collect())
    }

    /// Total `(|m|, |n|)`.
    pub fn arity(&self) -> (usize, usize) {
        let (m, n) = self.blocks();
        (m.iter().sum(), n.iter().sum())
    }

    /// Global leaf label of leaf `l` in component `c`.
    pub fn global_leaf(&self, c: usize, l: usize) -> usize {
        self.components[..c].iter().map(DiTree::n).sum::<usize>() + l
    }

    /// Global root label of root `r` in component `c`.
    pub fn global_root(&self, c: usize, r: usize) -> usize {
        self.components[..c].iter().map(DiTree::m).sum::<usize>() + r
    }
}
