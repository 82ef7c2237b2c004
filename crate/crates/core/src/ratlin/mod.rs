//! Exact rational linear algebra.

mod complex;
mod elim;
mod mat;
mod rat;
mod subspace;

pub use complex::{homology_dims, homology_euler, ChainComplex};
pub use mat::{axpy, dot, lookup, normalize, Mat, SparseVec};
pub use rat::Rat;
pub use subspace::{kernel, orth_complement, rank, rref_rows, Subspace};
