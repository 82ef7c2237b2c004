//! Labeled directed trees, forests and level functions.

mod ditree;
mod enumerate;
mod forest;
mod level;

pub use ditree::{Canonical, DiTree, Edge, Slot, Vertex};
pub use enumerate::{enumerate_trees, Profile};
pub use forest::DiForest;
pub use level::{directed_paths, level_functions, LevelFn, Monotonicity};

#[cfg(test)]
mod tests;
