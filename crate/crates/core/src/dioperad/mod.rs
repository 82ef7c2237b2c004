//! Free and quadratic dioperads.

mod axioms;
mod boxprod;
mod endv;
mod free;
mod presentation;
mod quotient;

pub use axioms::{associativity_a, associativity_b, equivariance_c, perm_comp, right_act};
pub use boxprod::{box_dim, box_table, BoxCell, BoxSlice};
pub use endv::{check_algebra, swap_factors, Algebra, AlgebraReport};
pub use free::{FreeElement, FreeSlice, Term};
pub use presentation::{is_stable, slice_action, slice_generators, stable_closure, NamedRelation, Presentation, SLOTS};
pub(crate) use quotient::check_weight;
pub use quotient::{
    arities, free_slice, ideal_closure, ideal_slice, ideal_spanning_rows, ideal_sweep, quotient_dim, quotient_slice,
    DimTable, QuotientSlice, WEIGHT_LIMIT,
};
