//! Quadratic duality, cobar and Koszul complexes.

mod basis;
mod cobar;
mod coop;
mod kcomplex;
mod pairing;
mod quot;
mod verdict;

pub use basis::DecoratedBasis;
pub use cobar::{cobar_slice, h0_check, h0_report, CobarComplexSlice, H0Report};
pub use coop::{coop_slice, CoopSlice};
pub use kcomplex::{koszul_slice, two_level_skeletons, KoszulComplexSlice};
pub use pairing::{
    complement_dims_add_up, dual_generators, pairing_is_equivariant, pairing_sign, quadratic_dual, same_relations,
    PairingTable,
};
pub use verdict::{
    distributive_check, koszulity_check, koszulity_row, DistributiveReport, DistributiveRow, KoszulityRow,
    KoszulityTable, Orientation, DISTRIBUTIVE_ARITIES,
};
