//! Tableau data structures and the raw combinatorial definitions.

mod depth;
mod filling;
mod height;
mod inversion;
mod shape;
mod transposition;

pub use depth::{depth_grid, inversion_depth, modified_depth_grid, modified_inversion_depth};
pub(crate) use depth::{depth_at, modified_depth_at};
pub use filling::{CellRef, Filling};
pub use height::{height_order, HeightOrder};
pub use inversion::{
    content_lift, entry_label, inversion_count, inversion_pairs, inversion_pairs_on_standardization,
    standardize, InversionPair,
};
pub(crate) use inversion::count_unchecked;
pub use shape::{Content, Shape};
pub use transposition::{apply_transposition, build_from_inversions, is_admissible};
