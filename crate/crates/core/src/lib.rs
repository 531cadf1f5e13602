//! Exact combinatorics of inverted (semi)standard Young tableaux.
//!
//! A row-standard filling whose columns are out of order carries a multiset
//! of *inversion pairs*; this crate computes those pairs from the raw
//! definitions, the generating functions that count fillings by inversion
//! number, and the m-dimensional Dyck path statistics that organize them.
//!
//! Modules:
//!
//! * [`tableau`]: shapes, contents, fillings, height order, inversion pairs,
//!   standardization, inversion depths and partial row transpositions.
//! * [`qpoly`]: dense polynomials in `q` with big-integer coefficients and the
//!   q-number / q-factorial / q-binomial primitives.
//! * [`enumerate`]: brute-force generators used as the independent oracle.
//! * [`genfun`]: the fixed-standardization generating function and the closed
//!   enumerations for two-row and two-column shapes.
//! * [`dyck`]: m-dimensional Dyck paths, returns to ground and ballot numbers.
//!
//! Everything is `no_std` + `alloc`; values are immutable once built.
#![no_std]

extern crate alloc;

pub mod dyck;
pub mod enumerate;
mod error;
pub mod genfun;
pub mod numbers;
pub mod qpoly;
pub mod tableau;

pub use error::{Error, Result};
pub use qpoly::QPolynomial;
pub use tableau::{CellRef, Content, Filling, InversionPair, Shape};
