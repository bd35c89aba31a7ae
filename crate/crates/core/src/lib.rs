//! Exact lower bounds for simplicial covers of the `d`-cube.
//!
//! The crate is organised bottom-up:
//!
//! * [`simplex`] — 0/1 simplices in the cube, their classes, exterior faces,
//!   projections along faces, footprints and shadows.
//! * [`counting`] — the `V(d)` table and bounds for the exterior-face
//!   counting function `F(d, c, d', c')`.
//! * [`lp`] — an exact rational simplex solver.
//! * [`bounds`] — the covering linear programs and the comparison table.
//! * [`verify`] — brute-force censuses of small cubes, the theorem suite,
//!   the standard triangulation and the triangulation-to-cover extractor.
//!
//! No floating point is used anywhere in the computation paths.

pub mod bounds;
pub mod counting;
mod error;
pub mod exec;
pub mod lp;
pub mod simplex;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;

/// Arbitrary-precision rational used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Simplex classes and exterior-face counts.
///
/// Every class of a simplex in a cube of dimension at most [`MAX_DIM`] fits:
/// `V(60) <= 61^30.5 / 2^60 < 2^122`.
pub type Class = u128;

/// Largest cube dimension supported by the word-packed vertex representation
/// and by the bound pipeline.
pub const MAX_DIM: usize = 60;
