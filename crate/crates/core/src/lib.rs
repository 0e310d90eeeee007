//! Exact decision procedures for tilings and spectra of cube-like sets in
//! finite abelian product groups `Z_{A_1} x ... x Z_{A_N}`.
//!
//! The library decides, verifies, and enumerates:
//!
//! - level-`L` packings and tilings by translates ([`tiling`]),
//! - spectra (orthogonal character bases) through two independent exact
//!   routes ([`spectra`]),
//! - the duality between tiling complements of a cube and spectra of its
//!   dual cube, including the reduction of dilated cubes to plain cubes in
//!   the subgroup they generate ([`cube`]).
//!
//! All decisions run in exact integer arithmetic: transform values are sums
//! of roots of unity kept as exponent-count vectors and zero-tested by
//! cyclotomic polynomial reduction ([`fourier`]). Floating point appears
//! only in test oracles.

pub mod cli;
pub mod cube;
pub mod error;
pub mod fourier;
pub mod group;
pub mod report;
pub mod spectra;
pub mod tiling;

pub use cube::{Cube, DilatedCube};
pub use error::{Error, Result};
pub use fourier::{ExpSum, IntFunction};
pub use group::{CoordEmbedding, Element, Group, PointSet};
