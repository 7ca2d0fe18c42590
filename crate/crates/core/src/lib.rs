//! Periodic complex-base numeral systems `z^2 = D z - n`.
//!
//! * [`system`]: the base, the lattice `Z + zZ` and digit strings.
//! * [`integer`]: reduction, encoding, carry normalization, attractors.
//! * [`hull`]: the convex hull of the fractional tile from its width function.
//! * [`boundary`]: boundary chains, edge substitution and boundary dimension.
//! * [`render`]: point clouds, rasters, coverage and box counting.
//! * [`cubic`]: the three-dimensional analogue with base `(r, r e^{i phi})`.

pub mod boundary;
pub mod cubic;
pub mod error;
pub mod hull;
pub mod integer;
pub mod render;
pub mod system;

pub use error::{Error, Result};
pub use system::{DigitString, Expansion, LatticePoint, PseudoRepresentation, System};
