//! Minimal spectral radius of trees with given order and diameter.
//!
//! The crate builds the candidate trees (open quipus and the three families
//! parametrized by internal path lengths), computes exact characteristic
//! polynomials, evaluates them through a 2x2 transfer calculus, solves for
//! spectral radii and limit radii in extended precision, and searches the
//! families for minimizers.

pub mod charpoly;
pub mod graph;
pub mod scalar;
pub mod search;
pub mod spectral;
pub mod transfer;
pub mod verify;

pub use graph::{FamilyId, GraphError, KVector, QuipuSpec, Tree};
pub use scalar::{Precision, Scalar};
