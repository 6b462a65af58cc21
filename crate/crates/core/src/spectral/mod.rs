//! Spectral radii and limit radii in extended precision.

mod eval;
mod limits;
mod radius;

pub use eval::{guard_bits, GuardedPoly};
pub use limits::{bracket_cap, lambda0, rho_k_forms, solve_limit_equation, solve_limit_in, LimitKind};
pub use radius::{
    collatz_wielandt, exceeds_radius, largest_root, rho_forest, rho_graph, rho_tree, rho_tree_with, second_largest_root,
    SolveOptions, SpectralResult, DEFAULT_TOL, TIE_TOL,
};

use thiserror::Error;

use crate::charpoly::CharpolyError;
use crate::transfer::TransferError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("tolerance {tol:e} is unachievable at {digits} digits")]
    ToleranceUnachievable { tol: f64, digits: u32 },
    #[error("no sign change for {kind} with k={k} in the bracket; widen it")]
    NoSignChange { kind: &'static str, k: i64 },
    #[error("k must be at least 1, got {0}")]
    InvalidK(i64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    Empty,
    #[error("could not localize the largest root")]
    Localization,
    #[error(transparent)]
    Charpoly(#[from] CharpolyError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
}
