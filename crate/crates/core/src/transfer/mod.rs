//! The `(p, q)` transfer calculus for path-like trees.

mod family;
mod params;
mod pq;

pub use family::{
    left_pairs, phi_by_join, phi_kvector_at, phi_kvector_in, phi_quipu_at, pq_quipu_at, prefix_pairs,
    right_pairs, suffix_pairs,
};
pub use params::{make_params, TransferParams};
pub use pq::{
    apply_step, mat_mul, phi_join, phi_join_path, pq_of_rooted, pq_of_rooted_in, shift_difference, Mat2,
    PQPair, Step,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error("λ = {0} is outside the domain λ > 2")]
    OutOfDomain(String),
    #[error("pairs were built at different λ")]
    ContextMismatch,
    #[error("ratio q/p undefined: p = 0")]
    ZeroDenominator,
    #[error("shift difference needs j ≥ 1, got i = {i}, j = {j}")]
    InvalidShift { i: usize, j: usize },
}
