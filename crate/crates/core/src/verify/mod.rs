//! Numerical certificates for minimizers and the limit lemmas.

mod certificate;
mod closed_forms;
mod convergence;
mod positivity;

pub use certificate::{certify_minimizer, CertificateCheck, CertificateReport, CheckId};
pub use closed_forms::{
    balanced_block_matrix, e7_shift_difference, e8_middle_shift_difference, e8_tie_shift_difference,
    phi_double_prime_symmetric, phi_prime_two_paths,
};
pub use convergence::{limit_convergence, ConvergenceKind, ConvergenceRow, ConvergenceTable};
pub use positivity::{pq_positivity_scan, PositivityEntry, PositivityScan};

use thiserror::Error;

use crate::graph::{FamilyId, GraphError};
use crate::spectral::SpectralError;
use crate::transfer::TransferError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("certificates apply to family P only, got {0}")]
    WrongFamily(FamilyId),
    #[error("k-vector has order {got}, expected {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("k-vector has e={got}, expected {expected}")]
    EMismatch { expected: usize, got: usize },
    #[error("certificates need at least two internal paths")]
    TooFewPaths,
    #[error("sizes must be strictly increasing")]
    UnsortedSizes,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
}
