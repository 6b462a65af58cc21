//! Family enumeration and minimizer searches.

mod brute;
mod family;
mod report;
mod trees;

pub use brute::{brute_min, isomorphic, GRAPH_CAP};
pub use family::{enumerate_family, family_min, predicted_min, s_bounds, theorem_filter, SearchOptions};
pub use report::{reports_to_csv, MinimizerReport, Scope, Witness};
pub use trees::{enumerate_trees, free_trees, FreeTrees, DEFAULT_TREE_CAP};

use thiserror::Error;

use crate::charpoly::CharpolyError;
use crate::graph::GraphError;
use crate::spectral::SpectralError;
use crate::transfer::TransferError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("family is empty for n={n}, e={e}")]
    EmptyFamily { n: usize, e: usize },
    #[error("no prediction for e={e}")]
    NoPrediction { e: usize },
    #[error("order {n} exceeds the cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("no candidates of order {n} and diameter {d}")]
    NoCandidates { n: usize, d: usize },
    #[error("scope {0} is not a brute-force scope")]
    WrongScope(Scope),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Charpoly(#[from] CharpolyError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
}
