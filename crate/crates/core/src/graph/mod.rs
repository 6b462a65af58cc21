//! Trees, open quipus and the three candidate families.

mod canon;
mod edgelist;
mod kvector;
mod quipu;
mod tree;

pub use canon::{canonical_code, centers, rooted_code};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use kvector::{compositions, FamilyId, KVector};
pub use quipu::{build_quipu, describe_quipu, QuipuSpec};
pub use tree::{Graph, Tree};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("not a tree: {n} vertices but {edges} edges or disconnected")]
    NotATree { n: usize, edges: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("attachment position {position} outside main path of {p} vertices")]
    AttachmentOutOfRange { position: usize, p: usize },
    #[error("pendant path at position {0} has length 0")]
    EmptyPendant(usize),
    #[error("attachment positions {0} and {1} are not strictly increasing")]
    UnsortedAttachments(usize, usize),
    #[error("family {family} with e={e} needs {expected} interior counts, got {got}")]
    WrongKLength {
        family: FamilyId,
        e: usize,
        expected: usize,
        got: usize,
    },
    #[error("family {family} needs at least one internal path; e={e} is too small")]
    EValueTooSmall { family: FamilyId, e: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
