//! Exact characteristic polynomials.

mod oracle;
mod poly;
mod tree;

pub use oracle::{bareiss_det, charpoly_det_oracle, ORACLE_CAP};
pub use poly::IntPolynomial;
pub use tree::{charpoly_forest, charpoly_tree, CharpolyMemo};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharpolyError {
    #[error("input contains a cycle")]
    Cyclic,
    #[error("{n} vertices exceeds the determinant oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },
}

/// Horner evaluation of `poly` at `x`, at the precision of `x`.
pub fn eval_poly(poly: &IntPolynomial, x: &Scalar) -> Scalar {
    poly.eval(x)
}
