use rug::Integer;

use crate::graph::Graph;

use super::{CharpolyError, IntPolynomial};

/// Largest order handled by the determinant oracle.
pub const ORACLE_CAP: usize = 64;

/// `det(λI - A)` by exact evaluation at `λ = 0..=n` followed by Newton
/// interpolation. Works for any simple graph, cycles included.
pub fn charpoly_det_oracle(graph: &Graph) -> Result<IntPolynomial, CharpolyError> {
    let n = graph.n();
    if n > ORACLE_CAP {
        return Err(CharpolyError::OracleCap { n, cap: ORACLE_CAP });
    }
    let adj = graph.adjacency_matrix();
    let values: Vec<Integer> = (0..=n as i64)
        .map(|x| {
            let m: Vec<Vec<Integer>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let a = Integer::from(adj[i][j]);
                            if i == j {
                                Integer::from(x) - a
                            } else {
                                -a
                            }
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();
    Ok(interpolate(&values))
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut sign = 1;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Integer::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = Integer::from(&m[i][j] * &m[k][k]) - Integer::from(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Integer-coefficient polynomial through `(i, values[i])`, `i = 0..len`.
fn interpolate(values: &[Integer]) -> IntPolynomial {
    let n = values.len();
    // forward differences Δ^k y_0 divided by k! give the falling-factorial
    // coefficients
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    let mut fact = Integer::from(1);
    for k in 0..n {
        if k > 0 {
            fact *= k as u32;
        }
        newton.push(Integer::from(diffs[0].div_exact_ref(&fact)));
        for i in 0..diffs.len() - 1 {
            let d = Integer::from(&diffs[i + 1] - &diffs[i]);
            diffs[i] = d;
        }
        diffs.pop();
    }
    // Σ c_k λ(λ-1)...(λ-k+1), expanded from the inside out
    let mut acc = IntPolynomial::zero();
    for (k, c) in newton.iter().enumerate().rev() {
        let factor = IntPolynomial::from_coeffs(vec![Integer::from(-(k as i64)), Integer::from(1)]);
        acc = acc.mul(&factor).add(&IntPolynomial::from_coeffs(vec![c.clone()]));
    }
    acc
}
