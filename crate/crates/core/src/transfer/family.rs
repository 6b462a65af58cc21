use std::sync::Arc;

use crate::graph::{KVector, QuipuSpec};
use crate::scalar::Scalar;

use super::{make_params, phi_join_path, PQPair, TransferError, TransferParams};

/// Rooted at main-path vertex 0: steps are applied from the far end.
pub fn pq_quipu_at(ctx: &Arc<TransferParams>, spec: &QuipuSpec) -> PQPair {
    let profile = spec.pendant_profile();
    let mut pq = PQPair::empty(ctx);
    for &len in profile.iter().rev() {
        pq = pq.extend_with_pendant(len);
    }
    pq
}

pub fn phi_quipu_at(ctx: &Arc<TransferParams>, spec: &QuipuSpec) -> Scalar {
    pq_quipu_at(ctx, spec).phi()
}

/// `φ` of the family tree at `λ`, in `O(n)` scalar steps. Stretches of
/// bare main path are applied as a single power of `A`.
pub fn phi_kvector_at(kv: &KVector, lambda: &Scalar) -> Result<Scalar, TransferError> {
    let ctx = make_params(lambda)?;
    Ok(phi_kvector_in(&ctx, kv))
}

pub fn phi_kvector_in(ctx: &Arc<TransferParams>, kv: &KVector) -> Scalar {
    let spec = kv.to_quipu();
    let profile = spec.pendant_profile();
    let mut pq = PQPair::empty(ctx);
    let mut run = 0;
    for &len in profile.iter().rev() {
        if len == 0 {
            run += 1;
            continue;
        }
        if run > 0 {
            pq = pq.advance(run);
            run = 0;
        }
        pq = pq.extend_with_pendant(len);
    }
    pq.advance(run).phi()
}

/// For each attachment `i`, the rooted subtree made of main-path vertices
/// `0..=m_i` and their pendants, rooted at `m_i`.
pub fn left_pairs(ctx: &Arc<TransferParams>, spec: &QuipuSpec) -> Vec<PQPair> {
    let profile = spec.pendant_profile();
    let mut out = Vec::with_capacity(spec.attachments.len());
    let mut pq = PQPair::empty(ctx);
    for (v, &len) in profile.iter().enumerate() {
        pq = pq.extend_with_pendant(len);
        if len > 0 {
            debug_assert!(spec.attachments.iter().any(|a| a.0 == v));
            out.push(pq.clone());
        }
    }
    out
}

/// For each attachment `i`, the rooted subtree made of main-path vertices
/// `m_i..p` and their pendants, rooted at `m_i`.
pub fn right_pairs(ctx: &Arc<TransferParams>, spec: &QuipuSpec) -> Vec<PQPair> {
    let mut out = left_pairs(ctx, &spec.reversed());
    out.reverse();
    out
}

/// Prefix pairs `L_0..L_{r-1}` of a family tree. `L_0` is the first branch
/// vertex with everything to its left, and `L_i` extends `L_{i-1}` through
/// the next internal path and branch vertex.
pub fn prefix_pairs(ctx: &Arc<TransferParams>, kv: &KVector) -> Vec<PQPair> {
    let mut all = left_pairs(ctx, &kv.to_quipu());
    all.truncate(kv.r());
    all
}

/// Suffix pairs `R_2..R_{r+1}`, mirror images of the prefix pairs.
pub fn suffix_pairs(ctx: &Arc<TransferParams>, kv: &KVector) -> Vec<PQPair> {
    right_pairs(ctx, &kv.to_quipu()).split_off(1)
}

/// `φ` assembled by joining the pairs on either side of internal path `i`
/// (0-based).
pub fn phi_by_join(ctx: &Arc<TransferParams>, kv: &KVector, i: usize) -> Result<Scalar, TransferError> {
    let spec = kv.to_quipu();
    let left = left_pairs(ctx, &spec);
    let right = right_pairs(ctx, &spec);
    phi_join_path(&left[i], &right[i + 1], kv.ks()[i])
}
