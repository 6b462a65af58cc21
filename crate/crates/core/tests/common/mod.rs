#![allow(dead_code)]

use quipu_core::graph::QuipuSpec;
use quipu_core::Tree;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (perm[rng.gen_range(0..i)], perm[i])).collect();
    Tree::from_edges(n, &edges).unwrap()
}

/// Random open quipu: main path of `p` vertices, pendants of length 1..=3 at
/// random interior positions.
pub fn random_quipu(rng: &mut impl Rng, p: usize, pendants: usize) -> QuipuSpec {
    let mut positions: Vec<usize> = (1..p - 1).collect();
    positions.shuffle(rng);
    let mut chosen: Vec<usize> = positions.into_iter().take(pendants).collect();
    chosen.sort_unstable();
    let attachments = chosen.into_iter().map(|m| (m, rng.gen_range(1..=3))).collect();
    QuipuSpec::new(p, attachments).unwrap()
}
