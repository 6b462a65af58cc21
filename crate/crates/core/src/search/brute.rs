use std::collections::HashSet;

use rayon::prelude::*;

use crate::charpoly::charpoly_det_oracle;
use crate::graph::{canonical_code, describe_quipu, Graph, Tree};
use crate::scalar::Scalar;
use crate::spectral::{collatz_wielandt, largest_root, rho_tree, SpectralResult};

use super::{enumerate_trees, MinimizerReport, Scope, SearchError, SearchOptions, Witness};

/// Largest order for the all-graphs scope.
pub const GRAPH_CAP: usize = 10;

/// Slack on double-precision Collatz–Wielandt bounds before they are used
/// to discard candidates.
const CW_SLACK: f64 = 1e-9;

/// Minimum spectral radius over all trees of order `n` and diameter `d`, or
/// over all connected graphs when `scope` is [`Scope::AllGraphsSmall`].
pub fn brute_min(n: usize, d: usize, scope: Scope, cap: usize, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    match scope {
        Scope::AllTrees => brute_trees(n, d, cap, opts),
        Scope::AllGraphsSmall => brute_graphs(n, d, opts),
        other => Err(SearchError::WrongScope(other)),
    }
}

fn brute_trees(n: usize, d: usize, cap: usize, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    let trees = enumerate_trees(n, d, cap)?;
    if trees.is_empty() {
        return Err(SearchError::NoCandidates { n, d });
    }
    let bounds: Vec<(f64, f64)> = trees.par_iter().map(|t| collatz_wielandt(t.graph(), 2000)).collect();
    let best_upper = bounds.iter().map(|b| b.1).fold(f64::INFINITY, f64::min);
    let keep: Vec<usize> = (0..trees.len())
        .filter(|&i| bounds[i].0 <= best_upper + CW_SLACK)
        .collect();
    let excluded_floor = (0..trees.len())
        .filter(|i| !keep.contains(i))
        .map(|i| bounds[i].0 - CW_SLACK)
        .fold(f64::INFINITY, f64::min);
    let mut solved: Vec<(String, usize, SpectralResult)> = keep
        .par_iter()
        .map(|&i| {
            let r = rho_tree(&trees[i], &opts.solve)?;
            Ok((canonical_code(&trees[i]), i, r))
        })
        .collect::<Result<_, SearchError>>()?;
    solved.sort_by(|a, b| a.2.value.partial_cmp(&b.2.value).expect("finite").then_with(|| a.0.cmp(&b.0)));
    let best = solved[0].2.clone();
    let prec = best.value.prec();
    let tied = |r: &SpectralResult| Scalar::with_val(prec, &r.value - &best.value) < opts.tie;
    let argmin: Vec<Witness> = solved
        .iter()
        .filter(|s| tied(&s.2))
        .map(|(code, i, _)| tree_witness(&trees[*i], code.clone()))
        .collect();
    let floor = Scalar::with_val(prec, excluded_floor);
    let (gap, lower) = match solved.iter().find(|s| !tied(&s.2)) {
        Some(s) if s.2.value <= floor => (Some(Scalar::with_val(prec, &s.2.value - &best.value)), false),
        Some(_) => (Some(Scalar::with_val(prec, &floor - &best.value)), true),
        None if excluded_floor.is_finite() => (Some(Scalar::with_val(prec, &floor - &best.value)), true),
        None => (None, false),
    };
    Ok(MinimizerReport {
        n,
        e: n.checked_sub(d),
        d,
        scope: Scope::AllTrees,
        argmin,
        rho: best,
        runner_up_gap: gap,
        gap_is_lower_bound: lower,
        candidates: trees.len(),
        solved: solved.len(),
    })
}

fn tree_witness(tree: &Tree, code: String) -> Witness {
    Witness::Tree {
        code,
        quipu: describe_quipu(tree),
        edges: tree.edges(),
    }
}

/// Depth-first search over supergraphs of spanning trees. Adding an edge
/// never increases the diameter and strictly increases the spectral
/// radius, which gives the two pruning rules.
fn brute_graphs(n: usize, d: usize, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    if n > GRAPH_CAP {
        return Err(SearchError::OverCap { n, cap: GRAPH_CAP });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).expect("pair");
    let starts: Vec<Tree> = super::free_trees(n, GRAPH_CAP)?
        .filter(|t| t.diameter() >= d)
        .collect();
    if starts.is_empty() {
        return Err(SearchError::NoCandidates { n, d });
    }
    let mut state = GraphSearch {
        n,
        d,
        pairs: &pairs,
        visited: HashSet::new(),
        best: f64::INFINITY,
        found: Vec::new(),
        opts,
        candidates: 0,
    };
    // trees of diameter exactly d give the first incumbent
    for t in starts.iter().filter(|t| t.diameter() == d) {
        let r = rho_tree(t, &opts.solve)?;
        state.best = state.best.min(r.value.to_f64());
    }
    for t in &starts {
        let mask = t.edges().iter().fold(0u64, |m, &(u, v)| m | 1 << index(u, v));
        state.visit(mask, 0)?;
    }
    let mut found = std::mem::take(&mut state.found);
    if found.is_empty() {
        return Err(SearchError::NoCandidates { n, d });
    }
    found.sort_by(|a, b| a.1.value.partial_cmp(&b.1.value).expect("finite").then_with(|| a.0.cmp(&b.0)));
    let best = found[0].1.clone();
    let prec = best.value.prec();
    let tied = |r: &SpectralResult| Scalar::with_val(prec, &r.value - &best.value) < opts.tie;
    let mut reps: Vec<Graph> = Vec::new();
    for (mask, _) in found.iter().filter(|f| tied(&f.1)) {
        let g = mask_graph(n, &pairs, *mask);
        if !reps.iter().any(|h| isomorphic(h, &g)) {
            reps.push(g);
        }
    }
    Ok(MinimizerReport {
        n,
        e: n.checked_sub(d),
        d,
        scope: Scope::AllGraphsSmall,
        argmin: reps.into_iter().map(|g| Witness::Graph { edges: g.edges() }).collect(),
        rho: best,
        // graphs above the running best are pruned unsolved, so no gap is
        // known
        runner_up_gap: None,
        gap_is_lower_bound: false,
        candidates: state.candidates,
        solved: found.len(),
    })
}

struct GraphSearch<'a> {
    n: usize,
    d: usize,
    pairs: &'a [(usize, usize)],
    visited: HashSet<u64>,
    best: f64,
    found: Vec<(u64, SpectralResult)>,
    opts: &'a SearchOptions,
    candidates: usize,
}

impl GraphSearch<'_> {
    fn visit(&mut self, mask: u64, from: usize) -> Result<(), SearchError> {
        if !self.visited.insert(mask) {
            return Ok(());
        }
        let g = mask_graph(self.n, self.pairs, mask);
        let diam = g.diameter().expect("supergraph of a spanning tree is connected");
        if diam < self.d {
            return Ok(());
        }
        let (lo, _) = collatz_wielandt(&g, 300);
        if lo > self.best + CW_SLACK {
            return Ok(());
        }
        if diam == self.d {
            self.candidates += 1;
            let poly = charpoly_det_oracle(&g)?;
            let (_, hi) = collatz_wielandt(&g, 4000);
            let r = largest_root(&poly, hi, &self.opts.solve)?;
            let v = r.value.to_f64();
            if v <= self.best + CW_SLACK {
                self.best = self.best.min(v);
                self.found.push((mask, r));
            }
        }
        for idx in from..self.pairs.len() {
            if mask & (1 << idx) == 0 {
                self.visit(mask | 1 << idx, idx + 1)?;
            }
        }
        Ok(())
    }
}

fn mask_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask & (1 << i) != 0).map(|i| pairs[i]).collect();
    Graph::from_edges(n, &edges).expect("distinct pairs")
}

/// Backtracking isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let (va, vb) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        v: usize,
        a: &Graph,
        b: &Graph,
        va: &[usize],
        vb: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || va[v] != vb[w] {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(v + 1, a, b, va, vb, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    extend(0, a, b, &va, &vb, &mut map, &mut used)
}
