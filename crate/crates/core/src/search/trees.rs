use crate::graph::Tree;

use super::SearchError;

/// Default largest order for exhaustive tree generation.
pub const DEFAULT_TREE_CAP: usize = 18;

/// Generator of free trees, one per isomorphism class, by level sequences
/// in the Wright–Richmond–Odlyzko–McKay order. No two outputs are
/// isomorphic, so no deduplication pass is needed.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single: bool,
}

impl FreeTrees {
    pub fn new(order: usize) -> Self {
        match order {
            0 => FreeTrees {
                layout: None,
                single: false,
            },
            1 => FreeTrees {
                layout: None,
                single: true,
            },
            _ => {
                let mut layout: Vec<usize> = (0..=order / 2).collect();
                layout.extend(1..order.div_ceil(2));
                FreeTrees {
                    layout: Some(layout),
                    single: false,
                }
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single {
            self.single = false;
            return Some(Tree::path(1));
        }
        let layout = self.layout.take()?;
        let valid = next_tree(layout)?;
        let tree = layout_to_tree(&valid);
        self.layout = next_rooted_tree(&valid, None);
        Some(tree)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    let shift = p - q;
    for i in p..result.len() {
        result[i] = result[i - shift];
    }
    Some(result)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_found = false;
    let mut m = layout.len();
    for (i, &v) in layout.iter().enumerate() {
        if v == 1 {
            if one_found {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    let left: Vec<usize> = layout[1..m].iter().map(|v| v - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (offset, v) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + offset] = v;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequences describe trees")
}

/// All free trees on `n` vertices.
pub fn free_trees(n: usize, cap: usize) -> Result<FreeTrees, SearchError> {
    if n > cap {
        return Err(SearchError::OverCap { n, cap });
    }
    Ok(FreeTrees::new(n))
}

/// One representative per isomorphism class of trees on `n` vertices with
/// diameter `d`.
pub fn enumerate_trees(n: usize, d: usize, cap: usize) -> Result<Vec<Tree>, SearchError> {
    Ok(free_trees(n, cap)?.filter(|t| t.diameter() == d).collect())
}
