use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GraphError, Tree};

/// An open quipu `P^{m_1..m_t}_{n_1..n_t,p}`: a main path on `p` vertices
/// with a pendant path of `n_i` vertices hanging from main-path vertex `m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuipuSpec {
    pub p: usize,
    /// `(position m_i, pendant length n_i)`, strictly increasing in position.
    pub attachments: Vec<(usize, usize)>,
}

impl QuipuSpec {
    pub fn new(p: usize, attachments: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let spec = QuipuSpec { p, attachments };
        spec.validate()?;
        Ok(spec)
    }

    pub fn path(p: usize) -> Self {
        QuipuSpec {
            p,
            attachments: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.p == 0 {
            return Err(GraphError::Empty);
        }
        let mut last: Option<usize> = None;
        for &(m, len) in &self.attachments {
            if m >= self.p {
                return Err(GraphError::AttachmentOutOfRange { position: m, p: self.p });
            }
            if len == 0 {
                return Err(GraphError::EmptyPendant(m));
            }
            if let Some(prev) = last {
                if m <= prev {
                    return Err(GraphError::UnsortedAttachments(prev, m));
                }
            }
            last = Some(m);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.p + self.attachments.iter().map(|a| a.1).sum::<usize>()
    }

    /// Pendant length hanging from each main-path vertex (0 for none).
    pub fn pendant_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.p];
        for &(m, len) in &self.attachments {
            profile[m] = len;
        }
        profile
    }

    /// The same quipu read from the other end of the main path.
    pub fn reversed(&self) -> QuipuSpec {
        let mut attachments: Vec<_> = self
            .attachments
            .iter()
            .map(|&(m, len)| (self.p - 1 - m, len))
            .collect();
        attachments.reverse();
        QuipuSpec {
            p: self.p,
            attachments,
        }
    }
}

impl fmt::Display for QuipuSpec {
    /// `P:<len>@<pos>,... pendant(s) on P<p>`, or `P<p>` for a bare path.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.attachments.is_empty() {
            return write!(f, "P{}", self.p);
        }
        let parts: Vec<String> = self
            .attachments
            .iter()
            .map(|(m, len)| format!("{len}@{m}"))
            .collect();
        let noun = if parts.len() == 1 { "pendant" } else { "pendants" };
        write!(f, "P:{} {noun} on P{}", parts.join(","), self.p)
    }
}

/// Builds the quipu. Main-path vertices are `0..p` in path order; the pendant
/// path of attachment `i` takes the next `n_i` labels, nearest vertex first.
pub fn build_quipu(spec: &QuipuSpec) -> Result<Tree, GraphError> {
    spec.validate()?;
    let n = spec.vertex_count();
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..spec.p {
        edges.push((i - 1, i));
    }
    let mut next = spec.p;
    for &(m, len) in &spec.attachments {
        let mut prev = m;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(n, &edges)
}

/// Recovers an open-quipu description of `tree`, if it is one.
///
/// The main path is taken as long as possible; among equally long choices the
/// lexicographically smallest attachment list wins, so isomorphic trees get
/// the same description.
pub fn describe_quipu(tree: &Tree) -> Option<QuipuSpec> {
    let n = tree.n();
    if (0..n).any(|v| tree.degree(v) > 3) {
        return None;
    }
    if n == 1 {
        return Some(QuipuSpec::path(1));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| tree.degree(v) == 3).collect();
    let leaves = tree.leaves();
    let mut best: Option<QuipuSpec> = None;
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            let path = tree.path_vertices(a, b);
            let mut on_path = vec![false; n];
            for &v in &path {
                on_path[v] = true;
            }
            if !branch.iter().all(|&v| on_path[v]) {
                continue;
            }
            let mut attachments = Vec::new();
            for (pos, &v) in path.iter().enumerate() {
                for &w in tree.neighbors(v) {
                    if !on_path[w] {
                        attachments.push((pos, pendant_length(tree, v, w)));
                    }
                }
            }
            let spec = QuipuSpec {
                p: path.len(),
                attachments,
            };
            let rev = spec.reversed();
            let cand = if rev.attachments < spec.attachments { rev } else { spec };
            best = Some(match best {
                None => cand,
                Some(cur) => {
                    if cand.p > cur.p || (cand.p == cur.p && cand.attachments < cur.attachments) {
                        cand
                    } else {
                        cur
                    }
                }
            });
        }
    }
    best
}

fn pendant_length(tree: &Tree, from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    while let Some(&next) = tree.neighbors(cur).iter().find(|&&w| w != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}
