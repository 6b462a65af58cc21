use std::collections::HashMap;

use crate::graph::{Graph, Tree};

use super::{CharpolyError, IntPolynomial};

/// Rooted subtrees interned by the sorted multiset of their children's ids,
/// which is the AHU canonical form. Polynomials are stored per id.
#[derive(Default)]
pub struct CharpolyMemo {
    ids: HashMap<Vec<u32>, u32>,
    /// `(φ(T_v), φ(T_v - v))` for each interned rooted subtree.
    polys: Vec<(IntPolynomial, IntPolynomial)>,
}

impl CharpolyMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of distinct rooted subtrees seen so far.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn charpoly(&mut self, tree: &Tree) -> IntPolynomial {
        let id = self.root_at(tree, 0);
        self.polys[id as usize].0.clone()
    }

    /// `(φ_T, φ_{T-v})` with `T` rooted at `v`.
    pub fn rooted(&mut self, tree: &Tree, v: usize) -> (IntPolynomial, IntPolynomial) {
        let id = self.root_at(tree, v);
        self.polys[id as usize].clone()
    }

    fn root_at(&mut self, tree: &Tree, root: usize) -> u32 {
        let n = tree.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        parent[root] = root;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in tree.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut child_ids: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut root_id = 0;
        for &v in order.iter().rev() {
            let mut kids = std::mem::take(&mut child_ids[v]);
            kids.sort_unstable();
            let id = self.intern(kids);
            if v == root {
                root_id = id;
            } else {
                child_ids[parent[v]].push(id);
            }
        }
        root_id
    }

    fn intern(&mut self, kids: Vec<u32>) -> u32 {
        if let Some(&id) = self.ids.get(&kids) {
            return id;
        }
        let pair = self.combine(&kids);
        let id = self.polys.len() as u32;
        self.polys.push(pair);
        self.ids.insert(kids, id);
        id
    }

    /// Deleting the root leaves the children's subtrees, and expanding the
    /// cut edges at the root gives
    /// `φ(T_v) = λ Π φ(T_c) - Σ_c φ(T_c - c) Π_{c' ≠ c} φ(T_c')`.
    fn combine(&self, kids: &[u32]) -> (IntPolynomial, IntPolynomial) {
        let m = kids.len();
        let f = |i: usize| &self.polys[kids[i] as usize].0;
        let g = |i: usize| &self.polys[kids[i] as usize].1;
        // prefix[i] = Π_{j<i} f(j), suffix[i] = Π_{j>=i} f(j)
        let mut prefix = Vec::with_capacity(m + 1);
        prefix.push(IntPolynomial::one());
        for i in 0..m {
            let next = prefix[i].mul(f(i));
            prefix.push(next);
        }
        let mut suffix = vec![IntPolynomial::one(); m + 1];
        for i in (0..m).rev() {
            suffix[i] = suffix[i + 1].mul(f(i));
        }
        let without_root = prefix[m].clone();
        let mut phi = without_root.shift();
        for i in 0..m {
            let others = prefix[i].mul(&suffix[i + 1]);
            phi = phi.sub(&g(i).mul(&others));
        }
        (phi, without_root)
    }
}

/// Exact characteristic polynomial of a tree.
pub fn charpoly_tree(tree: &Tree) -> IntPolynomial {
    CharpolyMemo::new().charpoly(tree)
}

/// Characteristic polynomial of a forest: the product over its components.
pub fn charpoly_forest(graph: &Graph) -> Result<IntPolynomial, CharpolyError> {
    if !graph.is_forest() {
        return Err(CharpolyError::Cyclic);
    }
    let mut memo = CharpolyMemo::new();
    let mut out = IntPolynomial::one();
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let tree = Tree::from_graph(sub).expect("forest components are trees");
        out = out.mul(&memo.charpoly(&tree));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        assert_eq!(charpoly_tree(&Tree::path(1)), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(charpoly_tree(&Tree::path(2)), IntPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(charpoly_tree(&Tree::path(3)), IntPolynomial::from_i64s(&[0, -2, 0, 1]));
        assert_eq!(
            charpoly_tree(&Tree::star(3)),
            IntPolynomial::from_i64s(&[0, 0, -3, 0, 1])
        );
        assert_eq!(
            charpoly_tree(&Tree::path(5)),
            IntPolynomial::from_i64s(&[0, 3, 0, -4, 0, 1])
        );
    }

    #[test]
    fn root_choice_does_not_matter() {
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (2, 6)]).unwrap();
        let mut memo = CharpolyMemo::new();
        let base = memo.rooted(&t, 0).0;
        for v in 1..7 {
            assert_eq!(memo.rooted(&t, v).0, base);
        }
    }

    #[test]
    fn memo_shares_repeated_limbs() {
        let star = Tree::star(30);
        let mut memo = CharpolyMemo::new();
        let phi = memo.charpoly(&star);
        assert!(memo.len() <= 4);
        assert_eq!(phi.coeff(29), -30);
    }

    #[test]
    fn forest_product() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        // (λ^2 - 1)^2 λ
        let expected = IntPolynomial::from_i64s(&[0, 1, 0, -2, 0, 1]);
        assert_eq!(charpoly_forest(&g).unwrap(), expected);
        let cyc = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(charpoly_forest(&cyc), Err(CharpolyError::Cyclic));
    }
}
