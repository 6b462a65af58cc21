use super::Tree;

/// Center vertex or the two adjacent centers of a tree.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let path = tree.diameter_path();
    let d = path.len() - 1;
    if d.is_multiple_of(2) {
        vec![path[d / 2]]
    } else {
        vec![path[d / 2], path[d / 2 + 1]]
    }
}

/// Parenthesis encoding of `tree` rooted at `root`, with children sorted so
/// that isomorphic rooted trees give equal strings.
pub fn rooted_code(tree: &Tree, root: usize) -> String {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<String> = vec![String::new(); n];
    let mut kids: Vec<Vec<String>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut mine = std::mem::take(&mut kids[v]);
        mine.sort_unstable();
        let mut code = String::with_capacity(2 + mine.iter().map(String::len).sum::<usize>());
        code.push('(');
        for c in &mine {
            code.push_str(c);
        }
        code.push(')');
        if v == root {
            codes[v] = code;
        } else {
            kids[parent[v]].push(code);
        }
    }
    std::mem::take(&mut codes[root])
}

/// Isomorphism-invariant code: the smallest center-rooted encoding.
pub fn canonical_code(tree: &Tree) -> String {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("a tree has at least one center")
}
