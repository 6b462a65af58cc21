use std::collections::VecDeque;

use super::GraphError;

/// Simple undirected graph on vertices `0..n`.
///
/// Used directly for forests (a tree minus a vertex) and for the small
/// all-graphs sanity search; everything else goes through [`Tree`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    insert_sorted(&mut g.adj[i], j);
                    insert_sorted(&mut g.adj[j], i);
                }
            }
        }
        g
    }

    /// `G - v`, with the remaining vertices relabelled in increasing order.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Eccentricity-based diameter; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n() {
            let d = self.bfs(s);
            let m = *d.iter().max()?;
            if m == usize::MAX {
                return None;
            }
            best = best.max(m);
        }
        Some(best)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                m[u][v] = 1;
            }
        }
        m
    }

    pub fn into_tree(self) -> Result<Tree, GraphError> {
        Tree::from_graph(self)
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

/// A connected acyclic simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Tree::from_graph(Graph::from_edges(n, edges)?)
    }

    pub fn from_graph(graph: Graph) -> Result<Self, GraphError> {
        if graph.n() == 0 {
            return Err(GraphError::Empty);
        }
        if graph.edge_count() != graph.n() - 1 || !graph.is_connected() {
            return Err(GraphError::NotATree {
                n: graph.n(),
                edges: graph.edge_count(),
            });
        }
        Ok(Tree { graph })
    }

    /// The path `P_n` labelled `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n.max(1), &edges).expect("path is a tree")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_edges(leaves + 1, &edges).expect("star is a tree")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) <= 1).collect()
    }

    /// Number of vertices of each degree, indexed by degree.
    pub fn degree_census(&self) -> Vec<usize> {
        let max = (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0);
        let mut census = vec![0; max + 1];
        for v in 0..self.n() {
            census[self.degree(v)] += 1;
        }
        census
    }

    /// Exact diameter by a double breadth-first sweep.
    pub fn diameter(&self) -> usize {
        let (far, _) = self.farthest_from(0);
        self.farthest_from(far).1
    }

    /// A longest path, as a vertex sequence.
    pub fn diameter_path(&self) -> Vec<usize> {
        let (a, _) = self.farthest_from(0);
        let dist = self.graph.bfs(a);
        let b = argmax(&dist);
        self.path_between(b, a, &dist)
    }

    fn farthest_from(&self, s: usize) -> (usize, usize) {
        let dist = self.graph.bfs(s);
        let v = argmax(&dist);
        (v, dist[v])
    }

    /// Walks from `from` back to the BFS source of `dist`.
    fn path_between(&self, from: usize, _to: usize, dist: &[usize]) -> Vec<usize> {
        let mut path = vec![from];
        let mut cur = from;
        while dist[cur] > 0 {
            cur = *self
                .neighbors(cur)
                .iter()
                .find(|&&w| dist[w] + 1 == dist[cur])
                .expect("bfs parent");
            path.push(cur);
        }
        path
    }

    /// Unique path between two vertices.
    pub fn path_vertices(&self, u: usize, v: usize) -> Vec<usize> {
        let dist = self.graph.bfs(v);
        self.path_between(u, v, &dist)
    }

    /// Replaces edge `uv` by `u - w - v`; the new vertex `w` gets label `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Tree, GraphError> {
        if !self.graph.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let w = self.n();
        let mut edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| !((a, b) == (u, v) || (a, b) == (v, u)))
            .collect();
        edges.push((u, w));
        edges.push((w, v));
        Tree::from_edges(w + 1, &edges)
    }

    /// `T - v` as a forest.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.graph.remove_vertex(v)
    }

    /// Deletes a leaf, keeping the result a tree.
    pub fn remove_leaf(&self, v: usize) -> Result<Tree, GraphError> {
        if self.n() < 2 || self.degree(v) != 1 {
            return Err(GraphError::NotALeaf(v));
        }
        Tree::from_graph(self.graph.remove_vertex(v))
    }

    /// Applies a relabelling `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Tree::from_edges(self.n(), &edges).expect("relabelling preserves trees")
    }

    /// Edges lying on an internal path (a path whose end vertices have
    /// degree above 2 and whose interior vertices have degree 2).
    pub fn internal_path_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let reach_u = self.walk_to_branch(v, u);
            let reach_v = self.walk_to_branch(u, v);
            if reach_u && reach_v {
                out.push((u, v));
            }
        }
        out
    }

    /// Starting at `start` and moving away from `prev`, follows degree-2
    /// vertices; true if a vertex of degree > 2 is reached.
    fn walk_to_branch(&self, prev: usize, start: usize) -> bool {
        let (mut prev, mut cur) = (prev, start);
        loop {
            match self.degree(cur) {
                d if d > 2 => return true,
                2 => {
                    let next = self
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&w| w != prev)
                        .expect("degree two");
                    prev = cur;
                    cur = next;
                }
                _ => return false,
            }
        }
    }
}

fn argmax(dist: &[usize]) -> usize {
    let mut best = 0;
    for (i, &d) in dist.iter().enumerate() {
        if d != usize::MAX && d > dist[best] {
            best = i;
        }
    }
    best
}
