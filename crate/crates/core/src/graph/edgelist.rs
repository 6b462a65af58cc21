use super::{Graph, GraphError};

/// Parses the edge-list format: a first line with `n`, then one `u v` pair
/// per line, 0-based. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Parse("empty edge list".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| GraphError::Parse(format!("bad vertex count `{header}`")))?;
    let mut graph = Graph::empty(n);
    for line in lines {
        let mut it = line.split_whitespace();
        let mut field = || -> Result<usize, GraphError> {
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line `{line}`")))
        };
        let u = field()?;
        let v = field()?;
        if it.next().is_some() {
            return Err(GraphError::Parse(format!("bad edge line `{line}`")));
        }
        graph.add_edge(u, v)?;
    }
    Ok(graph)
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.n());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
