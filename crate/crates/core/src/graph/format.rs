//! Text formats: graph6, edge lists and caterpillar notation.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{build_caterpillar, CaterpillarSpec, Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    CatNotation,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "cat" | "cat-notation" => Ok(GraphFormat::CatNotation),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

pub fn load_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Graph6 => Graph::from_graph6(text),
        GraphFormat::EdgeList => Graph::from_edge_list(text),
        GraphFormat::CatNotation => build_caterpillar(&text.parse::<CaterpillarSpec>()?),
    }
}

fn g6_err(location: impl Into<String>, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        format: "graph6",
        location: location.into(),
        message: message.into(),
    }
}

impl Graph {
    /// Standard graph6 encoding (single-byte size form).
    pub fn to_graph6(&self) -> String {
        let n = self.vertex_count();
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(self.edge_index(i, j).is_some());
            }
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for k in 0..6 {
                v <<= 1;
                if chunk.get(k).copied().unwrap_or(false) {
                    v |= 1;
                }
            }
            out.push((v + 63) as char);
        }
        out
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        let Some((&first, rest)) = bytes.split_first() else {
            return Err(g6_err("byte 0", "empty input"));
        };
        if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
            return Err(g6_err(
                format!("byte {pos}"),
                format!("character {:?} outside '?'..'~'", bytes[pos] as char),
            ));
        }
        if first == 126 {
            return Err(g6_err(
                "byte 0",
                format!("multi-byte size form unsupported (limit {MAX_VERTICES} vertices)"),
            ));
        }
        let n = (first - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let need = nbits.div_ceil(6);
        if rest.len() != need {
            return Err(g6_err(
                format!("byte {}", 1 + rest.len().min(need)),
                format!(
                    "expected {need} data bytes for {n} vertices, found {}",
                    rest.len()
                ),
            ));
        }
        let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        if (nbits..need * 6).any(bit) {
            return Err(g6_err(format!("byte {}", need), "non-zero padding bits"));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, edges)
    }

    /// One `u v` line per edge, in canonical edge order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses `u v` lines with 0-based vertices; `#` starts a comment.
    /// The vertex count is one more than the largest index seen; an input
    /// without edges is the single-vertex graph.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GraphError::Parse {
                format: "edge-list",
                location: format!("line {}", lineno + 1),
                message,
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(err(format!(
                    "expected two vertex indices, found {}",
                    toks.len()
                )));
            }
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("'{t}' is not a vertex index")))
            };
            edges.push((parse(toks[0])?, parse(toks[1])?));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
        Graph::new(n, edges)
    }

    /// `CAT(...)` notation when the graph is a caterpillar with a non-empty spine.
    pub fn to_cat_notation(&self) -> Option<String> {
        CaterpillarSpec::from_graph(self).map(|s| s.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::super::construct::*;
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // reference encodings from the format description
        assert_eq!(complete(3).to_graph6(), "Bw");
        assert_eq!(path(2).to_graph6(), "Bg");
        assert_eq!(Graph::new(1, []).unwrap().to_graph6(), "@");
        assert_eq!(complete(4).to_graph6(), "C~");
        assert_eq!(petersen().to_graph6().len(), 9);
        let tri = Graph::from_graph6("Bw").unwrap();
        assert_eq!(tri.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let p = Graph::from_graph6(">>graph6<<Bg\n").unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            Graph::from_graph6(""),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_graph6("Cww"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_graph6("B\n"),
            Err(GraphError::Parse { .. })
        ));
        // non-zero padding
        assert!(matches!(
            Graph::from_graph6("Bx"),
            Err(GraphError::Parse { .. })
        ));
        // two isolated vertices
        assert_eq!(Graph::from_graph6("A?"), Err(GraphError::Disconnected(1)));
    }

    #[test]
    fn edge_list_parsing() {
        let g = load_graph("0 1\n1 2", GraphFormat::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        let g = Graph::from_edge_list("# triangle\n0 1\n\n1 2 # middle\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        match Graph::from_edge_list("0 1\n1 x\n") {
            Err(GraphError::Parse { location, .. }) => assert_eq!(location, "line 2"),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            Graph::from_edge_list("0 1\n1 1").unwrap_err(),
            GraphError::Loop(1)
        );
        assert_eq!(
            Graph::from_edge_list("0 1\n2 3").unwrap_err(),
            GraphError::Disconnected(2)
        );
    }

    #[test]
    fn cat_notation_loading() {
        let g = load_graph("CAT(0,1,1,1,0)", GraphFormat::CatNotation).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.max_degree()),
            (10, 9, 3)
        );
        let g = load_graph("CAT(1,2,1,0,3,0)", GraphFormat::CatNotation).unwrap();
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.to_cat_notation().as_deref(), Some("CAT(1,2,1,0,3,0)"));
        assert_eq!(path(1).to_cat_notation(), None);
    }
}
