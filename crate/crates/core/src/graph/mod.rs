//! Simple connected graphs with canonically indexed edges.
//!
//! Every graph in this crate is immutable after construction. Edges are stored
//! as `(u, v)` pairs with `u < v`, sorted lexicographically, so an edge index
//! means the same thing on every run and every certificate can refer to edges
//! by index alone.

mod caterpillar;
pub mod construct;
mod format;
mod tree_code;

use std::collections::VecDeque;

use thiserror::Error;

use crate::edgeset::{EdgeSet, MAX_EDGES};

pub use caterpillar::{build_caterpillar, CaterpillarSpec};
pub use format::{load_graph, GraphFormat};
pub use tree_code::{canonical_tree_code, tree_from_code};

/// Largest vertex count accepted (the single-byte graph6 length form).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{format} parse error at {location}: {message}")]
    Parse {
        format: &'static str,
        location: String,
        message: String,
    },
    #[error("graph has no vertices")]
    Empty,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("{0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{0} edges exceeds the limit of {MAX_EDGES}")]
    TooManyEdges(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid caterpillar: {0}")]
    InvalidCaterpillar(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<EdgeSet>,
    conflict: Vec<EdgeSet>,
}

impl Graph {
    /// Builds a validated graph. Edge endpoints may be given in any order;
    /// the stored edge list is normalized and sorted.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges(list.len()));
        }

        let mut adjacency = vec![Vec::new(); n];
        let mut incident = vec![EdgeSet::EMPTY; n];
        for (i, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push(i);
            adjacency[v].push(i);
            incident[u].insert(i);
            incident[v].insert(i);
        }
        let conflict = list
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                incident[u]
                    .union(incident[v])
                    .difference(EdgeSet::single(i))
            })
            .collect();
        let g = Graph {
            n,
            edges: list,
            adjacency,
            incident,
            conflict,
        };
        if let Some(v) = g.first_unreachable() {
            return Err(GraphError::Disconnected(v));
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let dist = self.distances_from(0);
        dist.iter().position(|d| d.is_none())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Edge indices incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn incident_set(&self, v: usize) -> EdgeSet {
        self.incident[v]
    }

    /// Edges sharing an endpoint with `e` (excluding `e`).
    pub fn conflicts(&self, e: usize) -> EdgeSet {
        self.conflict[e]
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    /// Two-colouring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        side[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for w in self.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    _ => {}
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS distances (in edges) from `src`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for e in &self.adjacency[v] {
                let (a, b) = self.edges[*e];
                let w = if a == v { b } else { a };
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> usize {
        (0..self.n)
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// True iff the graph is a tree whose non-leaf vertices induce a path
    /// (possibly empty or a single vertex).
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let inner: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 2).collect();
        // The inner vertices of a tree induce a subtree; it is a path iff no
        // inner vertex has more than two inner neighbours.
        inner
            .iter()
            .all(|&v| self.neighbors(v).filter(|&w| self.degree(w) >= 2).count() <= 2)
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertex_count: self.n,
            max_degree: self.max_degree(),
            edge_count: self.edge_count(),
            diameter: self.diameter(),
            is_tree: self.is_tree(),
            is_caterpillar: self.is_caterpillar(),
        }
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves validity")
    }

    /// Adds a new vertex `n` joined to `v`.
    pub fn with_leaf(&self, v: usize) -> Result<Graph, GraphError> {
        Graph::new(self.n + 1, self.edges.iter().copied().chain([(v, self.n)]))
    }

    /// Removes edge `e`, keeping the vertex set; fails if the result is disconnected.
    pub fn without_edge(&self, e: usize) -> Result<Graph, GraphError> {
        Graph::new(
            self.n,
            self.edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != e)
                .map(|(_, &p)| p),
        )
    }

    /// Edge-index set as sorted endpoint pairs.
    pub fn edge_pairs(&self, set: EdgeSet) -> Vec<(usize, usize)> {
        set.iter().map(|e| self.edges[e]).collect()
    }

    /// Vertices touched by `set`.
    pub fn vertices_of(&self, set: EdgeSet) -> Vec<usize> {
        let mut vs: Vec<usize> = set
            .iter()
            .flat_map(|e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub max_degree: usize,
    pub edge_count: usize,
    /// Counted in edges.
    pub diameter: usize,
    pub is_tree: bool,
    pub is_caterpillar: bool,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    g.stats()
}
