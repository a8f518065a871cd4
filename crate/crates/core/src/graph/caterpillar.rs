use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// `CAT(d_1, ..., d_t)`: spine `x_1 .. x_t` where `x_i` has degree `d_i + 2`.
///
/// End vertices of the spine therefore carry `d + 1` leaves (they have only
/// one spine neighbour), internal ones carry `d` leaves. A single spine vertex
/// carries `d + 2` leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    d: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(d: Vec<usize>) -> Result<CaterpillarSpec, GraphError> {
        if d.is_empty() {
            return Err(GraphError::InvalidCaterpillar(
                "spine must have at least one vertex".into(),
            ));
        }
        Ok(CaterpillarSpec { d })
    }

    pub fn spine(&self) -> &[usize] {
        &self.d
    }

    pub fn spine_len(&self) -> usize {
        self.d.len()
    }

    /// Leaves hanging off spine vertex `i` (0-based).
    pub fn leaves_at(&self, i: usize) -> usize {
        let t = self.d.len();
        let spine_neighbours = match t {
            1 => 0,
            _ if i == 0 || i == t - 1 => 1,
            _ => 2,
        };
        self.d[i] + 2 - spine_neighbours
    }

    pub fn vertex_count(&self) -> usize {
        self.d.len() + (0..self.d.len()).map(|i| self.leaves_at(i)).sum::<usize>()
    }

    /// Reads the spine of `g` if it is a caterpillar with at least one vertex
    /// of degree two or more.
    ///
    /// The spine is oriented so that the end with the smaller vertex index
    /// comes first, which makes `from_graph(build_caterpillar(spec))` return `spec`.
    pub fn from_graph(g: &Graph) -> Option<CaterpillarSpec> {
        if !g.is_caterpillar() {
            return None;
        }
        let inner: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.degree(v) >= 2)
            .collect();
        if inner.is_empty() {
            return None;
        }
        let inner_deg = |v: usize| g.neighbors(v).filter(|&w| g.degree(w) >= 2).count();
        let mut ends: Vec<usize> = inner
            .iter()
            .copied()
            .filter(|&v| inner_deg(v) <= 1)
            .collect();
        ends.sort_unstable();
        let walk = |start: usize| {
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = g.neighbors(cur).find(|&w| w != prev && g.degree(w) >= 2);
                match next {
                    Some(w) => {
                        order.push(w);
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            order
        };
        let spine = walk(ends[0]);
        let d = spine.iter().map(|&v| g.degree(v) - 2).collect();
        Some(CaterpillarSpec { d })
    }
}

impl fmt::Display for CaterpillarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CAT(")?;
        for (i, d) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for CaterpillarSpec {
    type Err = GraphError;

    /// Accepts `CAT(d1,...,dt)`, or the bare list `d1,...,dt`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let err = |message: String| GraphError::Parse {
            format: "cat-notation",
            location: format!("{s:?}"),
            message,
        };
        let s = s.trim();
        let body = match s.strip_prefix("CAT(") {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| err("missing closing ')'".into()))?,
            None if s.starts_with("CAT") => return Err(err("expected 'CAT('".into())),
            None => s,
        };
        let d = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| err(format!("'{tok}' is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CaterpillarSpec::new(d)
    }
}

/// Spine vertices `0..t` first, then the leaves of `x_1`, of `x_2`, and so on.
pub fn build_caterpillar(spec: &CaterpillarSpec) -> Result<Graph, GraphError> {
    let t = spec.spine_len();
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut next = t;
    for i in 0..t {
        for _ in 0..spec.leaves_at(i) {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, edges)
}
