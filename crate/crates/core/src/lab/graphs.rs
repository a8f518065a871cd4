//! Connected graphs on few vertices, by vertex augmentation with an exact
//! canonical form.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH_VERTICES: usize = 8;

/// Adjacency of a labelled graph on at most [`MAX_GRAPH_VERTICES`] vertices
/// as upper-triangle bits, most significant first: pair `(i, j)`, `i < j`,
/// is bit `63 - (j(j-1)/2 + i)`. Earlier positions therefore dominate the
/// comparison, which lets the search prune on prefixes.
fn bit(i: usize, j: usize) -> u32 {
    (63 - (j * (j - 1) / 2 + i)) as u32
}

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Isomorphism-invariant colour classes by iterated degree refinement.
/// Colours are ranks of signatures, so equal inputs up to relabelling give
/// equal colour sequences.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> =
            sig.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        colour = next;
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Canonical form of a connected graph: the vertex count and the least
/// adjacency word over all orderings compatible with the refined colours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> bit(i, j) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, edges).expect("canonical forms encode connected graphs")
    }
}

/// Canonical form and automorphism group order.
pub fn canonical_form_with_automorphisms(g: &Graph) -> Result<(CanonicalForm, u64)> {
    let n = g.vertex_count();
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "canonical forms need at most {MAX_GRAPH_VERTICES} vertices, got {n}"
        )));
    }
    let adj = adjacency(g);
    let colour = refine(&adj);
    // positions in colour order; each position may take any vertex of its colour
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| colour[v]);
    let slot_colour: Vec<usize> = slots.iter().map(|&v| colour[v]).collect();

    struct Search<'a> {
        adj: &'a [u32],
        colour: &'a [usize],
        slot_colour: &'a [usize],
        order: Vec<usize>,
        used: u32,
        best: u64,
        ties: u64,
    }
    impl Search<'_> {
        fn go(&mut self, bits: u64) {
            let k = self.order.len();
            if k == self.slot_colour.len() {
                if bits < self.best {
                    self.best = bits;
                    self.ties = 1;
                } else if bits == self.best {
                    self.ties += 1;
                }
                return;
            }
            for v in 0..self.colour.len() {
                if self.used >> v & 1 == 1 || self.colour[v] != self.slot_colour[k] {
                    continue;
                }
                let mut b = bits;
                for (i, &w) in self.order.iter().enumerate() {
                    if self.adj[v] >> w & 1 == 1 {
                        b |= 1 << bit(i, k);
                    }
                }
                // a prefix already above the best cannot improve
                let mask = if k == 0 { 0 } else { u64::MAX << bit(k - 1, k) };
                if b & mask > self.best & mask {
                    continue;
                }
                self.order.push(v);
                self.used |= 1 << v;
                self.go(b);
                self.used &= !(1 << v);
                self.order.pop();
            }
        }
    }
    let mut s = Search {
        adj: &adj,
        colour: &colour,
        slot_colour: &slot_colour,
        order: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
        ties: 0,
    };
    s.go(0);
    Ok((CanonicalForm { n, bits: s.best }, s.ties))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_form_with_automorphisms(g)?.0)
}

/// Canonical forms of all connected graphs with `1..=n_max` vertices, one
/// sorted level per vertex count.
pub fn connected_forms_up_to(n_max: usize) -> Result<Vec<Vec<CanonicalForm>>> {
    if !(1..=MAX_GRAPH_VERTICES).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "graph size must be in 1..={MAX_GRAPH_VERTICES}, got {n_max}"
        )));
    }
    let mut levels = vec![vec![CanonicalForm { n: 1, bits: 0 }]];
    while levels.len() < n_max {
        let mut next = BTreeSet::new();
        for form in levels.last().expect("non-empty") {
            let g = form.to_graph();
            let n = g.vertex_count();
            // every connected graph has a vertex whose removal keeps it connected
            for nbrs in 1u32..1 << n {
                let edges = g
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..n).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, n)));
                let h = Graph::new(n + 1, edges)?;
                next.insert(canonical_form(&h)?);
            }
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// Every connected graph on `n` vertices exactly once, in canonical order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_forms_up_to(n)?
        .pop()
        .expect("n >= 1")
        .into_iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// All connected graphs with `1..=n_max` vertices.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    Ok(connected_forms_up_to(n_max)?
        .into_iter()
        .flatten()
        .map(CanonicalForm::to_graph)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;

    /// Labelled connected graphs on `n` vertices, by the standard recurrence.
    fn labelled_connected(n_max: usize) -> Vec<u128> {
        let binom = |n: usize, k: usize| -> u128 {
            (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
        };
        let all = |n: usize| -> u128 { 1u128 << (n * n.saturating_sub(1) / 2) };
        let mut c = vec![0u128; n_max + 1];
        for n in 1..=n_max {
            let disconnected: u128 = (1..n)
                .map(|k| binom(n - 1, k - 1) * c[k] * all(n - k))
                .sum();
            c[n] = all(n) - disconnected;
        }
        c
    }

    #[test]
    fn counts_and_orbit_sums() {
        let levels = connected_forms_up_to(7).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        let labelled = labelled_connected(7);
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        for (i, level) in levels.iter().enumerate() {
            let n = i + 1;
            let orbits: u128 = level
                .iter()
                .map(|f| {
                    fact(n) / canonical_form_with_automorphisms(&f.to_graph()).unwrap().1 as u128
                })
                .sum();
            assert_eq!(orbits, labelled[n], "n = {n}");
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        let g = petersen();
        assert!(canonical_form(&g).is_err());
        for g in [cycle(7), complete(5), spider(&[1, 2, 3]), path(6)] {
            let n = g.vertex_count();
            let perm: Vec<usize> = (0..n).map(|v| (v * 3 + 1) % n).collect();
            assert_eq!(
                canonical_form(&g).unwrap(),
                canonical_form(&g.relabel(&perm)).unwrap()
            );
        }
        assert_ne!(
            canonical_form(&cycle(6)).unwrap(),
            canonical_form(&path(5)).unwrap()
        );
        assert_eq!(canonical_form_with_automorphisms(&cycle(6)).unwrap().1, 12);
        assert_eq!(
            canonical_form_with_automorphisms(&complete(5)).unwrap().1,
            120
        );
    }
}
