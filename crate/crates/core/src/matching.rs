//! Fixed-size matchings: enumeration, extension and maximality queries.

use crate::edgeset::EdgeSet;
use crate::graph::Graph;

/// A set of pairwise non-adjacent edges of one graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(EdgeSet);

impl Matching {
    pub const EMPTY: Matching = Matching(EdgeSet::EMPTY);

    /// Checks that `edges` is a matching of `g`.
    pub fn new(g: &Graph, edges: EdgeSet) -> Option<Matching> {
        is_matching(g, edges).then_some(Matching(edges))
    }

    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Option<Matching> {
        let mut set = EdgeSet::EMPTY;
        for &(u, v) in pairs {
            set.insert(g.edge_index(u, v)?);
        }
        Matching::new(g, set)
    }

    pub(crate) fn unchecked(edges: EdgeSet) -> Matching {
        Matching(edges)
    }

    pub fn edges(self) -> EdgeSet {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.len()
    }

    pub fn contains(self, e: usize) -> bool {
        self.0.contains(e)
    }
}

impl std::fmt::Debug for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matching{:?}", self.0)
    }
}

pub fn is_matching(g: &Graph, edges: EdgeSet) -> bool {
    if !edges.is_subset(g.all_edges()) {
        return false;
    }
    edges.iter().all(|e| g.conflicts(e).is_disjoint(edges))
}

/// Edges that could still be added to `m` (neither in it nor adjacent to it).
pub fn free_edges(g: &Graph, m: EdgeSet) -> EdgeSet {
    let blocked = m.iter().fold(m, |acc, e| acc.union(g.conflicts(e)));
    g.all_edges().difference(blocked)
}

/// Lazy depth-first enumeration of all matchings of one size, in
/// lexicographic order of their sorted edge indices.
pub struct Matchings<'g> {
    g: &'g Graph,
    size: usize,
    // (chosen edges, edges still available above the last chosen one)
    stack: Vec<(EdgeSet, EdgeSet)>,
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        loop {
            let (chosen, avail) = self.stack.last_mut()?;
            let chosen = *chosen;
            if chosen.len() == self.size {
                self.stack.pop();
                return Some(Matching(chosen));
            }
            if avail.len() < self.size - chosen.len() {
                self.stack.pop();
                continue;
            }
            let e = avail.first().expect("non-empty");
            avail.remove(e);
            let rest = avail.difference(self.g.conflicts(e));
            self.stack.push((chosen.with(e), rest));
        }
    }
}

pub fn enumerate_matchings(g: &Graph, size: usize) -> Matchings<'_> {
    Matchings {
        g,
        size,
        stack: vec![(EdgeSet::EMPTY, g.all_edges())],
    }
}

/// Matchings of `size` edges drawn from `within` only.
pub fn enumerate_matchings_within(g: &Graph, within: EdgeSet, size: usize) -> Matchings<'_> {
    Matchings {
        g,
        size,
        stack: vec![(EdgeSet::EMPTY, within.intersection(g.all_edges()))],
    }
}

/// The lexicographically first `size`-matching containing `m`, if any.
pub fn extend_matching(g: &Graph, m: Matching, size: usize) -> Option<Matching> {
    if m.size() > size {
        return None;
    }
    let need = size - m.size();
    enumerate_matchings_within(g, free_edges(g, m.edges()), need)
        .next()
        .map(|ext| Matching(ext.edges().union(m.edges())))
}

/// Whether some `size`-matching contains `m`; `m` itself counts when `|m| = size`.
pub fn extends_to(g: &Graph, m: Matching, size: usize) -> bool {
    extend_matching(g, m, size).is_some()
}

/// First edge (by index) lying in no `size`-matching, if any.
pub fn uncoverable_edge(g: &Graph, size: usize) -> Option<usize> {
    (0..g.edge_count()).find(|&e| !extends_to(g, Matching(EdgeSet::single(e)), size))
}

pub fn is_m_coverable(g: &Graph, size: usize) -> bool {
    uncoverable_edge(g, size).is_none()
}

pub fn is_maximal(g: &Graph, m: Matching) -> bool {
    free_edges(g, m.edges()).is_empty()
}

/// Minimum cardinality of a maximal matching (a minimum edge dominating set
/// that is also a matching).
pub fn min_maximal_matching_size(g: &Graph) -> usize {
    fn go(g: &Graph, chosen: EdgeSet, best: &mut usize) {
        let free = free_edges(g, chosen);
        let Some(f) = free.first() else {
            *best = (*best).min(chosen.len());
            return;
        };
        if chosen.len() + 1 >= *best {
            return;
        }
        // some edge of a maximal extension must touch f
        let options = g.conflicts(f).with(f).intersection(free);
        for e in options {
            go(g, chosen.with(e), best);
        }
    }
    let mut best = usize::MAX;
    go(g, EdgeSet::EMPTY, &mut best);
    best
}

/// Size of a maximum matching inside `within`.
pub fn max_matching_size_within(g: &Graph, within: EdgeSet) -> usize {
    fn go(g: &Graph, avail: EdgeSet, size: usize, best: &mut usize) {
        let Some(e) = avail.first() else {
            *best = (*best).max(size);
            return;
        };
        if size + avail.len() <= *best {
            return;
        }
        go(
            g,
            avail
                .difference(g.conflicts(e))
                .difference(EdgeSet::single(e)),
            size + 1,
            best,
        );
        go(g, avail.difference(EdgeSet::single(e)), size, best);
    }
    let mut best = 0;
    go(g, within.intersection(g.all_edges()), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::graph::{build_caterpillar, CaterpillarSpec};

    fn cat(s: &str) -> Graph {
        build_caterpillar(&s.parse::<CaterpillarSpec>().unwrap()).unwrap()
    }

    /// Naive oracle: every `size`-subset that is pairwise non-adjacent.
    fn naive(g: &Graph, size: usize) -> Vec<EdgeSet> {
        let m = g.edge_count();
        let mut out: Vec<EdgeSet> = (0u64..1 << m)
            .filter(|s| s.count_ones() as usize == size)
            .map(EdgeSet)
            .filter(|&s| {
                s.iter().all(|a| {
                    s.iter().all(|b| {
                        let (p, q) = g.edge(a);
                        let (r, t) = g.edge(b);
                        a == b || (p != r && p != t && q != r && q != t)
                    })
                })
            })
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_matchings(&complete(4), 2).count(), 3);
        assert_eq!(enumerate_matchings(&path(8), 4).count(), 5);
        assert_eq!(enumerate_matchings(&cat("CAT(0,1,1,1,0)"), 4).count(), 9);
        assert_eq!(
            enumerate_matchings(&path(3), 0).collect::<Vec<_>>(),
            vec![Matching::EMPTY]
        );
        assert_eq!(enumerate_matchings(&path(3), 4).count(), 0);
    }

    #[test]
    fn caterpillar_one_spine_edge_matchings() {
        let g = cat("CAT(0,1,1,1,0)");
        let spine: EdgeSet = (0..4).map(|i| g.edge_index(i, i + 1).unwrap()).collect();
        let with_spine: Vec<_> = enumerate_matchings(&g, 4)
            .filter(|m| !m.edges().is_disjoint(spine))
            .collect();
        assert_eq!(with_spine.len(), 4);
        assert!(with_spine
            .iter()
            .all(|m| m.edges().intersection(spine).len() == 1));
    }

    #[test]
    fn matches_naive_filter_and_is_ordered() {
        for g in [
            path(8),
            cycle(7),
            petersen(),
            cat("CAT(0,1,1,1,0)"),
            spider(&[2, 3, 3]),
            complete(5),
        ] {
            for size in 0..=5 {
                let got: Vec<EdgeSet> = enumerate_matchings(&g, size).map(|m| m.edges()).collect();
                assert_eq!(got, naive(&g, size), "{g:?} size {size}");
                let again: Vec<EdgeSet> =
                    enumerate_matchings(&g, size).map(|m| m.edges()).collect();
                assert_eq!(got, again);
            }
        }
    }

    #[test]
    fn extension_examples() {
        let g = cat("CAT(0,1,1,1,0)");
        let spine = |i: usize| g.edge_index(i, i + 1).unwrap();
        let pair = Matching::new(&g, [spine(0), spine(2)].into_iter().collect()).unwrap();
        assert!(!extends_to(&g, pair, 4));
        let one = Matching::new(&g, EdgeSet::single(spine(0))).unwrap();
        assert!(extends_to(&g, one, 4));
        let full = enumerate_matchings(&g, 4).next().unwrap();
        assert!(extends_to(&g, full, 4));
        assert!(!extends_to(&g, full, 3));
        assert_eq!(extend_matching(&g, full, 4), Some(full));
    }

    #[test]
    fn coverability() {
        assert!(!is_m_coverable(&complete(3), 2));
        assert!(!is_m_coverable(&star(4), 2));
        assert!(is_m_coverable(&cat("CAT(0,1,1,1,0)"), 4));
        assert!(is_m_coverable(&path(8), 4));
        assert!(is_m_coverable(&petersen(), 5));
    }

    #[test]
    fn minimum_maximal_matchings() {
        assert_eq!(min_maximal_matching_size(&path(3)), 1);
        assert_eq!(min_maximal_matching_size(&path(8)), 3);
        assert_eq!(min_maximal_matching_size(&cat("CAT(0,1,1,1,0)")), 3);
        assert_eq!(min_maximal_matching_size(&Graph::new(1, []).unwrap()), 0);
    }

    #[test]
    fn minimum_maximal_matches_exhaustive_oracle() {
        for g in [
            path(8),
            cat("CAT(0,1,1,1,0)"),
            petersen(),
            spider(&[3, 3, 3]),
            complete(5),
        ] {
            let oracle = (0..=g.edge_count())
                .find(|&k| {
                    naive(&g, k)
                        .into_iter()
                        .any(|s| free_edges(&g, s).is_empty())
                })
                .unwrap();
            assert_eq!(min_maximal_matching_size(&g), oracle);
        }
    }

    #[test]
    fn maximum_matching() {
        assert_eq!(
            max_matching_size_within(&petersen(), petersen().all_edges()),
            5
        );
        assert_eq!(max_matching_size_within(&path(8), path(8).all_edges()), 4);
        assert_eq!(max_matching_size_within(&star(5), star(5).all_edges()), 1);
    }
}
