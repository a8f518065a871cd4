//! Edge colourings: exact chromatic index, equalized colourings and the
//! alternating-path exchange that turns a size-budgeted family of matchings
//! into a uniform `[m]`-cover.

use crate::cover::CoverCertificate;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{is_matching, Matching};

/// A list of matchings together with the edges they cover. Classes may share
/// edges (a multicolouring); [`ColorClasses::is_proper`] tells whether they
/// partition the covered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClasses {
    classes: Vec<Matching>,
    covered: EdgeSet,
}

impl ColorClasses {
    pub fn new(g: &Graph, classes: Vec<EdgeSet>) -> Result<ColorClasses> {
        let classes = classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                Matching::new(g, c)
                    .ok_or_else(|| Error::Precondition(format!("class {i} is not a matching")))
            })
            .collect::<Result<Vec<_>>>()?;
        let covered = classes
            .iter()
            .fold(EdgeSet::EMPTY, |acc, c| acc.union(c.edges()));
        Ok(ColorClasses { classes, covered })
    }

    pub fn classes(&self) -> &[Matching] {
        &self.classes
    }

    pub fn covered(&self) -> EdgeSet {
        self.covered
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    /// Every covered edge lies in exactly one class.
    pub fn is_proper(&self) -> bool {
        self.classes.iter().map(|c| c.size()).sum::<usize>() == self.covered.len()
    }
}

/// Exact chromatic index. Bipartite graphs (trees in particular) get `Δ`
/// directly; everything else is decided by search.
pub fn chromatic_index(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    if g.is_bipartite() {
        return g.max_degree();
    }
    let delta = g.max_degree();
    if colour_with(g, delta).is_some() {
        delta
    } else {
        delta + 1
    }
}

/// A proper edge colouring with exactly `chromatic_index(g)` classes.
pub fn proper_edge_coloring(g: &Graph) -> Vec<EdgeSet> {
    if g.edge_count() == 0 {
        return Vec::new();
    }
    if g.is_bipartite() {
        return kempe_bipartite(g);
    }
    let delta = g.max_degree();
    colour_with(g, delta)
        .or_else(|| colour_with(g, delta + 1))
        .expect("Vizing: Δ + 1 colours always suffice")
}

/// König colouring with `Δ` colours: colour edges one by one, flipping an
/// alternating two-coloured path when the endpoints miss different colours.
fn kempe_bipartite(g: &Graph) -> Vec<EdgeSet> {
    let k = g.max_degree();
    let n = g.vertex_count();
    // at[v * k + c] = edge of colour c at v
    let mut at: Vec<Option<usize>> = vec![None; n * k];
    let mut colour: Vec<Option<usize>> = vec![None; g.edge_count()];
    let free = |at: &[Option<usize>], v: usize| {
        (0..k)
            .find(|&c| at[v * k + c].is_none())
            .expect("degree ≤ Δ")
    };

    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let a = free(&at, u);
        if at[v * k + a].is_some() {
            let b = free(&at, v);
            // walk the a/b path from v and swap its colours
            let mut path = Vec::new();
            let (mut x, mut c) = (v, a);
            while let Some(f) = at[x * k + c] {
                path.push(f);
                let (p, q) = g.edge(f);
                x = if p == x { q } else { p };
                c = if c == a { b } else { a };
            }
            for &f in &path {
                let (p, q) = g.edge(f);
                let old = colour[f].unwrap();
                at[p * k + old] = None;
                at[q * k + old] = None;
            }
            for &f in &path {
                let (p, q) = g.edge(f);
                let new = if colour[f] == Some(a) { b } else { a };
                colour[f] = Some(new);
                at[p * k + new] = Some(f);
                at[q * k + new] = Some(f);
            }
            debug_assert!(
                at[u * k + a].is_none(),
                "alternating path reached u: graph not bipartite"
            );
        }
        colour[e] = Some(a);
        at[u * k + a] = Some(e);
        at[v * k + a] = Some(e);
    }
    classes_from(colour.into_iter().map(Option::unwrap), k)
}

fn classes_from(colour: impl Iterator<Item = usize>, k: usize) -> Vec<EdgeSet> {
    let mut classes = vec![EdgeSet::EMPTY; k];
    for (e, c) in colour.enumerate() {
        classes[c].insert(e);
    }
    classes
}

/// Backtracking proper colouring with exactly `k` colours, if one exists.
fn colour_with(g: &Graph, k: usize) -> Option<Vec<EdgeSet>> {
    // edges ordered by BFS from a maximum-degree vertex so that constrained
    // edges come early
    let start = (0..g.vertex_count()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))?;
    let mut order = Vec::with_capacity(g.edge_count());
    let mut seen = EdgeSet::EMPTY;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut visited = vec![false; g.vertex_count()];
    visited[start] = true;
    while let Some(v) = queue.pop_front() {
        for &e in g.incident_edges(v) {
            if !seen.contains(e) {
                seen.insert(e);
                order.push(e);
            }
        }
        for w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }

    struct State<'a> {
        g: &'a Graph,
        k: usize,
        order: Vec<usize>,
        used: Vec<u64>,
        colour: Vec<usize>,
    }
    fn go(s: &mut State, i: usize, max_used: usize) -> bool {
        if i == s.order.len() {
            return true;
        }
        let e = s.order[i];
        let (u, v) = s.g.edge(e);
        let blocked = s.used[u] | s.used[v];
        // a fresh colour is interchangeable with any other fresh colour
        let limit = (max_used + 1).min(s.k);
        for c in 0..limit {
            if blocked >> c & 1 == 1 {
                continue;
            }
            s.used[u] |= 1 << c;
            s.used[v] |= 1 << c;
            s.colour[e] = c;
            if go(s, i + 1, max_used.max(c + 1)) {
                return true;
            }
            s.used[u] &= !(1 << c);
            s.used[v] &= !(1 << c);
        }
        false
    }
    let mut s = State {
        g,
        k,
        order,
        used: vec![0; g.vertex_count()],
        colour: vec![usize::MAX; g.edge_count()],
    };
    if !go(&mut s, 0, 0) {
        return None;
    }
    Some(classes_from(s.colour.into_iter(), k))
}

/// Result of one alternating-path exchange between a short class and a long one.
fn exchange(g: &Graph, short: EdgeSet, long: EdgeSet) -> Option<(EdgeSet, EdgeSet)> {
    let diff = short.symmetric_difference(long);
    let mut rest = diff;
    // components are disjoint, so visiting them by smallest edge visits them
    // in lexicographic order of their edge lists
    while let Some(seed) = rest.first() {
        let mut comp = EdgeSet::single(seed);
        let mut frontier = comp;
        while let Some(e) = frontier.first() {
            frontier.remove(e);
            let grow = g.conflicts(e).intersection(diff).difference(comp);
            comp = comp.union(grow);
            frontier = frontier.union(grow);
        }
        rest = rest.difference(comp);
        let from_long = comp.intersection(long);
        let from_short = comp.intersection(short);
        if from_long.len() > from_short.len() {
            let new_short = short.difference(from_short).union(from_long);
            let new_long = long.difference(from_long).union(from_short);
            return Some((new_short, new_long));
        }
    }
    None
}

/// Indices of the smallest and largest class (lowest index on ties).
fn extremes(sizes: &[usize]) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, &s) in sizes.iter().enumerate() {
        if s < sizes[lo] {
            lo = i;
        }
        if s > sizes[hi] {
            hi = i;
        }
    }
    (lo, hi)
}

/// Proper colouring with `χ'(G)` classes whose sizes differ by at most one.
pub fn equalized_coloring(g: &Graph) -> ColorClasses {
    let mut classes = proper_edge_coloring(g);
    loop {
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        if sizes.is_empty() {
            break;
        }
        let (lo, hi) = extremes(&sizes);
        if sizes[hi] - sizes[lo] <= 1 {
            break;
        }
        let (s, l) = exchange(g, classes[lo], classes[hi])
            .expect("a larger class always has a surplus path");
        classes[lo] = s;
        classes[hi] = l;
    }
    let out = ColorClasses::new(g, classes).expect("exchanges preserve matchings");
    debug_assert!(out.is_proper());
    out
}

/// Rebalances matchings whose sizes sum to `m · s` into `s` matchings of
/// exactly `m` edges, preserving the covered edge set.
pub fn balance_matchings(g: &Graph, classes: &ColorClasses, m: usize) -> Result<CoverCertificate> {
    let s = classes.len();
    let total: usize = classes.sizes().iter().sum();
    if total != m * s {
        return Err(Error::Precondition(format!(
            "class sizes sum to {total}, expected {m} × {s} = {}",
            m * s
        )));
    }
    if classes.covered() != g.all_edges() {
        let e = g.all_edges().difference(classes.covered()).first().unwrap();
        let (u, v) = g.edge(e);
        return Err(Error::Precondition(format!(
            "edge {u}-{v} is not covered by any class"
        )));
    }
    let mut sets: Vec<EdgeSet> = classes.classes().iter().map(|c| c.edges()).collect();
    let deviation = |sets: &[EdgeSet]| sets.iter().map(|c| c.len().abs_diff(m)).sum::<usize>();
    let mut dev = deviation(&sets);
    while dev > 0 {
        let sizes: Vec<usize> = sets.iter().map(|c| c.len()).collect();
        let (lo, hi) = extremes(&sizes);
        let (a, b) = exchange(g, sets[lo], sets[hi]).ok_or_else(|| {
            Error::Inconsistent("no surplus alternating path between unequal classes".into())
        })?;
        sets[lo] = a;
        sets[hi] = b;
        let next = deviation(&sets);
        assert!(next < dev, "exchange must reduce the total size deviation");
        dev = next;
    }
    debug_assert!(sets.iter().all(|&c| is_matching(g, c)));
    CoverCertificate::new(g, m, sets.into_iter().map(Matching::unchecked).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::graph::{build_caterpillar, CaterpillarSpec};

    fn check_proper(g: &Graph, classes: &[EdgeSet]) {
        let mut all = EdgeSet::EMPTY;
        for &c in classes {
            assert!(is_matching(g, c));
            assert!(all.is_disjoint(c));
            all = all.union(c);
        }
        assert_eq!(all, g.all_edges());
    }

    #[test]
    fn chromatic_indices() {
        assert_eq!(chromatic_index(&cycle(5)), 3);
        assert_eq!(chromatic_index(&cycle(6)), 2);
        assert_eq!(chromatic_index(&petersen()), 4);
        assert_eq!(chromatic_index(&complete(5)), 5);
        assert_eq!(chromatic_index(&complete(6)), 5);
        assert_eq!(chromatic_index(&complete_with_pendants(6)), 6);
        assert_eq!(chromatic_index(&spider(&[3, 3, 3, 2])), 4);
        assert_eq!(chromatic_index(&Graph::new(1, []).unwrap()), 0);
    }

    #[test]
    fn proper_colourings() {
        for g in [
            cycle(5),
            petersen(),
            complete(6),
            complete_with_pendants(6),
            spider(&[1, 2, 3]),
            cycle(8),
        ] {
            let classes = proper_edge_coloring(&g);
            assert_eq!(classes.len(), chromatic_index(&g));
            check_proper(&g, &classes);
        }
    }

    #[test]
    fn equalized_examples() {
        assert_eq!(equalized_coloring(&star(3)).sizes(), vec![1, 1, 1]);
        assert_eq!(equalized_coloring(&path(4)).sizes(), vec![2, 2]);
        let g = build_caterpillar(&"CAT(1,2,1,0,3,0)".parse::<CaterpillarSpec>().unwrap()).unwrap();
        let eq = equalized_coloring(&g);
        let mut sizes = eq.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3, 3, 3, 3]);
        assert!(eq.is_proper());
        check_proper(
            &g,
            &eq.classes().iter().map(|c| c.edges()).collect::<Vec<_>>(),
        );
    }

    #[test]
    fn balancing_uniform_input_is_unchanged() {
        let g = path(4);
        let classes = ColorClasses::new(
            &g,
            vec![[0, 2].into_iter().collect(), [1, 3].into_iter().collect()],
        )
        .unwrap();
        let cover = balance_matchings(&g, &classes, 2).unwrap();
        assert_eq!(cover.matchings(), classes.classes());
    }

    #[test]
    fn balancing_single_exchange_on_path() {
        let g = path(9);
        let set = |v: &[usize]| v.iter().map(|i| i - 1).collect::<EdgeSet>();
        let classes = ColorClasses::new(
            &g,
            vec![set(&[1, 3, 5, 7, 9]), set(&[2, 4, 6, 8]), set(&[1, 5, 9])],
        )
        .unwrap();
        let cover = balance_matchings(&g, &classes, 4).unwrap();
        let got: Vec<EdgeSet> = cover.matchings().iter().map(|m| m.edges()).collect();
        assert_eq!(
            got,
            vec![set(&[1, 5, 7, 9]), set(&[2, 4, 6, 8]), set(&[1, 3, 5, 9])]
        );
    }

    #[test]
    fn balancing_rejects_bad_budget() {
        let g = path(4);
        let classes = ColorClasses::new(
            &g,
            vec![[0, 2].into_iter().collect(), [1, 3].into_iter().collect()],
        )
        .unwrap();
        assert!(matches!(
            balance_matchings(&g, &classes, 3),
            Err(Error::Precondition(_))
        ));
        let partial = ColorClasses::new(&g, vec![[0, 2].into_iter().collect()]).unwrap();
        assert!(matches!(
            balance_matchings(&g, &partial, 2),
            Err(Error::Precondition(_))
        ));
        assert!(ColorClasses::new(&g, vec![[0, 1].into_iter().collect()]).is_err());
    }
}
