//! Splitting sets and t-splitting sets.
//!
//! An order-`t` splitting set for matching size `m` is an edge set none of
//! whose `(t + 1)`-matchings lies inside an `m`-matching of the host graph,
//! subject to a non-triviality condition: for `t = 1` the set must not be a
//! star, for `t >= 2` it must contain a `(t + 1)`-matching. Any `m`-matching
//! meets such a set in at most `t` edges, which is what makes
//! `⌈|S| / t⌉` a lower bound for every `[m]`-cover.

use std::collections::HashSet;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphError};
use crate::matching::{
    enumerate_matchings, enumerate_matchings_within, extends_to, max_matching_size_within,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingCertificate {
    pub edge_set: EdgeSet,
    pub m: usize,
    pub t: usize,
}

impl SplittingCertificate {
    pub fn size(&self) -> usize {
        self.edge_set.len()
    }

    pub fn validate(&self, g: &Graph) -> bool {
        is_splitting_set(g, self.edge_set, self.m, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingResult {
    pub value: usize,
    pub certificate: Option<SplittingCertificate>,
}

/// True when all edges of `set` share one vertex (the empty set counts).
pub fn is_star(g: &Graph, set: EdgeSet) -> bool {
    let Some(e) = set.first() else {
        return true;
    };
    let (u, v) = g.edge(e);
    set.is_subset(g.incident_set(u)) || set.is_subset(g.incident_set(v))
}

/// Checks both conditions of the order-`t` definition directly.
pub fn is_splitting_set(g: &Graph, set: EdgeSet, m: usize, t: usize) -> bool {
    if t == 0 || m == 0 || !set.is_subset(g.all_edges()) {
        return false;
    }
    let witness = if t == 1 {
        !is_star(g, set)
    } else {
        max_matching_size_within(g, set) > t
    };
    witness && enumerate_matchings_within(g, set, t + 1).all(|h| !extends_to(g, h, m))
}

/// Necessary conditions satisfied by every splitting set (`t = 1`) of an
/// `[m]`-coverable tree: no vertex of the set has all of its tree edges in
/// the set, and the set has at most `m` edges. Returns `false` when `set`
/// fails one of them and can be discarded.
pub fn tree_splitting_prune(t: &Graph, set: EdgeSet, m: usize) -> Result<bool, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    Ok(set.len() <= m && !saturates(t, set))
}

fn saturates(g: &Graph, set: EdgeSet) -> bool {
    g.vertices_of(set)
        .into_iter()
        .any(|x| g.incident_set(x).is_subset(set))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SplittingOptions {
    /// Apply the tree conditions of [`tree_splitting_prune`] during the
    /// search. Only sound on `[m]`-coverable trees with `t = 1`; ignored otherwise.
    pub tree_pruning: bool,
}

pub fn splitting_number(g: &Graph, m: usize, t: usize) -> Result<SplittingResult> {
    splitting_number_with(g, m, t, SplittingOptions::default())
}

/// Largest order-`t` splitting set, by exhaustive branch and bound. The
/// witness is the lexicographically least largest set.
pub fn splitting_number_with(
    g: &Graph,
    m: usize,
    t: usize,
    opts: SplittingOptions,
) -> Result<SplittingResult> {
    if m == 0 || t == 0 || t >= m {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= t <= m - 1, got m = {m}, t = {t}"
        )));
    }
    let none = SplittingResult {
        value: 0,
        certificate: None,
    };
    // for t >= 2 the witness would be an m-matching, which extends to itself;
    // t = 1 = m - 1 still admits triangles
    if t == m - 1 && t >= 2 {
        return Ok(none);
    }

    let mut bad: HashSet<u64> = HashSet::new();
    for mm in enumerate_matchings(g, m) {
        let edges = mm.edges().to_vec();
        for_each_subset(&edges, t + 1, &mut |s| {
            bad.insert(s.bits());
        });
    }
    let mut bad_by_edge: Vec<Vec<EdgeSet>> = vec![Vec::new(); g.edge_count()];
    let mut sorted: Vec<u64> = bad.into_iter().collect();
    sorted.sort_unstable();
    for h in sorted {
        for e in EdgeSet(h) {
            bad_by_edge[e].push(EdgeSet(h));
        }
    }

    let prune = opts.tree_pruning && t == 1 && g.is_tree();
    let mut search = Search {
        g,
        t,
        m,
        prune,
        bad_by_edge,
        best: 0,
        best_set: None,
    };
    let mut cand = g.all_edges();
    if prune {
        cand = cand
            .iter()
            .filter(|&f| !saturates(g, EdgeSet::single(f)))
            .collect();
    }
    search.run(EdgeSet::EMPTY, cand);

    let Some(set) = search.best_set else {
        return Ok(none);
    };
    let cert = SplittingCertificate {
        edge_set: set,
        m,
        t,
    };
    debug_assert!(cert.validate(g));
    Ok(SplittingResult {
        value: set.len(),
        certificate: Some(cert),
    })
}

fn for_each_subset(items: &[usize], k: usize, f: &mut impl FnMut(EdgeSet)) {
    fn go(items: &[usize], k: usize, acc: EdgeSet, f: &mut impl FnMut(EdgeSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        if items.len() < k {
            return;
        }
        go(&items[1..], k - 1, acc.with(items[0]), f);
        go(&items[1..], k, acc, f);
    }
    go(items, k, EdgeSet::EMPTY, f);
}

struct Search<'g> {
    g: &'g Graph,
    t: usize,
    m: usize,
    prune: bool,
    bad_by_edge: Vec<Vec<EdgeSet>>,
    best: usize,
    best_set: Option<EdgeSet>,
}

impl Search<'_> {
    fn has_witness(&self, set: EdgeSet) -> bool {
        if self.t == 1 {
            !is_star(self.g, set)
        } else {
            set.len() > self.t && max_matching_size_within(self.g, set) > self.t
        }
    }

    /// `set` contains no bad hyperedge; every edge of `cand` can be added
    /// to `set` without creating one.
    fn run(&mut self, set: EdgeSet, mut cand: EdgeSet) {
        if set.len() > self.best && self.has_witness(set) {
            self.best = set.len();
            self.best_set = Some(set);
        }
        while let Some(e) = cand.first() {
            if set.len() + cand.len() <= self.best {
                return;
            }
            cand.remove(e);
            let grown = set.with(e);
            let mut next = cand;
            for h in &self.bad_by_edge[e] {
                let missing = h.difference(grown);
                if missing.len() == 1 {
                    next = next.difference(missing);
                }
            }
            if self.prune {
                if grown.len() >= self.m {
                    next = EdgeSet::EMPTY;
                }
                next = next
                    .iter()
                    .filter(|&f| !saturates(self.g, grown.with(f)))
                    .collect();
            }
            self.run(grown, next);
        }
    }
}
