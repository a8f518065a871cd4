//! The excessive `[m]`-index: lower bounds, the exact branch-and-bound
//! solver, closed formulas for small `m` and for trees at `m = 4`, and the
//! compatibility predicate.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::{chromatic_index, equalized_coloring};
use crate::cover::CoverCertificate;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphError};
use crate::matching::{
    enumerate_matchings, extend_matching, min_maximal_matching_size, uncoverable_edge, Matching,
};
use crate::splitting::{splitting_number_with, SplittingOptions};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IndexValue {
    Finite(usize),
    Infinite,
}

impl IndexValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            IndexValue::Finite(v) => Some(v),
            IndexValue::Infinite => None,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(v) => write!(f, "{v}"),
            IndexValue::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            IndexValue::Finite(v) => s.serialize_u64(*v as u64),
            IndexValue::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

impl<'de> Deserialize<'de> for IndexValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(usize),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(v) => Ok(IndexValue::Finite(v)),
            Raw::S(s) if s == "INFINITE" => Ok(IndexValue::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!(
                "expected a number or \"INFINITE\", got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FormulaM1,
    FormulaM2,
    FormulaM3,
    FormulaTreeM4,
    ExactSearch,
}

/// One splitting term of the lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingTerm {
    /// `s^t(G)`.
    pub size: usize,
    /// `⌈s^t(G) / t⌉`.
    pub bound: usize,
    /// Edge indices of the largest set found, if any.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBounds {
    pub chromatic: usize,
    /// `⌈|E| / m⌉`.
    pub density: usize,
    /// Keyed by the splitting order `t`.
    pub splitting: BTreeMap<usize, SplittingTerm>,
    pub max: usize,
}

impl LowerBounds {
    fn basic(g: &Graph, m: usize) -> LowerBounds {
        let chromatic = chromatic_index(g);
        let density = g.edge_count().div_ceil(m);
        LowerBounds {
            chromatic,
            density,
            splitting: BTreeMap::new(),
            max: chromatic.max(density),
        }
    }

    fn add_splitting(
        &mut self,
        g: &Graph,
        m: usize,
        t: usize,
        opts: SplittingOptions,
    ) -> Result<()> {
        let r = splitting_number_with(g, m, t, opts)?;
        if let Some(c) = r.certificate {
            if !c.validate(g) {
                return Err(Error::Inconsistent(format!(
                    "splitting certificate for t = {t} does not validate"
                )));
            }
        }
        let bound = r.value.div_ceil(t);
        self.max = self.max.max(bound);
        self.splitting.insert(
            t,
            SplittingTerm {
                size: r.value,
                bound,
                witness: r.certificate.map(|c| c.edge_set.to_vec()),
            },
        );
        Ok(())
    }

    /// `max{χ', ⌈|E|/m⌉}`.
    pub fn two_term(&self) -> usize {
        self.chromatic.max(self.density)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexResult {
    pub m: usize,
    pub value: IndexValue,
    /// Absent when the graph is not `[m]`-coverable.
    pub lower_bounds: Option<LowerBounds>,
    pub witness: Option<CoverCertificate>,
    pub method: Method,
    /// Search nodes spent by the exact solver (0 when no search ran).
    pub nodes: u64,
}

/// Which lower bound the exact solver starts deepening from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// `max{χ', ⌈|E|/m⌉}` only.
    Basic,
    /// Also the validated splitting terms `⌈s^t/t⌉`, `t = 1..m-1`.
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub node_limit: u64,
    pub bounds: BoundMode,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_limit: DEFAULT_NODE_LIMIT,
            bounds: BoundMode::Full,
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "matching size m must be at least 1".into(),
        ));
    }
    Ok(())
}

fn require_coverable(g: &Graph, m: usize) -> Result<()> {
    match uncoverable_edge(g, m) {
        Some(e) => Err(Error::NotCoverable { m, edge: g.edge(e) }),
        None => Ok(()),
    }
}

/// `χ'`, `⌈|E|/m⌉` and `⌈s^t/t⌉` for `t = 1..m-1`, with their maximum.
pub fn lower_bound(g: &Graph, m: usize) -> Result<LowerBounds> {
    check_m(m)?;
    require_coverable(g, m)?;
    full_bounds(g, m)
}

fn full_bounds(g: &Graph, m: usize) -> Result<LowerBounds> {
    let mut lb = LowerBounds::basic(g, m);
    for t in 1..m {
        lb.add_splitting(g, m, t, SplittingOptions::default())?;
    }
    Ok(lb)
}

/// Branch-and-bound search for a cover by `m`-matchings.
struct CoverSearch<'g> {
    g: &'g Graph,
    m: usize,
    matchings: Vec<EdgeSet>,
    by_edge: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
}

struct OutOfBudget;

impl<'g> CoverSearch<'g> {
    fn new(g: &'g Graph, m: usize, limit: u64) -> CoverSearch<'g> {
        let matchings: Vec<EdgeSet> = enumerate_matchings(g, m).map(|mm| mm.edges()).collect();
        let mut by_edge = vec![Vec::new(); g.edge_count()];
        for (i, mm) in matchings.iter().enumerate() {
            for e in mm.iter() {
                by_edge[e].push(i);
            }
        }
        CoverSearch {
            g,
            m,
            matchings,
            by_edge,
            nodes: 0,
            limit,
        }
    }

    fn uncoverable(&self) -> Option<usize> {
        self.by_edge.iter().position(Vec::is_empty)
    }

    /// A cover with at most `k` matchings, if one exists.
    fn cover(&mut self, k: usize) -> std::result::Result<Option<Vec<EdgeSet>>, OutOfBudget> {
        let mut chosen = Vec::with_capacity(k);
        if self.go(self.g.all_edges(), k, &mut chosen)? {
            Ok(Some(
                chosen.into_iter().map(|i| self.matchings[i]).collect(),
            ))
        } else {
            Ok(None)
        }
    }

    fn go(
        &mut self,
        uncovered: EdgeSet,
        remaining: usize,
        chosen: &mut Vec<usize>,
    ) -> std::result::Result<bool, OutOfBudget> {
        if uncovered.is_empty() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OutOfBudget);
        }
        if remaining == 0 || remaining * self.m < uncovered.len() {
            return Ok(false);
        }
        // each matching covers at most one edge per vertex
        for v in 0..self.g.vertex_count() {
            if self.g.incident_set(v).intersection(uncovered).len() > remaining {
                return Ok(false);
            }
        }
        let best_gain = self
            .matchings
            .iter()
            .map(|mm| mm.intersection(uncovered).len())
            .max()
            .unwrap_or(0);
        if remaining * best_gain < uncovered.len() {
            return Ok(false);
        }

        // fail-first: the uncovered edge in the fewest matchings
        let e = uncovered
            .iter()
            .min_by_key(|&e| (self.by_edge[e].len(), e))
            .expect("non-empty");
        let mut options: Vec<(EdgeSet, usize)> = self.by_edge[e]
            .iter()
            .map(|&i| (self.matchings[i].intersection(uncovered), i))
            .collect();
        // a matching whose new edges are a subset of another's is never needed
        let gains: Vec<EdgeSet> = options.iter().map(|o| o.0).collect();
        options.retain(|&(gain, i)| {
            !gains.iter().zip(&self.by_edge[e]).any(|(&other, &j)| {
                (gain != other && gain.is_subset(other)) || (gain == other && j < i)
            })
        });
        options.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.1.cmp(&b.1)));

        for (gain, i) in options {
            chosen.push(i);
            if self.go(uncovered.difference(gain), remaining - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

/// A cover of `g` by at most `k` `m`-matchings, if one exists.
pub fn find_cover(
    g: &Graph,
    m: usize,
    k: usize,
    node_limit: u64,
) -> Result<Option<CoverCertificate>> {
    check_m(m)?;
    let mut search = CoverSearch::new(g, m, node_limit);
    if search.uncoverable().is_some() {
        return Ok(None);
    }
    match search.cover(k) {
        Ok(Some(sets)) => Ok(Some(CoverCertificate::new(
            g,
            m,
            sets.into_iter().map(Matching::unchecked).collect(),
        )?)),
        Ok(None) => Ok(None),
        Err(OutOfBudget) => Err(Error::BudgetExceeded {
            limit: node_limit,
            lower_bound: 0,
        }),
    }
}

/// Exact `χ'_[m](G)` by iterative deepening from the best lower bound.
/// Returns `INFINITE` iff some edge lies in no `m`-matching.
pub fn exact_excessive_index(g: &Graph, m: usize, opts: &SolveOptions) -> Result<IndexResult> {
    check_m(m)?;
    let mut search = CoverSearch::new(g, m, opts.node_limit);
    if search.uncoverable().is_some() {
        return Ok(IndexResult {
            m,
            value: IndexValue::Infinite,
            lower_bounds: None,
            witness: None,
            method: Method::ExactSearch,
            nodes: 0,
        });
    }
    let bounds = match opts.bounds {
        BoundMode::Basic => LowerBounds::basic(g, m),
        BoundMode::Full => full_bounds(g, m)?,
    };
    let mut k = bounds.max;
    loop {
        match search.cover(k) {
            Ok(Some(sets)) => {
                let witness = CoverCertificate::new(
                    g,
                    m,
                    sets.into_iter().map(Matching::unchecked).collect(),
                )?;
                return Ok(IndexResult {
                    m,
                    value: IndexValue::Finite(witness.len()),
                    lower_bounds: Some(bounds),
                    witness: Some(witness),
                    method: Method::ExactSearch,
                    nodes: search.nodes,
                });
            }
            Ok(None) => k += 1,
            Err(OutOfBudget) => {
                return Err(Error::BudgetExceeded {
                    limit: opts.node_limit,
                    lower_bound: k,
                })
            }
        }
    }
}

fn seeded_witness(g: &Graph, m: usize, value: usize) -> Result<CoverCertificate> {
    find_cover(g, m, value, DEFAULT_NODE_LIMIT)?
        .ok_or_else(|| Error::Inconsistent(format!("formula value {value} admits no [{m}]-cover")))
}

/// Closed formulas for `m = 1, 2, 3`:
/// `|E|`, `max{χ', ⌈|E|/2⌉}` and `max{χ', ⌈|E|/3⌉, s(G)}`.
pub fn formula_index_small_m(g: &Graph, m: usize) -> Result<IndexResult> {
    let method = match m {
        1 => Method::FormulaM1,
        2 => Method::FormulaM2,
        3 => Method::FormulaM3,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "closed formula needs m in 1..=3, got {m}"
            )))
        }
    };
    require_coverable(g, m)?;
    let mut lb = LowerBounds::basic(g, m);
    if m == 3 {
        lb.add_splitting(g, 3, 1, SplittingOptions::default())?;
    }
    let value = match m {
        1 => g.edge_count(),
        2 => lb.two_term(),
        _ => lb.two_term().max(lb.splitting[&1].size),
    };
    let witness = if m == 1 {
        let singles = (0..g.edge_count())
            .map(|e| Matching::unchecked(EdgeSet::single(e)))
            .collect();
        CoverCertificate::new(g, 1, singles)?
    } else {
        seeded_witness(g, m, value)?
    };
    Ok(IndexResult {
        m,
        value: IndexValue::Finite(value),
        lower_bounds: Some(lb),
        witness: Some(witness),
        method,
        nodes: 0,
    })
}

/// `χ'_[4](T) = max{Δ(T), ⌈|E(T)|/4⌉, s(T)}` for `[4]`-coverable trees.
pub fn tree_index_m4(t: &Graph) -> Result<IndexResult> {
    if !t.is_tree() {
        return Err(GraphError::NotATree.into());
    }
    require_coverable(t, 4)?;
    let mut lb = LowerBounds::basic(t, 4);
    lb.add_splitting(t, 4, 1, SplittingOptions { tree_pruning: true })?;
    let delta = t.max_degree();
    let value = delta.max(lb.density).max(lb.splitting[&1].size);

    // every colour class of an equalized Δ-colouring has at most 4 edges and
    // extends to a 4-matching once all maximal matchings have size >= 4
    let equalized_route =
        value == delta && t.edge_count() <= 4 * delta && min_maximal_matching_size(t) >= 4;
    let witness = if equalized_route {
        let classes = equalized_coloring(t);
        let extended = classes
            .classes()
            .iter()
            .map(|&c| extend_matching(t, c, 4))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::Inconsistent(
                    "an equalized colour class does not extend to a 4-matching".into(),
                )
            })?;
        CoverCertificate::new(t, 4, extended)?
    } else {
        seeded_witness(t, 4, value)?
    };
    Ok(IndexResult {
        m: 4,
        value: IndexValue::Finite(value),
        lower_bounds: Some(lb),
        witness: Some(witness),
        method: Method::FormulaTreeM4,
        nodes: 0,
    })
}

/// `max{χ'(G), ⌈|E|/m⌉}`.
pub fn compatible_value(g: &Graph, m: usize) -> usize {
    LowerBounds::basic(g, m).two_term()
}

/// Whether `χ'_[m](G) = max{χ'(G), ⌈|E|/m⌉}`; decided by a single cover search
/// at that value, since the value is always a lower bound.
pub fn is_compatible(g: &Graph, m: usize) -> Result<bool> {
    check_m(m)?;
    require_coverable(g, m)?;
    Ok(find_cover(g, m, compatible_value(g, m), DEFAULT_NODE_LIMIT)?.is_some())
}
