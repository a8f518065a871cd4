//! Brute-force oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use excessive_index::prelude::*;

fn vertex_disjoint(g: &Graph, mask: u64) -> bool {
    let mut seen = 0u64;
    for e in 0..g.edge_count() {
        if mask >> e & 1 == 1 {
            let (u, v) = g.edge(e);
            let b = (1u64 << u) | (1u64 << v);
            if seen & b != 0 {
                return false;
            }
            seen |= b;
        }
    }
    true
}

/// Every `k`-matching, by scanning all edge subsets.
pub fn naive_matchings(g: &Graph, k: usize) -> Vec<u64> {
    let e = g.edge_count();
    assert!(e <= 20, "oracle is exponential in |E|");
    (0u64..1 << e)
        .filter(|&s| s.count_ones() as usize == k && vertex_disjoint(g, s))
        .collect()
}

fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

fn shares_a_vertex(g: &Graph, mask: u64) -> bool {
    (0..g.vertex_count()).any(|v| {
        (0..g.edge_count())
            .filter(|&e| mask >> e & 1 == 1)
            .all(|e| {
                let (a, b) = g.edge(e);
                a == v || b == v
            })
    })
}

/// The order-`t` splitting number straight from the definition:
/// scans every edge subset against every `(t + 1)`-matching that sits
/// inside some `m`-matching.
pub fn naive_splitting_number(g: &Graph, m: usize, t: usize) -> usize {
    let e = g.edge_count();
    let big = naive_matchings(g, m);
    let small = naive_matchings(g, t + 1);
    let inside: Vec<u64> = small
        .iter()
        .copied()
        .filter(|&h| big.iter().any(|&b| subset(h, b)))
        .collect();
    let mut best = 0;
    for s in 0u64..1 << e {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let nontrivial = if t == 1 {
            !shares_a_vertex(g, s)
        } else {
            small.iter().any(|&h| subset(h, s))
        };
        if nontrivial && !inside.iter().any(|&h| subset(h, s)) {
            best = size;
        }
    }
    best
}

/// Tree from a Prüfer sequence on `seq.len() + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// A connected graph: a Prüfer tree plus the chosen extra vertex pairs.
pub fn connected_graph(seq: &[usize], extra: &[(usize, usize)]) -> Graph {
    let t = tree_from_pruefer(seq);
    let n = t.vertex_count();
    let mut edges: HashSet<(usize, usize)> = t.edges().iter().copied().collect();
    for &(a, b) in extra {
        let (a, b) = (a % n, b % n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Applies a permutation given as sort keys.
pub fn shuffle(g: &Graph, keys: &[u64]) -> Graph {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (keys[v % keys.len()], v));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm)
}
