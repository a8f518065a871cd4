//! Named graph families used throughout the examples, tests and CLI.

use super::Graph;

/// Path with `k` edges on vertices `0..=k`.
pub fn path(k: usize) -> Graph {
    Graph::new(k + 1, (0..k).map(|i| (i, i + 1))).expect("path is valid")
}

/// Star `K_{1,k}` centred at vertex 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star is valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph is valid")
}

/// Spider: legs of the given lengths joined at vertex 0.
pub fn spider(legs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges).expect("spider is valid")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen is valid")
}

/// `K_k` on `0..k` with one pendant edge `i -- k + i` at every clique vertex.
pub fn complete_with_pendants(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    Graph::new(2 * k, edges).expect("pendant clique is valid")
}
