//! Free trees by leaf augmentation, deduplicated on canonical codes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{canonical_tree_code, tree_from_code, Graph};

pub const MAX_TREE_VERTICES: usize = 16;

fn check_size(n: usize) -> Result<()> {
    if !(1..=MAX_TREE_VERTICES).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "tree size must be in 1..={MAX_TREE_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

/// Canonical codes of all free trees with `1..=n_max` vertices, one level
/// per vertex count, each level sorted.
pub fn tree_codes_up_to(n_max: usize) -> Result<Vec<Vec<String>>> {
    check_size(n_max)?;
    let mut levels = vec![vec!["()".to_string()]];
    while levels.len() < n_max {
        let mut next = BTreeSet::new();
        for code in levels.last().expect("non-empty") {
            let t = tree_from_code(code)?;
            for v in 0..t.vertex_count() {
                next.insert(canonical_tree_code(&t.with_leaf(v)?)?);
            }
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// Canonical codes of the trees on exactly `n` vertices, sorted.
pub fn tree_codes(n: usize) -> Result<Vec<String>> {
    Ok(tree_codes_up_to(n)?.pop().expect("n >= 1"))
}

/// Every free tree on `n` vertices exactly once, in canonical-code order.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let codes = tree_codes(n)?;
    Ok(codes
        .into_iter()
        .map(|c| tree_from_code(&c).expect("codes produced here decode")))
}

/// A tree together with its canonical code.
#[derive(Debug, Clone)]
pub struct CodedTree {
    pub code: String,
    pub graph: Graph,
}

/// All trees with `1..=n_max` vertices, ordered by vertex count then code.
pub fn trees_up_to(n_max: usize) -> Result<Vec<CodedTree>> {
    Ok(tree_codes_up_to(n_max)?
        .into_iter()
        .flatten()
        .map(|code| CodedTree {
            graph: tree_from_code(&code).expect("codes produced here decode"),
            code,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: decode every Prüfer sequence and deduplicate.
    fn prufer_count(n: usize) -> usize {
        if n <= 2 {
            return 1;
        }
        let mut seen = BTreeSet::new();
        let mut seq = vec![0usize; n - 2];
        loop {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::new();
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            seen.insert(canonical_tree_code(&Graph::new(n, edges).unwrap()).unwrap());
            // odometer
            let mut i = 0;
            while i < seq.len() && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == seq.len() {
                break;
            }
            seq[i] += 1;
        }
        seen.len()
    }

    /// Counts of rooted and free trees from the Euler transform recurrence.
    fn otter_counts(n_max: usize) -> Vec<u64> {
        let mut rooted = vec![0u64; n_max + 1];
        rooted[1] = 1;
        for n in 1..n_max {
            let mut sum = 0u64;
            for k in 1..=n {
                let d: u64 = (1..=k)
                    .filter(|d| k % d == 0)
                    .map(|d| d as u64 * rooted[d])
                    .sum();
                sum += d * rooted[n - k + 1];
            }
            rooted[n + 1] = sum / n as u64;
        }
        let mut free = vec![0u64; n_max + 1];
        for n in 1..=n_max {
            let mut pairs: u64 = (1..n).map(|i| rooted[i] * rooted[n - i]).sum();
            if n % 2 == 0 {
                pairs -= rooted[n / 2];
            }
            free[n] = rooted[n] - pairs / 2;
        }
        free
    }

    #[test]
    fn counts_match_prufer_oracle() {
        let levels = tree_codes_up_to(8).unwrap();
        for n in 1..=8 {
            assert_eq!(levels[n - 1].len(), prufer_count(n), "n = {n}");
        }
    }

    #[test]
    fn counts_match_otter() {
        let levels = tree_codes_up_to(14).unwrap();
        let otter = otter_counts(14);
        for n in 1..=14 {
            assert_eq!(levels[n - 1].len() as u64, otter[n], "n = {n}");
        }
        assert_eq!(levels[6].len(), 11);
        assert_eq!(levels[9].len(), 106);
    }

    #[test]
    fn streams_are_duplicate_free_trees() {
        let trees: Vec<Graph> = enumerate_trees(9).unwrap().collect();
        let codes: BTreeSet<String> = trees
            .iter()
            .map(|t| canonical_tree_code(t).unwrap())
            .collect();
        assert_eq!(codes.len(), trees.len());
        assert!(trees.iter().all(|t| t.is_tree() && t.vertex_count() == 9));
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(17).is_err());
    }
}
