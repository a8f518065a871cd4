use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{is_matching, Matching};

/// A family of `m`-matchings covering every edge; equivalently the
/// multicolouring in which each edge receives one colour per containing matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    m: usize,
    matchings: Vec<Matching>,
    multiplicity: Vec<usize>,
}

impl CoverCertificate {
    pub fn new(g: &Graph, m: usize, matchings: Vec<Matching>) -> Result<CoverCertificate> {
        validate_cover(g, m, &matchings).map_err(Error::Inconsistent)?;
        let multiplicity = multiplicity(g, &matchings);
        Ok(CoverCertificate {
            m,
            matchings,
            multiplicity,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Number of matchings containing each edge.
    pub fn multiplicity(&self) -> &[usize] {
        &self.multiplicity
    }

    pub fn to_pairs(&self, g: &Graph) -> Vec<Vec<(usize, usize)>> {
        self.matchings
            .iter()
            .map(|m| g.edge_pairs(m.edges()))
            .collect()
    }
}

fn multiplicity(g: &Graph, matchings: &[Matching]) -> Vec<usize> {
    let mut mult = vec![0; g.edge_count()];
    for m in matchings {
        for e in m.edges() {
            mult[e] += 1;
        }
    }
    mult
}

/// Checks an `m`-cover from scratch: every member is a matching of exactly
/// `m` edges of `g`, and every edge is in some member.
pub fn validate_cover(
    g: &Graph,
    m: usize,
    matchings: &[Matching],
) -> std::result::Result<(), String> {
    let mut covered = EdgeSet::EMPTY;
    for (i, mm) in matchings.iter().enumerate() {
        let set = mm.edges();
        if set.len() != m {
            return Err(format!(
                "matching {i} has {} edges, expected {m}",
                set.len()
            ));
        }
        if !is_matching(g, set) {
            return Err(format!("matching {i} is not a matching of the graph"));
        }
        covered = covered.union(set);
    }
    if let Some(e) = g.all_edges().difference(covered).first() {
        let (u, v) = g.edge(e);
        return Err(format!("edge {u}-{v} is not covered"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::path;

    #[test]
    fn validation() {
        let g = path(3);
        let a = Matching::new(&g, [0, 2].into_iter().collect()).unwrap();
        let b = Matching::new(&g, [1].into_iter().collect()).unwrap();
        assert!(validate_cover(&g, 2, &[a]).is_err());
        assert!(validate_cover(&g, 2, &[a, b]).is_err());
        let c = CoverCertificate::new(
            &g,
            1,
            vec![
                Matching::new(&g, EdgeSet::single(0)).unwrap(),
                b,
                Matching::new(&g, EdgeSet::single(2)).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(c.multiplicity(), &[1, 1, 1]);
        assert_eq!(
            c.to_pairs(&g),
            vec![vec![(0, 1)], vec![(1, 2)], vec![(2, 3)]]
        );
    }
}
