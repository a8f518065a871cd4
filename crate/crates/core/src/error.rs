use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not [{m}]-coverable: edge {}-{} lies in no {m}-matching", edge.0, edge.1)]
    NotCoverable { m: usize, edge: (usize, usize) },
    #[error("search budget of {limit} nodes exceeded; value is at least {lower_bound}")]
    BudgetExceeded { limit: u64, lower_bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("reconstruction does not match its stated parameters: {0}")]
    ReconstructionInvalid(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
