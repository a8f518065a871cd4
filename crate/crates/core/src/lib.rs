//! Exact excessive `[m]`-index computations for small graphs.
//!
//! The excessive `[m]`-index `χ'_[m](G)` is the least number of matchings of
//! exactly `m` edges whose union is `E(G)`, or infinite when some edge lies in
//! no such matching. This crate computes it exactly, together with the
//! quantities that bound it from below (chromatic index, edge density and
//! splitting numbers), the closed formulas known for small `m` and for trees
//! at `m = 4`, and a verification lab that checks those formulas on every
//! small tree and on a handful of named graphs.
//!
//! ```
//! use excessive_index::prelude::*;
//!
//! let g = load_graph("CAT(0,1,1,1,0)", GraphFormat::CatNotation).unwrap();
//! let r = exact_excessive_index(&g, 4, &SolveOptions::default()).unwrap();
//! assert_eq!(r.value, IndexValue::Finite(4));
//! ```

pub mod cli;
pub mod coloring;
pub mod cover;
pub mod edgeset;
pub mod error;
pub mod graph;
pub mod index;
pub mod lab;
pub mod matching;
pub mod splitting;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use graph::Graph;

pub mod prelude {
    pub use crate::coloring::{
        balance_matchings, chromatic_index, equalized_coloring, ColorClasses,
    };
    pub use crate::cover::{validate_cover, CoverCertificate};
    pub use crate::edgeset::EdgeSet;
    pub use crate::error::{Error, Result};
    pub use crate::graph::construct;
    pub use crate::graph::{
        build_caterpillar, canonical_tree_code, graph_stats, load_graph, CaterpillarSpec, Graph,
        GraphError, GraphFormat, GraphStats,
    };
    pub use crate::index::{
        compatible_value, exact_excessive_index, find_cover, formula_index_small_m, is_compatible,
        lower_bound, tree_index_m4, BoundMode, IndexResult, IndexValue, LowerBounds, Method,
        SolveOptions,
    };
    pub use crate::matching::{
        enumerate_matchings, extend_matching, extends_to, is_m_coverable,
        min_maximal_matching_size, Matching,
    };
    pub use crate::splitting::{
        is_splitting_set, splitting_number, tree_splitting_prune, SplittingCertificate,
        SplittingResult,
    };
}
