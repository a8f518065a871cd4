//! Exhaustive families of small trees and graphs, and the claim suite that
//! runs the index machinery over them.

pub mod claims;
pub mod graphs;
pub mod report;
pub mod trees;

pub use claims::{
    build_counterexample_graph, check_graph_conjecture, check_tree_conjecture, verify_paper_claims,
    verify_paper_claims_with, LabOptions, Universe,
};
pub use graphs::{
    canonical_form, connected_graphs_up_to, enumerate_connected_graphs, CanonicalForm,
};
pub use report::{read_jsonl, write_jsonl, ClaimKind, TrialReport, Verdict};
pub use trees::{enumerate_trees, tree_codes, trees_up_to, CodedTree};
