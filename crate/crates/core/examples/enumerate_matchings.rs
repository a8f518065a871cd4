//! Counts matchings by size and extends a small matching to a larger one.
//!
//! cargo run --example enumerate_matchings

use excessive_index::prelude::*;

fn main() {
    let g = construct::petersen();
    for k in 0..=5 {
        println!(
            "{k}-matchings of the Petersen graph: {}",
            enumerate_matchings(&g, k).count()
        );
    }

    let g = construct::path(8);
    let h = Matching::from_pairs(&g, &[(1, 2), (4, 5)]).expect("disjoint edges");
    println!("path with 8 edges, matching {:?}", g.edge_pairs(h.edges()));
    for m in 3..=4 {
        match extend_matching(&g, h, m) {
            Some(x) => println!(
                "  extends to the {m}-matching {:?}",
                g.edge_pairs(x.edges())
            ),
            None => println!("  lies in no {m}-matching"),
        }
    }
    println!(
        "  every edge lies in a 4-matching: {}",
        is_m_coverable(&g, 4)
    );
    println!(
        "  smallest maximal matching: {}",
        min_maximal_matching_size(&g)
    );
}
