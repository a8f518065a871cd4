//! The clique-with-pendants graph where the first-order tree formula
//! undershoots and the second-order splitting bound is exact.
//!
//! cargo run --release --example counterexample

use excessive_index::lab::build_counterexample_graph;
use excessive_index::prelude::*;
use excessive_index::splitting::splitting_number;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = build_counterexample_graph()?;
    let s1 = splitting_number(&g, 4, 1)?.value;
    let first_order = g.max_degree().max(g.edge_count().div_ceil(4)).max(s1);
    println!(
        "Δ = {}, χ' = {}, |E| = {}, s = {s1}",
        g.max_degree(),
        chromatic_index(&g),
        g.edge_count()
    );
    println!("first-order formula: {first_order}");

    let lb = lower_bound(&g, 4)?;
    for (t, term) in &lb.splitting {
        println!("s^{t} = {}, bound {}", term.size, term.bound);
    }
    let r = exact_excessive_index(&g, 4, &SolveOptions::default())?;
    println!(
        "lower bound {}, exact index {} after {} nodes",
        lb.max, r.value, r.nodes
    );
    Ok(())
}
