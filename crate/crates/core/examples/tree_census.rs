//! Finds every coverable tree whose index exceeds max{χ', ⌈|E|/m⌉}.
//!
//! cargo run --release --example tree_census -- 13 4

use excessive_index::lab::trees_up_to;
use excessive_index::prelude::*;
use rayon::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n_max: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);
    let m: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let trees = trees_up_to(n_max)?;
    let opts = SolveOptions {
        bounds: BoundMode::Basic,
        ..SolveOptions::default()
    };
    let coverable: Vec<_> = trees
        .par_iter()
        .filter(|t| t.graph.edge_count() > 0 && is_m_coverable(&t.graph, m))
        .collect();
    let exceptions: Vec<String> = coverable
        .par_iter()
        .filter_map(|t| {
            let r = exact_excessive_index(&t.graph, m, &opts).ok()?;
            let two = compatible_value(&t.graph, m);
            (r.value.finite() != Some(two)).then(|| {
                let name = t.graph.to_cat_notation().unwrap_or_else(|| t.code.clone());
                format!("{name}: index {} vs {two}", r.value)
            })
        })
        .collect();
    println!(
        "{} trees on at most {n_max} vertices, {} [{m}]-coverable, {} not [{m}]-compatible",
        trees.len(),
        coverable.len(),
        exceptions.len()
    );
    for e in exceptions {
        println!("  {e}");
    }
    Ok(())
}
