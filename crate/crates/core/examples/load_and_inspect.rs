//! Loads graphs from each text format and prints their basic statistics.
//!
//! cargo run --example load_and_inspect

use excessive_index::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        ("CAT(1,2,1,0,3,0)", GraphFormat::CatNotation),
        ("IheA@GUAo", GraphFormat::Graph6),
        ("0 1\n1 2\n2 3\n3 0\n0 2\n", GraphFormat::EdgeList),
    ];
    for (text, format) in inputs {
        let g = load_graph(text, format)?;
        let s = g.stats();
        println!("{:?} {:?}", format, text.replace('\n', "; "));
        println!(
            "  vertices {}, edges {}, max degree {}, diameter {}, tree {}, caterpillar {}",
            s.vertex_count, s.edge_count, s.max_degree, s.diameter, s.is_tree, s.is_caterpillar
        );
        println!("  graph6 {}", g.to_graph6());
        if let Some(cat) = g.to_cat_notation() {
            println!(
                "  caterpillar {cat}, tree code {}",
                canonical_tree_code(&g)?
            );
        }
    }
    Ok(())
}
