//! Exact index, lower bounds and an explicit cover for a few graphs.
//!
//! cargo run --release --example excessive_index

use excessive_index::prelude::*;

fn show(name: &str, g: &Graph, m: usize) -> Result<(), Error> {
    let r = exact_excessive_index(g, m, &SolveOptions::default())?;
    print!("{name}, m = {m}: {}", r.value);
    let Some(lb) = &r.lower_bounds else {
        if let Some((u, v)) = uncoverable(g, m) {
            println!(" (edge {u}-{v} lies in no {m}-matching)");
        }
        return Ok(());
    };
    println!(
        " (χ' {}, density {}, lower bound {}, compatible {}, {} search nodes)",
        lb.chromatic,
        lb.density,
        lb.max,
        r.value.finite() == Some(compatible_value(g, m)),
        r.nodes
    );
    if let Some(w) = &r.witness {
        validate_cover(g, m, w.matchings()).map_err(Error::Inconsistent)?;
        for mm in w.to_pairs(g) {
            println!("    {mm:?}");
        }
    }
    Ok(())
}

fn uncoverable(g: &Graph, m: usize) -> Option<(usize, usize)> {
    excessive_index::matching::uncoverable_edge(g, m).map(|e| g.edge(e))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show(
        "CAT(0,1,1,1,0)",
        &load_graph("CAT(0,1,1,1,0)", GraphFormat::CatNotation)?,
        4,
    )?;
    show("Petersen", &construct::petersen(), 5)?;
    show(
        "Petersen minus an edge",
        &construct::petersen().without_edge(0)?,
        5,
    )?;
    show("triangle", &construct::complete(3), 2)?;

    let t = load_graph("CAT(1,2,1,0,3,0)", GraphFormat::CatNotation)?;
    let f = tree_index_m4(&t)?;
    println!(
        "CAT(1,2,1,0,3,0) by the tree formula: {} via {:?}",
        f.value, f.method
    );
    Ok(())
}
