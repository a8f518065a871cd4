//! Splitting numbers of every order, with the witness sets.
//!
//! cargo run --release --example splitting_numbers

use excessive_index::prelude::*;
use excessive_index::splitting::splitting_number;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (
            "CAT(0,1,1,1,0)",
            load_graph("CAT(0,1,1,1,0)", GraphFormat::CatNotation)?,
            4,
        ),
        ("path with 8 edges", construct::path(8), 4),
        (
            "K6 with pendant edges",
            construct::complete_with_pendants(6),
            4,
        ),
        ("Petersen", construct::petersen(), 5),
    ];
    for (name, g, m) in cases {
        println!("{name}, m = {m}");
        for t in 1..m {
            let r = splitting_number(&g, m, t)?;
            let witness = r
                .certificate
                .map(|c| g.edge_pairs(c.edge_set))
                .unwrap_or_default();
            println!(
                "  s^{t} = {:>2}, bound {}  {witness:?}",
                r.value,
                r.value.div_ceil(t)
            );
        }
    }
    Ok(())
}
