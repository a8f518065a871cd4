//! Builds an optimal edge colouring with near-equal classes, then
//! rebalances a random family of matchings into uniform `m`-matchings.
//!
//! cargo run --example equalized_coloring

use excessive_index::lab::claims::random_budgeted_family;
use excessive_index::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = load_graph("CAT(1,2,1,0,3,0)", GraphFormat::CatNotation)?;
    let c = equalized_coloring(&g);
    println!(
        "χ' = {}, class sizes {:?}, proper {}",
        chromatic_index(&g),
        c.sizes(),
        c.is_proper()
    );
    for (i, class) in c.classes().iter().enumerate() {
        println!("  colour {i}: {:?}", g.edge_pairs(class.edges()));
    }

    let g = construct::cycle(8);
    let m = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let family = (0..100)
        .find_map(|_| random_budgeted_family(&g, m, &mut rng))
        .ok_or("no feasible family found")?;
    let classes = ColorClasses::new(&g, family)?;
    println!("C8, m = {m}: input sizes {:?}", classes.sizes());
    let cover = balance_matchings(&g, &classes, m)?;
    for mm in cover.matchings() {
        println!("  {:?}", g.edge_pairs(mm.edges()));
    }
    Ok(())
}
