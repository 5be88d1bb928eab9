//! Clique cover and chromatic numbers read off distances to simplexes.

use msgeo::combinatorics::{chromatic_number, clique_cover_number, SimpleGraph};
use msgeo::io::load_graph;
use msgeo::oracle::{chromatic_brute, clique_cover_brute};
use msgeo::DEFAULT_TOLERANCE as TOL;

fn main() -> msgeo::Result<()> {
    let c5 = load_graph(format!("{}/examples/data/c5.json", env!("CARGO_MANIFEST_DIR")))?;
    let petersen = SimpleGraph::new(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
    )?;

    for (name, g) in [("C5", &c5), ("Petersen", &petersen), ("K4", &SimpleGraph::complete(4))] {
        let theta = clique_cover_number(g, 1.0, 2.0, TOL)?;
        let gamma = chromatic_number(g, 1.0, 1.5, TOL)?;
        println!("{name}: theta = {theta}, gamma = {gamma}");
        if g.n() <= 8 {
            println!("  by search: theta = {}, gamma = {}", clique_cover_brute(g), chromatic_brute(g));
        }
    }
    Ok(())
}
