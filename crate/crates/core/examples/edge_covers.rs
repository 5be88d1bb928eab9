//! Edge covers of bipartite graphs and the point configurations they describe.

use msgeo::combinatorics::{count_edge_covers, cycle_matching_count, realize_configuration, BipartiteGraph};
use msgeo::io::load_bipartite;

fn main() -> msgeo::Result<()> {
    let c6 = load_bipartite(format!("{}/examples/data/c6.json", env!("CARGO_MANIFEST_DIR")))?;
    for (name, g) in [("C6", c6), ("K2,3", BipartiteGraph::complete(2, 3)), ("C8", BipartiteGraph::cycle(4)?)] {
        let n = count_edge_covers(&g)?;
        let real = realize_configuration(&g)?;
        println!(
            "{name}: {n} edge covers, realized in R^{} with edges at {:.4} and non-edges at {:.4}",
            real.big_n,
            real.edge_distance(),
            real.non_edge_distance()
        );
    }
    for m in [3, 6, 10, 40] {
        println!("matchings of C_{m}: {}", cycle_matching_count(m)?);
    }
    let lonely = BipartiteGraph::new(2, 2, [(0, 0), (1, 0)])?;
    println!("isolated vertex: {:?}", realize_configuration(&lonely).err());
    Ok(())
}
