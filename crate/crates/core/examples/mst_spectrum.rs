//! The mst-spectrum of a space computed three independent ways.

use msgeo::io::load_space;
use msgeo::trees::{mst, mst_spectrum, mst_spectrum_by_gh, mst_spectrum_by_partitions};
use msgeo::DEFAULT_TOLERANCE;

fn main() -> msgeo::Result<()> {
    let path = format!("{}/examples/data/line.json", env!("CARGO_MANIFEST_DIR"));
    let x = load_space(path, DEFAULT_TOLERANCE)?;

    let tree = mst(&x);
    println!("MST edges {:?}, length {}", tree.edges, tree.length());

    let by_edges = mst_spectrum(&x)?;
    let by_parts = mst_spectrum_by_partitions(&x)?;
    let by_gh = mst_spectrum_by_gh(&x, 2.0 * x.diameter())?;
    println!("edges      {by_edges:?}");
    println!("partitions {by_parts:?}");
    println!("simplexes  {:?}", by_gh.spectrum);
    println!("MST length from simplex distances: {}", by_gh.mst_length);
    Ok(())
}
