//! Exact Gromov-Hausdorff distance with an optimal correspondence.

use msgeo::gh::{distortion, gh_bounds, gh_exact, Correspondence};
use msgeo::io::{load_correspondence, load_space};
use msgeo::DEFAULT_TOLERANCE;

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> msgeo::Result<()> {
    let square = load_space(data("square.json"), DEFAULT_TOLERANCE)?;
    let tripod = load_space(data("tripod.json"), DEFAULT_TOLERANCE)?;

    let res = gh_exact(&square, &tripod)?;
    let (lo, hi) = gh_bounds(&square, &tripod);
    println!("d_GH(square, tripod) = {}", res.distance);
    println!("bounds [{lo}, {hi}]");
    for &(i, j) in res.witness.pairs() {
        println!("  {} ~ {}", square.label(i), tripod.label(j));
    }

    let hand = load_correspondence(data("corr.json"), square.len(), tripod.len())?;
    println!("hand-made correspondence: dis/2 = {}", distortion(&square, &tripod, &hand)? / 2.0);
    let full = Correspondence::full(square.len(), tripod.len());
    println!("full relation: dis/2 = {}", distortion(&square, &tripod, &full)? / 2.0);
    Ok(())
}
