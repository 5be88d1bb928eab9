//! Points along a Gromov-Hausdorff geodesic built from an optimal correspondence.

use msgeo::gh::{gh_exact, interpolate};
use msgeo::io::load_space;
use msgeo::DEFAULT_TOLERANCE as TOL;

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> msgeo::Result<()> {
    let x = load_space(data("square.json"), TOL)?;
    let y = load_space(data("tripod.json"), TOL)?;
    let best = gh_exact(&x, &y)?;
    let d = best.distance;
    println!("d_GH = {d}");

    for k in 0..=4 {
        let t = k as f64 / 4.0;
        let r = interpolate(&x, &y, &best.witness, t, TOL)?;
        let to_x = gh_exact(&x, &r)?.distance;
        let to_y = gh_exact(&r, &y)?.distance;
        println!(
            "t = {t:.2}: {} points, d(X, R_t) = {to_x:.4} (t d = {:.4}), d(R_t, Y) = {to_y:.4}",
            r.len(),
            t * d
        );
    }
    Ok(())
}
