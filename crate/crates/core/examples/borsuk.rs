//! Splitting a space into parts of smaller diameter, directly and through simplexes.

use msgeo::combinatorics::{borsuk_by_gh, borsuk_partitionable};
use msgeo::metric::{simplex, FiniteMetricSpace, PointMetric, DEFAULT_TOLERANCE as TOL};

fn report(name: &str, x: &FiniteMetricSpace) -> msgeo::Result<()> {
    let diam = x.diameter();
    for m in 2..=x.len().min(4) {
        let direct = borsuk_partitionable(x, m, TOL)?;
        let via_gh = borsuk_by_gh(x, m, diam / 2.0, TOL)?;
        println!("{name}, m = {m}: {direct} / {via_gh}");
    }
    Ok(())
}

fn main() -> msgeo::Result<()> {
    let hexagon: Vec<Vec<f64>> = (0..6)
        .map(|i| {
            let t = std::f64::consts::PI * i as f64 / 3.0;
            vec![t.cos(), t.sin()]
        })
        .collect();
    let square = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]];

    report("simplex(4)", &simplex(4, 1.0)?)?;
    report("hexagon", &FiniteMetricSpace::from_points(&hexagon, PointMetric::Euclidean, TOL)?)?;
    report("square", &FiniteMetricSpace::from_points(&square, PointMetric::Euclidean, TOL)?)?;
    Ok(())
}
