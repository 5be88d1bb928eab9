//! Distances from a space to simplexes, in closed form and by search.

use msgeo::gh::{gh_exact, gh_to_simplex};
use msgeo::metric::{simplex, FiniteMetricSpace, PointMetric, DEFAULT_TOLERANCE};

fn main() -> msgeo::Result<()> {
    let pts = vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 4.0], vec![3.0, 4.0], vec![1.0, 1.0]];
    let x = FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, DEFAULT_TOLERANCE)?;
    println!("diam X = {}", x.diameter());

    for lambda in [1.0, 5.0, 12.0] {
        println!("lambda = {lambda}");
        for m in 1..=6 {
            let closed = gh_to_simplex(&x, m, lambda)?;
            let exact = gh_exact(&simplex(m, lambda)?, &x)?.distance;
            println!("  m = {m}: {closed:.6} vs search {exact:.6}");
        }
    }
    Ok(())
}
