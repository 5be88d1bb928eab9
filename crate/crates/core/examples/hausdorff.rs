//! Hausdorff distance between subsets and the sets lying between them.

use msgeo::hausdorff::{count_s_position_sets, cs_set, hausdorff_distance, is_s_position, SubsetPair};
use msgeo::metric::{FiniteMetricSpace, PointMetric, DEFAULT_TOLERANCE as TOL};

fn main() -> msgeo::Result<()> {
    let pts: Vec<Vec<f64>> = [0.0, 1.0, 2.0, 3.0, 4.0, 6.0].iter().map(|&t| vec![t]).collect();
    let x = FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL)?;

    let (a, b) = (vec![0, 1], vec![4, 5]);
    let pair = SubsetPair::new(&x, &a, &b)?;
    let r = pair.hausdorff();
    println!("d_H({a:?}, {b:?}) = {r}");
    println!("d_H is symmetric: {}", hausdorff_distance(&x, &b, &a)? == r);

    for s in [0.0, 1.0, 2.0, 3.0] {
        let cs = cs_set(&pair, s, TOL)?;
        let n = count_s_position_sets(&pair, &cs, s, TOL)?;
        println!("s = {s}: C_s = {cs:?}, {n} subsets in s-position");
        if !cs.is_empty() {
            println!("  C_s itself in s-position: {}", is_s_position(&pair, &cs, s, TOL)?);
        }
    }
    Ok(())
}
