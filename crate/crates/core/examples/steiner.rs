//! Steiner minimal trees in a finite space, by supersets and by full networks.

use msgeo::metric::{FiniteMetricSpace, PointMetric, DEFAULT_TOLERANCE as TOL};
use msgeo::trees::{mst_length, smt_by_networks, smt_by_supersets, topology_count};

fn main() -> msgeo::Result<()> {
    let mut pts = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            pts.push(vec![i as f64, j as f64]);
        }
    }
    let grid = FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL)?;

    for boundary in [vec![0, 2, 6, 8], vec![0, 5, 7], vec![1, 3, 5, 7]] {
        let sup = smt_by_supersets(&grid, &boundary, TOL)?;
        let net = smt_by_networks(&grid, &boundary, TOL)?;
        let mst = mst_length(&grid.subspace(&boundary)?);
        println!("M = {boundary:?} ({} topologies)", topology_count(boundary.len()));
        println!("  MST of M    {mst:.6}");
        println!("  supersets   {:.6} via {:?}", sup.length, sup.vertices);
        println!("  networks    {:.6} placed at {:?}", net.length, net.placement);
    }
    Ok(())
}
