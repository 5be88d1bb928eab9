//! Partitions, their diameters, and covering and packing numbers.

use msgeo::metric::{cov, pack, partition_stats, partitions_of, stirling2};
use msgeo::random::{integer_space, seeded};
use msgeo::DEFAULT_TOLERANCE as TOL;

fn main() -> msgeo::Result<()> {
    let mut rng = seeded(7);
    let x = integer_space(&mut rng, 6);
    let all: Vec<usize> = (0..x.len()).collect();
    println!("{:?}", x.matrix());

    for m in 1..=x.len() {
        let (mut best, mut count) = (f64::INFINITY, 0);
        for p in partitions_of(x.len(), m)? {
            best = best.min(partition_stats(&x, &p)?.diam);
            count += 1;
        }
        println!("m = {m}: {count} partitions (S = {}), smallest diam {best}", stirling2(x.len(), m));
    }

    for eps in [4.0, 5.0, 6.0, 9.0] {
        println!(
            "eps = {eps}: pack = {}, cov = {}",
            pack(&x, &all, eps, TOL)?,
            cov(&x, &all, eps, TOL)?
        );
    }
    Ok(())
}
