//! Counting sets in s-position between alternate vertices of regular polygons.

use msgeo::hausdorff::{alternating_polygon, count_s_position_sets, euclidean_configuration, SubsetPair};
use msgeo::DEFAULT_TOLERANCE as TOL;

fn main() -> msgeo::Result<()> {
    for k in [2, 3, 4] {
        let (a, b) = alternating_polygon(k);
        let r = euclidean_configuration(&a, &b, 0.5, TOL)?.r;
        for frac in [0.25, 0.5] {
            let s = frac * r;
            let setup = euclidean_configuration(&a, &b, s, TOL)?;
            let pair = SubsetPair::new(&setup.space, &setup.a, &setup.b)?;
            let n = count_s_position_sets(&pair, &setup.between, s, TOL)?;
            println!(
                "{}-gon, s = {frac} r: {} candidate points, {n} sets",
                2 * k,
                setup.between.len()
            );
        }
    }
    Ok(())
}
