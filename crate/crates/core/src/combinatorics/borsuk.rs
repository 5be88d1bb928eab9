use crate::error::{Error, Result};
use crate::gh::gh_to_simplex;
use crate::metric::{check_partition_args, FiniteMetricSpace, RgsIter};

fn check(space: &FiniteMetricSpace, m: usize, tol: f64) -> Result<f64> {
    let n = space.len();
    if !(2..=n).contains(&m) {
        return Err(Error::InvalidParams(format!(
            "need 2 <= m <= #X = {n}, got m = {m}"
        )));
    }
    let diam = space.diameter();
    if diam <= tol {
        return Err(Error::DegenerateDiameter);
    }
    check_partition_args(n, m)?;
    Ok(diam)
}

/// Whether some partition into `m` blocks has every block diameter at most
/// `diam X − tol`.
pub fn borsuk_partitionable(space: &FiniteMetricSpace, m: usize, tol: f64) -> Result<bool> {
    let diam = check(space, m, tol)?;
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); m];
    Ok(RgsIter::new(space.len(), m).any(|a| {
        blocks.iter_mut().for_each(Vec::clear);
        for (i, &b) in a.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks.iter().all(|blk| space.subset_diameter(blk) <= diam - tol)
    }))
}

/// The same decision through `2 d_GH(λΔ_m, X) < diam X`, `0 < λ < diam X`.
pub fn borsuk_by_gh(space: &FiniteMetricSpace, m: usize, lambda: f64, tol: f64) -> Result<bool> {
    let diam = check(space, m, tol)?;
    if !(lambda > 0.0 && lambda < diam) {
        return Err(Error::InvalidParams(format!(
            "need 0 < lambda < diam = {diam}, got {lambda}"
        )));
    }
    Ok(2.0 * gh_to_simplex(space, m, lambda)? < diam - tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{simplex, DEFAULT_TOLERANCE as TOL};

    fn line() -> FiniteMetricSpace {
        FiniteMetricSpace::from_matrix(&[
            vec![0.0, 1.0, 3.0],
            vec![1.0, 0.0, 2.0],
            vec![3.0, 2.0, 0.0],
        ])
        .unwrap()
    }

    #[test]
    fn examples() {
        let d3 = simplex(3, 1.0).unwrap();
        assert!(!borsuk_partitionable(&d3, 2, TOL).unwrap());
        assert!(!borsuk_by_gh(&d3, 2, 0.5, TOL).unwrap());
        assert!(borsuk_partitionable(&d3, 3, TOL).unwrap());
        assert!(borsuk_by_gh(&d3, 3, 0.5, TOL).unwrap());
        assert!(borsuk_partitionable(&line(), 2, TOL).unwrap());
        assert!(borsuk_by_gh(&line(), 2, 1.5, TOL).unwrap());
    }

    #[test]
    fn errors() {
        let p = FiniteMetricSpace::one_point();
        assert!(matches!(borsuk_partitionable(&p, 1, TOL), Err(Error::InvalidParams(_))));
        assert!(matches!(borsuk_by_gh(&line(), 2, 3.0, TOL), Err(Error::InvalidParams(_))));
        assert!(matches!(borsuk_partitionable(&line(), 4, TOL), Err(Error::InvalidParams(_))));
        let big = simplex(13, 1.0).unwrap();
        assert!(matches!(borsuk_partitionable(&big, 2, TOL), Err(Error::TooLarge { .. })));
    }
}
