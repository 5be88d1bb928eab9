//! Closed-form Gromov-Hausdorff distances and bounds.

use crate::error::{Error, Result};
use crate::gh::gh_exact;
use crate::metric::{check_partition_args, stats_for_assignment, FiniteMetricSpace, RgsIter};

/// `d_GH` between two 2-point spaces: half the difference of their
/// distances.
pub fn gh_two_point(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<f64> {
    for s in [x, y] {
        if s.len() != 2 {
            return Err(Error::WrongCardinality {
                expected: 2,
                got: s.len(),
            });
        }
    }
    Ok((x.dist(0, 1) - y.dist(0, 1)).abs() / 2.0)
}

fn sorted_triangle(s: &FiniteMetricSpace) -> [f64; 3] {
    let mut d = [s.dist(0, 1), s.dist(0, 2), s.dist(1, 2)];
    d.sort_by(f64::total_cmp);
    d
}

/// `d_GH` between two 3-point spaces: sort each side's three distances
/// ascending and take half the largest coordinate difference.
pub fn gh_three_point(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<f64> {
    for s in [x, y] {
        if s.len() != 3 {
            return Err(Error::WrongCardinality {
                expected: 3,
                got: s.len(),
            });
        }
    }
    let (a, b) = (sorted_triangle(x), sorted_triangle(y));
    Ok(a.iter()
        .zip(&b)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max)
        / 2.0)
}

/// `(½|diam X − diam Y|, ½ max(diam X, diam Y))`, which bracket `d_GH`.
pub fn gh_bounds(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> (f64, f64) {
    let (dx, dy) = (x.diameter(), y.diameter());
    ((dx - dy).abs() / 2.0, dx.max(dy) / 2.0)
}

/// `d_GH(lambda * Delta_m, x)`.
///
/// * `m = 1`: `½ diam X`.
/// * `m > #X`: `½ max(λ, diam X − λ)`.
/// * `m = #X ≥ 2`: `½ max(λ − ε(X), diam X − λ)`.
/// * `2 ≤ m < #X`: `½ min over m-block partitions D of
///   max(diam D, λ − α(D), diam X − λ)`.
///
/// `lambda = 0` stands for the one-point space, and all four cases agree
/// with that reading.
pub fn gh_to_simplex(x: &FiniteMetricSpace, m: usize, lambda: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidParams("simplex needs m >= 1".into()));
    }
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParams(format!(
            "lambda must be finite and >= 0, got {lambda}"
        )));
    }
    let n = x.len();
    let diam = x.diameter();
    if m == 1 {
        return Ok(diam / 2.0);
    }
    if m > n {
        return Ok(lambda.max(diam - lambda) / 2.0);
    }
    if m == n {
        return Ok((lambda - x.eps_min()?).max(diam - lambda) / 2.0);
    }
    // walk RGS strings directly rather than building block lists
    check_partition_args(n, m)?;
    let best = RgsIter::new(n, m)
        .map(|a| {
            let st = stats_for_assignment(x, &a);
            st.diam.max(lambda - st.alpha).max(diam - lambda)
        })
        .fold(f64::INFINITY, f64::min);
    Ok(best / 2.0)
}

/// `(d_GH(λX, λY), λ d_GH(X, Y))`, both computed by exact search.
pub fn gh_scaling_check(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    lambda: f64,
) -> Result<(f64, f64)> {
    let lhs = gh_exact(&x.scale(lambda)?, &y.scale(lambda)?)?.distance;
    let rhs = lambda * gh_exact(x, y)?.distance;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{simplex, PointMetric, DEFAULT_TOLERANCE as TOL};

    fn line(xs: &[f64]) -> FiniteMetricSpace {
        let pts: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
        FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL).unwrap()
    }

    fn two(d: f64) -> FiniteMetricSpace {
        FiniteMetricSpace::from_matrix(&[vec![0.0, d], vec![d, 0.0]]).unwrap()
    }

    fn tri(a: f64, b: f64, c: f64) -> FiniteMetricSpace {
        FiniteMetricSpace::from_matrix(&[vec![0.0, a, b], vec![a, 0.0, c], vec![b, c, 0.0]])
            .unwrap()
    }

    #[test]
    fn two_point() {
        assert_eq!(gh_two_point(&two(3.0), &two(3.0)).unwrap(), 0.0);
        assert_eq!(gh_two_point(&two(3.0), &two(5.0)).unwrap(), 1.0);
        assert_eq!(
            gh_exact(&two(3.0), &two(5.0)).unwrap().distance,
            gh_two_point(&two(3.0), &two(5.0)).unwrap()
        );
        assert!(matches!(
            gh_two_point(&two(1.0), &tri(1.0, 1.0, 1.0)),
            Err(Error::WrongCardinality { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn three_point() {
        let x = tri(1.0, 2.0, 2.0);
        let y = tri(1.0, 1.0, 2.0);
        assert_eq!(gh_three_point(&x, &y).unwrap(), 0.5);
        assert_eq!(gh_exact(&x, &y).unwrap().distance, 0.5);
        assert!(gh_three_point(&x, &two(1.0)).is_err());
    }

    #[test]
    fn bounds() {
        let x = line(&[0.0, 1.0, 3.0]);
        let p = FiniteMetricSpace::one_point();
        assert_eq!(gh_bounds(&p, &x), (1.5, 1.5));
        assert_eq!(gh_bounds(&x, &x).0, 0.0);
        assert_eq!(gh_bounds(&two(3.0), &two(5.0)), (1.0, 2.5));
    }

    #[test]
    fn simplex_examples() {
        assert_eq!(gh_to_simplex(&two(3.0), 3, 1.0).unwrap(), 1.0);
        assert_eq!(
            gh_exact(&simplex(3, 1.0).unwrap(), &two(3.0)).unwrap().distance,
            1.0
        );
        let d4 = simplex(4, 2.0).unwrap();
        assert_eq!(gh_to_simplex(&d4, 4, 2.0).unwrap(), 0.0);
        let x = line(&[0.0, 1.0, 3.0]);
        assert_eq!(gh_to_simplex(&x, 3, 6.0).unwrap(), 2.5);
        assert_eq!(
            gh_exact(&simplex(3, 6.0).unwrap(), &x).unwrap().distance,
            2.5
        );
        assert_eq!(gh_to_simplex(&x, 1, 6.0).unwrap(), 1.5);
        assert!(gh_to_simplex(&x, 0, 1.0).is_err());
        assert!(gh_to_simplex(&x, 2, -1.0).is_err());
    }

    #[test]
    fn simplex_partition_regime() {
        let x = line(&[0.0, 1.0, 3.0, 7.0]);
        for lambda in [0.5, 1.0, 3.0, 7.0, 14.0] {
            for m in 2..4 {
                let exact = gh_exact(&simplex(m, lambda).unwrap(), &x).unwrap().distance;
                let formula = gh_to_simplex(&x, m, lambda).unwrap();
                assert!((exact - formula).abs() <= TOL, "m={m} lambda={lambda}");
            }
        }
    }

    #[test]
    fn scaling() {
        let (a, b) = gh_scaling_check(&two(3.0), &two(5.0), 2.0).unwrap();
        assert_eq!((a, b), (2.0, 2.0));
        let (a, b) = gh_scaling_check(&two(3.0), &two(5.0), 0.0).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
        let x = line(&[0.0, 1.0, 3.0]);
        let (a, b) = gh_scaling_check(&x, &two(5.0), 1.0).unwrap();
        assert_eq!(a, b);
    }
}
