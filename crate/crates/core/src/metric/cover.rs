//! Covering and packing numbers of a finite subset.
//!
//! Balls are open and are taken inside the subspace spanned by `subset`:
//! centers are subset points and a ball contains the subset points strictly
//! closer than its radius. "Strictly closer" means `d < r - tol`.

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;

/// Largest subset accepted by the exhaustive searches.
pub const COVER_LIMIT: usize = 20;

fn check_subset(space: &FiniteMetricSpace, subset: &[usize], eps: f64) -> Result<()> {
    if subset.is_empty() {
        return Err(Error::EmptySet);
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidParams(format!("eps must be > 0, got {eps}")));
    }
    if subset.len() > COVER_LIMIT {
        return Err(Error::TooLarge {
            what: "cover/pack search",
            size: subset.len(),
            limit: COVER_LIMIT,
        });
    }
    let mut seen = vec![false; space.len()];
    for &i in subset {
        if i >= space.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: space.len(),
            });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidParams(format!("duplicate index {i}")));
        }
    }
    Ok(())
}

/// Bitmask of subset positions inside the open ball of radius `r` around
/// subset position `c`.
fn ball_masks(space: &FiniteMetricSpace, subset: &[usize], r: f64, tol: f64) -> Vec<u32> {
    subset
        .iter()
        .enumerate()
        .map(|(own, &c)| {
            subset
                .iter()
                .enumerate()
                .filter(|&(k, &z)| k == own || space.dist(c, z) < r - tol)
                .fold(0u32, |m, (k, _)| m | (1 << k))
        })
        .collect()
}

/// Least number of open `eps`-balls centered in `subset` that cover it.
pub fn cov(space: &FiniteMetricSpace, subset: &[usize], eps: f64, tol: f64) -> Result<usize> {
    check_subset(space, subset, eps)?;
    let n = subset.len();
    let balls = ball_masks(space, subset, eps, tol);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    for k in 1..=n {
        if covers_with(&balls, full, k, 0) {
            return Ok(k);
        }
    }
    // each point lies in its own ball, so k = n always succeeds
    unreachable!("a ball always contains its center")
}

fn covers_with(balls: &[u32], full: u32, k: usize, acc: u32) -> bool {
    if acc == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    // the lowest uncovered point must be hit by some chosen ball
    let target = (!acc & full).trailing_zeros() as usize;
    balls
        .iter()
        .filter(|&&b| b & (1 << target) != 0)
        .any(|&b| covers_with(balls, full, k - 1, acc | b))
}

/// Greatest number of pairwise disjoint open `eps/2`-balls centered in
/// `subset`.
pub fn pack(space: &FiniteMetricSpace, subset: &[usize], eps: f64, tol: f64) -> Result<usize> {
    check_subset(space, subset, eps)?;
    let n = subset.len();
    let balls = ball_masks(space, subset, eps / 2.0, tol);
    // conflict[c]: centers whose ball meets the ball of c
    let conflict: Vec<u32> = (0..n)
        .map(|c| {
            (0..n)
                .filter(|&d| balls[c] & balls[d] != 0)
                .fold(0u32, |m, d| m | (1 << d))
        })
        .collect();
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    Ok(max_independent(&conflict, all))
}

fn max_independent(conflict: &[u32], candidates: u32) -> usize {
    if candidates == 0 {
        return 0;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    let with = 1 + max_independent(conflict, rest & !conflict[v]);
    if conflict[v] & rest == 0 {
        return with;
    }
    with.max(max_independent(conflict, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{simplex, PointMetric, DEFAULT_TOLERANCE as TOL};

    fn line(xs: &[f64]) -> FiniteMetricSpace {
        let pts: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
        FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL).unwrap()
    }

    /// Minimum cover by plain subset enumeration.
    fn brute_cov(space: &FiniteMetricSpace, eps: f64) -> usize {
        let n = space.len();
        (1u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|z| {
                    (0..n).any(|c| mask & (1 << c) != 0 && space.dist(c, z) < eps - TOL)
                })
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Maximum packing by plain subset enumeration.
    fn brute_pack(space: &FiniteMetricSpace, eps: f64) -> usize {
        let n = space.len();
        let r = eps / 2.0;
        (1u32..1 << n)
            .filter(|&mask| {
                let cs: Vec<usize> = (0..n).filter(|c| mask & (1 << c) != 0).collect();
                cs.iter().enumerate().all(|(a, &c1)| {
                    cs[a + 1..].iter().all(|&c2| {
                        !(0..n).any(|z| space.dist(c1, z) < r - TOL && space.dist(c2, z) < r - TOL)
                    })
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn line_example() {
        let x = line(&[0.0, 1.0, 2.0, 3.0]);
        let all = [0, 1, 2, 3];
        assert_eq!(cov(&x, &all, 1.5, TOL).unwrap(), 2);
        assert_eq!(pack(&x, &all, 1.5, TOL).unwrap(), 4);
    }

    #[test]
    fn large_eps_gives_one_ball() {
        let x = line(&[0.0, 1.0, 2.5, 7.0]);
        assert_eq!(cov(&x, &[0, 1, 2, 3], 7.5, TOL).unwrap(), 1);
    }

    #[test]
    fn simplex_balls_are_singletons() {
        let d4 = simplex(4, 1.0).unwrap();
        assert_eq!(cov(&d4, &[0, 1, 2, 3], 0.5, TOL).unwrap(), 4);
        assert_eq!(pack(&d4, &[0, 1, 2, 3], 0.5, TOL).unwrap(), 4);
    }

    #[test]
    fn errors() {
        let x = line(&[0.0, 1.0]);
        assert_eq!(cov(&x, &[], 1.0, TOL).unwrap_err(), Error::EmptySet);
        assert!(cov(&x, &[0], 0.0, TOL).is_err());
        assert!(pack(&x, &[0, 0], 1.0, TOL).is_err());
    }

    #[test]
    fn agrees_with_enumeration() {
        let x = line(&[0.0, 0.7, 1.9, 2.0, 3.6, 5.0, 5.4]);
        let all: Vec<usize> = (0..x.len()).collect();
        for eps in [0.2, 0.5, 1.0, 1.3, 2.0, 2.8, 4.0, 6.0] {
            assert_eq!(cov(&x, &all, eps, TOL).unwrap(), brute_cov(&x, eps), "cov eps={eps}");
            assert_eq!(pack(&x, &all, eps, TOL).unwrap(), brute_pack(&x, eps), "pack eps={eps}");
        }
    }

    #[test]
    fn subset_is_its_own_space() {
        let x = line(&[0.0, 1.0, 2.0, 10.0]);
        assert_eq!(cov(&x, &[0, 3], 5.0, TOL).unwrap(), 2);
        assert_eq!(cov(&x, &[0, 1, 2], 5.0, TOL).unwrap(), 1);
    }
}
