//! Hausdorff distance between subsets of a finite ambient space and the
//! sets lying "between" two subsets.
//!
//! For `r = d_H(A, B)` and `0 <= s <= r`, a non-empty `C` is in s-position
//! between `A` and `B` when `d_H(A, C) = s` and `d_H(C, B) = r - s`. Every
//! such `C` lies inside
//!
//! ```text
//! C_s(A, B) = { x : |xA| <= s, |xB| <= r - s }
//! ```
//!
//! so counting them is a finite subset search over `C_s`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metric::{FiniteMetricSpace, PointMetric};

/// Largest candidate set accepted by [`count_s_position_sets`].
pub const COUNT_LIMIT: usize = 20;

/// Two non-empty index sets of a common ambient space.
#[derive(Debug, Clone)]
pub struct SubsetPair<'a> {
    ambient: &'a FiniteMetricSpace,
    a: Vec<usize>,
    b: Vec<usize>,
}

fn normalize(ambient: &FiniteMetricSpace, idx: &[usize]) -> Result<Vec<usize>> {
    if idx.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut v = idx.to_vec();
    v.sort_unstable();
    v.dedup();
    if let Some(&i) = v.last().filter(|&&i| i >= ambient.len()) {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: ambient.len(),
        });
    }
    Ok(v)
}

impl<'a> SubsetPair<'a> {
    pub fn new(ambient: &'a FiniteMetricSpace, a: &[usize], b: &[usize]) -> Result<Self> {
        Ok(SubsetPair {
            ambient,
            a: normalize(ambient, a)?,
            b: normalize(ambient, b)?,
        })
    }

    pub fn ambient(&self) -> &FiniteMetricSpace {
        self.ambient
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn hausdorff(&self) -> f64 {
        hausdorff_raw(self.ambient, &self.a, &self.b)
    }
}

/// `|xS| = min_{s in S} |xs|`.
pub fn dist_point_set(ambient: &FiniteMetricSpace, i: usize, set: &[usize]) -> Result<f64> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = ambient.len();
    if let Some(&bad) = std::iter::once(&i).chain(set).find(|&&k| k >= n) {
        return Err(Error::IndexOutOfRange { index: bad, len: n });
    }
    Ok(point_set_raw(ambient, i, set))
}

#[inline]
fn point_set_raw(ambient: &FiniteMetricSpace, i: usize, set: &[usize]) -> f64 {
    set.iter()
        .map(|&s| ambient.dist(i, s))
        .fold(f64::INFINITY, f64::min)
}

fn directed(ambient: &FiniteMetricSpace, from: &[usize], to: &[usize]) -> f64 {
    from.iter()
        .map(|&i| point_set_raw(ambient, i, to))
        .fold(0.0, f64::max)
}

fn hausdorff_raw(ambient: &FiniteMetricSpace, a: &[usize], b: &[usize]) -> f64 {
    directed(ambient, a, b).max(directed(ambient, b, a))
}

/// Hausdorff distance between two non-empty index sets.
pub fn hausdorff(pair: &SubsetPair<'_>) -> f64 {
    pair.hausdorff()
}

/// Validating shorthand for [`hausdorff`] on raw index slices.
pub fn hausdorff_distance(ambient: &FiniteMetricSpace, a: &[usize], b: &[usize]) -> Result<f64> {
    SubsetPair::new(ambient, a, b).map(|p| p.hausdorff())
}

fn check_s(s: f64, r: f64, tol: f64) -> Result<()> {
    if !(s >= -tol && s <= r + tol) {
        return Err(Error::SOutOfRange { s, r });
    }
    Ok(())
}

/// The points of the ambient space in `C_s(A, B)`, with closed balls
/// widened by `tol`. May be empty.
pub fn cs_set(pair: &SubsetPair<'_>, s: f64, tol: f64) -> Result<Vec<usize>> {
    let r = pair.hausdorff();
    check_s(s, r, tol)?;
    let amb = pair.ambient;
    Ok((0..amb.len())
        .filter(|&x| {
            point_set_raw(amb, x, &pair.a) <= s + tol
                && point_set_raw(amb, x, &pair.b) <= r - s + tol
        })
        .collect())
}

/// Whether `c` is in s-position between the pair, within `tol`.
pub fn is_s_position(pair: &SubsetPair<'_>, c: &[usize], s: f64, tol: f64) -> Result<bool> {
    if c.is_empty() {
        return Err(Error::EmptyC);
    }
    let c = normalize(pair.ambient, c)?;
    let r = pair.hausdorff();
    check_s(s, r, tol)?;
    Ok(s_position_raw(pair, &c, r, s, tol))
}

fn s_position_raw(pair: &SubsetPair<'_>, c: &[usize], r: f64, s: f64, tol: f64) -> bool {
    (hausdorff_raw(pair.ambient, &pair.a, c) - s).abs() <= tol
        && (hausdorff_raw(pair.ambient, c, &pair.b) - (r - s)).abs() <= tol
}

/// Number of non-empty subsets of `candidates` in s-position between the
/// pair. Exhaustive over `2^|candidates|` subsets.
pub fn count_s_position_sets(
    pair: &SubsetPair<'_>,
    candidates: &[usize],
    s: f64,
    tol: f64,
) -> Result<u64> {
    let r = pair.hausdorff();
    check_s(s, r, tol)?;
    if candidates.is_empty() {
        return Ok(0);
    }
    let cands = normalize(pair.ambient, candidates)?;
    let k = cands.len();
    if k > COUNT_LIMIT {
        return Err(Error::TooLarge {
            what: "s-position subset count",
            size: k,
            limit: COUNT_LIMIT,
        });
    }
    let count = (1u32..1 << k)
        .into_par_iter()
        .filter(|&mask| {
            let c: Vec<usize> = (0..k)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| cands[i])
                .collect();
            s_position_raw(pair, &c, r, s, tol)
        })
        .count();
    Ok(count as u64)
}

/// A finite Euclidean configuration together with its `C_s` points.
///
/// `space` holds the points of `A` first, then `B`, then one point
/// `a + (s / r)(b - a)` for every pair with `|ab| = r`.
#[derive(Debug, Clone)]
pub struct EuclideanSetup {
    pub space: FiniteMetricSpace,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub between: Vec<usize>,
    pub r: f64,
}

/// Builds the ambient space for counting sets in s-position between two
/// point sets of `R^d` forming a configuration (every cross distance at
/// least `d_H(A, B)`). Requires `0 < s < r`.
pub fn euclidean_configuration(
    a_pts: &[Vec<f64>],
    b_pts: &[Vec<f64>],
    s: f64,
    tol: f64,
) -> Result<EuclideanSetup> {
    if a_pts.is_empty() || b_pts.is_empty() {
        return Err(Error::EmptySet);
    }
    let d = |p: &[f64], q: &[f64]| PointMetric::Euclidean.distance(p, q);
    let dir = |from: &[Vec<f64>], to: &[Vec<f64>]| {
        from.iter()
            .map(|p| to.iter().map(|q| d(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    let r = dir(a_pts, b_pts).max(dir(b_pts, a_pts));
    if !(s > tol && s < r - tol) {
        return Err(Error::SOutOfRange { s, r });
    }
    let mut pts: Vec<Vec<f64>> = a_pts.iter().chain(b_pts).cloned().collect();
    let mut between = Vec::new();
    for p in a_pts {
        for q in b_pts {
            let dpq = d(p, q);
            if dpq < r - tol {
                return Err(Error::InvalidParams(format!(
                    "not a configuration: cross distance {dpq} below d_H = {r}"
                )));
            }
            if dpq <= r + tol {
                between.push(pts.len());
                let t = s / r;
                pts.push(p.iter().zip(q).map(|(x, y)| x + t * (y - x)).collect());
            }
        }
    }
    let space = FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, tol)?;
    let na = a_pts.len();
    Ok(EuclideanSetup {
        space,
        a: (0..na).collect(),
        b: (na..na + b_pts.len()).collect(),
        between,
        r,
    })
}

/// Vertices of a regular polygon with `2k` vertices and unit side, split
/// into alternate vertices `(A, B)`.
pub fn alternating_polygon(k: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let m = 2 * k;
    let radius = 1.0 / (2.0 * (std::f64::consts::PI / m as f64).sin());
    let vertex = |i: usize| {
        let t = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
        vec![radius * t.cos(), radius * t.sin()]
    };
    (
        (0..m).step_by(2).map(vertex).collect(),
        (1..m).step_by(2).map(vertex).collect(),
    )
}
