use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Absolute tolerance used for every equality decision unless a call
/// overrides it.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A finite metric space: distinct labels and a validated symmetric
/// distance table.
///
/// Values are immutable once built. The table is stored row-major and is
/// exactly symmetric (the upper triangle is mirrored during validation).
#[derive(Clone, PartialEq)]
pub struct FiniteMetricSpace {
    labels: Vec<String>,
    dist: Vec<f64>,
}

/// Norm used to turn a point cloud into a metric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointMetric {
    Euclidean,
    LInf,
}

impl PointMetric {
    pub fn distance(self, p: &[f64], q: &[f64]) -> f64 {
        match self {
            PointMetric::Euclidean => p
                .iter()
                .zip(q)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
            PointMetric::LInf => p
                .iter()
                .zip(q)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        }
    }
}

/// Checks the metric axioms on `table` and builds the space.
///
/// Diagnostics name the first violated axiom together with the witnessing
/// indices. Entry checks run row by row before the triangle scan.
pub fn validate_space(
    labels: Vec<String>,
    table: &[Vec<f64>],
    tol: f64,
) -> Result<FiniteMetricSpace> {
    let n = table.len();
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                row,
                len: r.len(),
            });
        }
    }
    if labels.len() != n {
        return Err(Error::LabelMismatch {
            labels: labels.len(),
            rows: n,
        });
    }
    let mut seen = HashSet::with_capacity(n);
    for l in &labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }

    for i in 0..n {
        for j in 0..n {
            let d = table[i][j];
            if !d.is_finite() {
                return Err(Error::NonFiniteAt(i, j));
            }
            if i == j {
                if d.abs() > tol {
                    return Err(Error::NonZeroDiagonal(i));
                }
                continue;
            }
            if d < 0.0 {
                return Err(Error::NegativeAt(i, j));
            }
            if (d - table[j][i]).abs() > tol {
                return Err(Error::AsymmetricAt(i.min(j), i.max(j)));
            }
            if d <= tol {
                return Err(Error::ZeroOffDiagonal(i.min(j), i.max(j)));
            }
        }
    }

    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            dist[i * n + j] = table[i][j];
            dist[j * n + i] = table[i][j];
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if dist[i * n + k] > dist[i * n + j] + dist[j * n + k] + tol {
                    return Err(Error::TriangleViolation(i, j, k));
                }
            }
        }
    }
    Ok(FiniteMetricSpace { labels, dist })
}

/// Default labels `"0"`, `"1"`, ... for `n` points.
pub fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FiniteMetricSpace {
    /// Validates a labelled table; see [`validate_space`].
    pub fn new(labels: Vec<String>, table: &[Vec<f64>], tol: f64) -> Result<Self> {
        validate_space(labels, table, tol)
    }

    /// Validates a table with labels `"0"`, `"1"`, ...
    pub fn from_matrix(table: &[Vec<f64>]) -> Result<Self> {
        validate_space(index_labels(table.len()), table, DEFAULT_TOLERANCE)
    }

    /// Builds a space from points of some `R^d` under the given norm.
    ///
    /// Coincident points are rejected as `ZeroOffDiagonal`.
    pub fn from_points(points: &[Vec<f64>], metric: PointMetric, tol: f64) -> Result<Self> {
        if let Some(first) = points.first() {
            if let Some((row, p)) = points
                .iter()
                .enumerate()
                .find(|(_, p)| p.len() != first.len())
            {
                return Err(Error::Parse(format!(
                    "point {row} has dimension {}, expected {}",
                    p.len(),
                    first.len()
                )));
            }
        }
        let table: Vec<Vec<f64>> = points
            .iter()
            .map(|p| points.iter().map(|q| metric.distance(p, q)).collect())
            .collect();
        validate_space(index_labels(points.len()), &table, tol)
    }

    /// The one-point space.
    pub fn one_point() -> Self {
        FiniteMetricSpace {
            labels: vec!["0".to_string()],
            dist: vec![0.0],
        }
    }

    /// Builds a space from a trusted distance function. Callers guarantee
    /// the metric axioms.
    pub(crate) fn from_fn_unchecked(
        labels: Vec<String>,
        mut d: impl FnMut(usize, usize) -> f64,
    ) -> Self {
        let n = labels.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = d(i, j);
                dist[i * n + j] = v;
                dist[j * n + i] = v;
            }
        }
        FiniteMetricSpace { labels, dist }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a space has at least one point.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.len() + j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The distance table as nested rows.
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        (0..n)
            .map(|i| self.dist[i * n..(i + 1) * n].to_vec())
            .collect()
    }

    /// Largest distance; 0 for the one-point space.
    pub fn diameter(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }

    /// Smallest distance between distinct points.
    pub fn eps_min(&self) -> Result<f64> {
        let n = self.len();
        if n < 2 {
            return Err(Error::SingletonSpace);
        }
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                best = best.min(self.dist(i, j));
            }
        }
        Ok(best)
    }

    /// Largest distance among the given points (0 for fewer than two).
    pub fn subset_diameter(&self, idx: &[usize]) -> f64 {
        let mut d = 0.0f64;
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                d = d.max(self.dist(i, j));
            }
        }
        d
    }

    /// Multiplies every distance by `lambda`; `lambda = 0` gives the
    /// one-point space.
    pub fn scale(&self, lambda: f64) -> Result<Self> {
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidParams(format!(
                "scale factor must be finite and >= 0, got {lambda}"
            )));
        }
        if lambda == 0.0 {
            return Ok(Self::one_point());
        }
        Ok(FiniteMetricSpace {
            labels: self.labels.clone(),
            dist: self.dist.iter().map(|d| d * lambda).collect(),
        })
    }

    /// The subspace on `idx`, in the given order. Indices must be distinct.
    pub fn subspace(&self, idx: &[usize]) -> Result<Self> {
        if idx.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.len();
        let mut seen = vec![false; n];
        for &i in idx {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParams(format!("duplicate index {i}")));
            }
        }
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Self::from_fn_unchecked(labels, |a, b| {
            self.dist(idx[a], idx[b])
        }))
    }

    /// An isometric copy with points reordered: new point `k` is old point
    /// `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::InvalidParams(format!(
                "permutation of length {} for {} points",
                perm.len(),
                self.len()
            )));
        }
        self.subspace(perm)
    }

    /// Replaces the labels, keeping the distances.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::LabelMismatch {
                labels: labels.len(),
                rows: self.len(),
            });
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FiniteMetricSpace {
            labels,
            dist: self.dist.clone(),
        })
    }
}

impl fmt::Debug for FiniteMetricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMetricSpace")
            .field("labels", &self.labels)
            .field("matrix", &self.matrix())
            .finish()
    }
}

/// The simplex `lambda * Delta_m`: `m` points, every non-zero distance equal
/// to `lambda`. `simplex(1, 0.0)` is the one-point space.
pub fn simplex(m: usize, lambda: f64) -> Result<FiniteMetricSpace> {
    if m == 0 {
        return Err(Error::InvalidParams("simplex needs m >= 1".into()));
    }
    if m == 1 {
        if !(lambda >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "simplex lambda must be >= 0, got {lambda}"
            )));
        }
        return Ok(FiniteMetricSpace::one_point());
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParams(format!(
            "simplex with {m} points needs lambda > 0, got {lambda}"
        )));
    }
    Ok(FiniteMetricSpace::from_fn_unchecked(index_labels(m), |_, _| lambda))
}

/// `scale` as a free function.
pub fn scale(space: &FiniteMetricSpace, lambda: f64) -> Result<FiniteMetricSpace> {
    space.scale(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[f64]) -> FiniteMetricSpace {
        let pts: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
        FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, DEFAULT_TOLERANCE).unwrap()
    }

    #[test]
    fn two_point_is_valid() {
        let s = FiniteMetricSpace::new(
            vec!["a".into(), "b".into()],
            &[vec![0.0, 3.0], vec![3.0, 0.0]],
            DEFAULT_TOLERANCE,
        )
        .unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.dist(0, 1), 3.0);
    }

    #[test]
    fn asymmetric_is_reported() {
        let e = FiniteMetricSpace::from_matrix(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap_err();
        assert_eq!(e, Error::AsymmetricAt(0, 1));
    }

    #[test]
    fn line_table_is_valid() {
        let s = FiniteMetricSpace::from_matrix(&[
            vec![0.0, 1.0, 3.0],
            vec![1.0, 0.0, 2.0],
            vec![3.0, 2.0, 0.0],
        ])
        .unwrap();
        assert_eq!(s.diameter(), 3.0);
        assert_eq!(s.eps_min().unwrap(), 1.0);
    }

    #[test]
    fn axiom_violations() {
        assert_eq!(
            FiniteMetricSpace::from_matrix(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap_err(),
            Error::NegativeAt(0, 1)
        );
        assert_eq!(
            FiniteMetricSpace::from_matrix(&[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap_err(),
            Error::ZeroOffDiagonal(0, 1)
        );
        assert_eq!(
            FiniteMetricSpace::from_matrix(&[
                vec![0.0, 1.0, 5.0],
                vec![1.0, 0.0, 1.0],
                vec![5.0, 1.0, 0.0]
            ])
            .unwrap_err(),
            Error::TriangleViolation(0, 1, 2)
        );
        assert!(matches!(
            FiniteMetricSpace::from_matrix(&[vec![0.0, 1.0], vec![1.0]]).unwrap_err(),
            Error::NonSquare { .. }
        ));
        assert!(matches!(
            FiniteMetricSpace::new(vec!["a".into()], &[vec![0.0, 1.0], vec![1.0, 0.0]], 1e-9)
                .unwrap_err(),
            Error::LabelMismatch { .. }
        ));
        assert_eq!(
            FiniteMetricSpace::new(
                vec!["a".into(), "a".into()],
                &[vec![0.0, 1.0], vec![1.0, 0.0]],
                1e-9
            )
            .unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn triangle_tolerance_is_overridable() {
        let t = [
            vec![0.0, 1.0, 2.0 + 1e-6],
            vec![1.0, 0.0, 1.0],
            vec![2.0 + 1e-6, 1.0, 0.0],
        ];
        assert!(FiniteMetricSpace::new(index_labels(3), &t, 1e-9).is_err());
        assert!(FiniteMetricSpace::new(index_labels(3), &t, 1e-5).is_ok());
    }

    #[test]
    fn simplexes() {
        assert_eq!(simplex(1, 0.0).unwrap().len(), 1);
        let d3 = simplex(3, 1.0).unwrap();
        assert_eq!(d3.diameter(), 1.0);
        let d4 = simplex(4, 2.5).unwrap();
        assert_eq!(d4.diameter(), 2.5);
        assert_eq!(d4.eps_min().unwrap(), 2.5);
        assert!(matches!(simplex(3, 0.0), Err(Error::InvalidParams(_))));
        assert!(matches!(simplex(2, -1.0), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn scaling() {
        let x = line(&[0.0, 1.0, 3.0]);
        assert_eq!(x.scale(1.0).unwrap(), x);
        let two = FiniteMetricSpace::from_matrix(&[vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        assert_eq!(two.scale(2.0).unwrap().dist(0, 1), 6.0);
        let z = x.scale(0.0).unwrap();
        assert_eq!(z.len(), 1);
        assert!(x.scale(-1.0).is_err());
    }

    #[test]
    fn singleton_scalars() {
        let p = FiniteMetricSpace::one_point();
        assert_eq!(p.diameter(), 0.0);
        assert_eq!(p.eps_min().unwrap_err(), Error::SingletonSpace);
    }

    #[test]
    fn linf_point_cloud() {
        let s = FiniteMetricSpace::from_points(
            &[vec![0.0, 0.0], vec![3.0, 1.0]],
            PointMetric::LInf,
            DEFAULT_TOLERANCE,
        )
        .unwrap();
        assert_eq!(s.dist(0, 1), 3.0);
    }

    #[test]
    fn subspace_and_permutation() {
        let x = line(&[0.0, 1.0, 3.0, 7.0]);
        let s = x.subspace(&[3, 1]).unwrap();
        assert_eq!(s.dist(0, 1), 6.0);
        assert_eq!(s.label(0), "3");
        assert!(x.subspace(&[]).is_err());
        assert!(x.subspace(&[1, 1]).is_err());
        assert!(x.subspace(&[9]).is_err());
        let p = x.permuted(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.diameter(), 7.0);
    }
}
