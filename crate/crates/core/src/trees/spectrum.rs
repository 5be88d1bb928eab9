//! The mst-spectrum: MST edge lengths in descending order.
//!
//! Three routes compute it:
//!
//! 1. sorting the edges of one minimum spanning tree;
//! 2. `σ_k = max α(D)` over partitions `D` into `k + 1` blocks;
//! 3. `σ_k = λ − 2 d_GH(λΔ_{k+1}, X)` for any `λ ≥ 2 diam X`.

use crate::error::{Error, Result};
use crate::gh::gh_to_simplex;
use crate::metric::{check_partition_args, stats_for_assignment, FiniteMetricSpace, RgsIter};
use crate::trees::mst;

pub fn mst_spectrum(space: &FiniteMetricSpace) -> Result<Vec<f64>> {
    if space.len() < 2 {
        return Err(Error::SingletonSpace);
    }
    let mut s: Vec<f64> = mst(space).edges.iter().map(|e| e.2).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

pub fn mst_spectrum_by_partitions(space: &FiniteMetricSpace) -> Result<Vec<f64>> {
    let n = space.len();
    if n < 2 {
        return Err(Error::SingletonSpace);
    }
    check_partition_args(n, 1)?;
    Ok((1..n)
        .map(|k| {
            RgsIter::new(n, k + 1)
                .map(|a| stats_for_assignment(space, &a).alpha)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect())
}

/// Spectrum obtained from distances to simplexes, with the MST length the
/// same distances give.
#[derive(Debug, Clone, PartialEq)]
pub struct GhSpectrum {
    pub spectrum: Vec<f64>,
    /// `λ(n − 1) − 2 Σ_k d_GH(λΔ_{k+1}, X)`.
    pub mst_length: f64,
}

pub fn mst_spectrum_by_gh(space: &FiniteMetricSpace, lambda: f64) -> Result<GhSpectrum> {
    let n = space.len();
    if n < 2 {
        return Err(Error::SingletonSpace);
    }
    let bound = 2.0 * space.diameter();
    if !(lambda >= bound) {
        return Err(Error::LambdaTooSmall { lambda, bound });
    }
    let mut spectrum = Vec::with_capacity(n - 1);
    let mut sum = 0.0;
    for k in 1..n {
        let d = gh_to_simplex(space, k + 1, lambda)?;
        sum += d;
        spectrum.push(lambda - 2.0 * d);
    }
    Ok(GhSpectrum {
        spectrum,
        mst_length: lambda * (n - 1) as f64 - 2.0 * sum,
    })
}
