use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gh::Correspondence;
use crate::metric::FiniteMetricSpace;

/// The intermediate space `R_t` of a correspondence.
///
/// Points are the pairs of `corr` with
/// `d_t((x, y), (x', y')) = (1 − t)|xx'| + t|yy'|`. Pairs closer than `tol`
/// are merged (the first pair in sorted order represents its class), so the
/// result is a metric space. `t = 0` returns `x` and `t = 1` returns `y`.
pub fn interpolate(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    corr: &Correspondence,
    t: f64,
    tol: f64,
) -> Result<FiniteMetricSpace> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::TOutOfRange(t));
    }
    if corr.left_size() != x.len() || corr.right_size() != y.len() {
        return Err(Error::InvalidCorrespondence(format!(
            "correspondence is {}x{} but spaces have {} and {} points",
            corr.left_size(),
            corr.right_size(),
            x.len(),
            y.len()
        )));
    }
    if t == 0.0 {
        return Ok(x.clone());
    }
    if t == 1.0 {
        return Ok(y.clone());
    }
    let pairs = corr.pairs();
    let d = |p: (usize, usize), q: (usize, usize)| (1.0 - t) * x.dist(p.0, q.0) + t * y.dist(p.1, q.1);

    let mut reps: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
    for &p in pairs {
        if !reps.iter().any(|&q| d(p, q) <= tol) {
            reps.push(p);
        }
    }
    let mut labels: Vec<String> = reps
        .iter()
        .map(|&(i, j)| format!("{}~{}", x.label(i), y.label(j)))
        .collect();
    let unique: HashSet<&String> = labels.iter().collect();
    if unique.len() != labels.len() {
        labels = reps.iter().map(|&(i, j)| format!("{i}~{j}")).collect();
    }
    Ok(FiniteMetricSpace::from_fn_unchecked(labels, |a, b| {
        d(reps[a], reps[b])
    }))
}
