//! Exact Gromov-Hausdorff distance by search over irreducible
//! correspondences.
//!
//! The search walks the same order as [`enumerate_irreducible`]: block count
//! `k`, partitions of both sides in RGS order, block bijections in
//! lexicographic order. Branches whose partial distortion already reaches
//! the best value are cut, which keeps the first minimiser in that order as
//! the witness.
//!
//! [`enumerate_irreducible`]: super::enumerate_irreducible

use crate::error::Result;
use crate::gh::correspondence::{blocks_of, check_guard, Correspondence};
use crate::metric::{FiniteMetricSpace, RgsIter};

/// Distance together with an optimal correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct GHResult {
    pub distance: f64,
    pub witness: Correspondence,
}

/// X blocks, Y blocks and the block bijection of the incumbent.
type Blocks = (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<usize>);

struct Search<'a> {
    x: &'a FiniteMetricSpace,
    y: &'a FiniteMetricSpace,
    best: f64,
    best_blocks: Option<Blocks>,
}

impl Search<'_> {
    /// Distortion contributed by matching X-block `xi` with Y-block `yj`
    /// against the already matched pair `(xi2, yj2)`.
    fn cross(&self, xi: &[usize], yj: &[usize], xi2: &[usize], yj2: &[usize]) -> f64 {
        let mut d = 0.0f64;
        for &a in xi {
            for &a2 in xi2 {
                let dx = self.x.dist(a, a2);
                for &b in yj {
                    for &b2 in yj2 {
                        d = d.max((dx - self.y.dist(b, b2)).abs());
                    }
                }
            }
        }
        d
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &mut self,
        xb: &[Vec<usize>],
        yb: &[Vec<usize>],
        own: &[f64],
        sigma: &mut Vec<usize>,
        used: &mut [bool],
        running: f64,
    ) {
        let i = sigma.len();
        if i == xb.len() {
            if running < self.best {
                self.best = running;
                self.best_blocks = Some((xb.to_vec(), yb.to_vec(), sigma.clone()));
            }
            return;
        }
        for j in 0..yb.len() {
            if used[j] || (xb[i].len() > 1 && yb[j].len() > 1) {
                continue;
            }
            let mut r = running.max(own[i].max(own[xb.len() + j]));
            if r >= self.best {
                continue;
            }
            for (i2, &j2) in sigma.iter().enumerate() {
                r = r.max(self.cross(&xb[i], &yb[j], &xb[i2], &yb[j2]));
                if r >= self.best {
                    break;
                }
            }
            if r >= self.best {
                continue;
            }
            used[j] = true;
            sigma.push(j);
            self.assign(xb, yb, own, sigma, used, r);
            sigma.pop();
            used[j] = false;
        }
    }
}

/// Exact `d_GH(x, y)` with an optimal witness.
pub fn gh_exact(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<GHResult> {
    check_guard(x, y)?;
    let (n, m) = (x.len(), y.len());
    let mut search = Search {
        x,
        y,
        best: f64::INFINITY,
        best_blocks: None,
    };
    for k in 1..=n.min(m) {
        for ax in RgsIter::new(n, k) {
            let xb = blocks_of(&ax, k);
            let x_diams: Vec<f64> = xb.iter().map(|b| x.subset_diameter(b)).collect();
            let x_floor = x_diams.iter().copied().fold(0.0, f64::max);
            if x_floor >= search.best {
                continue;
            }
            for ay in RgsIter::new(m, k) {
                let yb = blocks_of(&ay, k);
                let mut own = x_diams.clone();
                own.extend(yb.iter().map(|b| y.subset_diameter(b)));
                if own.iter().copied().fold(0.0, f64::max) >= search.best {
                    continue;
                }
                let mut used = vec![false; k];
                let mut sigma = Vec::with_capacity(k);
                search.assign(&xb, &yb, &own, &mut sigma, &mut used, 0.0);
            }
        }
    }
    let (xb, yb, sigma) = search
        .best_blocks
        .expect("k = 1 always yields a correspondence");
    Ok(GHResult {
        distance: search.best / 2.0,
        witness: Correspondence::from_blocks(n, m, &xb, &yb, &sigma)?,
    })
}
