use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::metric::{FiniteMetricSpace, RgsIter};

/// Largest space size accepted by exhaustive correspondence searches.
pub const GH_LIMIT: usize = 8;

/// A relation between `0..left` and `0..right` whose projections onto both
/// sides are surjective. Pairs are kept sorted and unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Correspondence {
    left: usize,
    right: usize,
    pairs: Vec<(usize, usize)>,
}

impl Correspondence {
    pub fn new(left: usize, right: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        let mut hit_l = vec![false; left];
        let mut hit_r = vec![false; right];
        for &(i, j) in &set {
            if i >= left || j >= right {
                return Err(Error::InvalidCorrespondence(format!(
                    "pair ({i}, {j}) outside {left} x {right}"
                )));
            }
            hit_l[i] = true;
            hit_r[j] = true;
        }
        if let Some(i) = hit_l.iter().position(|h| !h) {
            return Err(Error::InvalidCorrespondence(format!("left point {i} is unmatched")));
        }
        if let Some(j) = hit_r.iter().position(|h| !h) {
            return Err(Error::InvalidCorrespondence(format!("right point {j} is unmatched")));
        }
        Ok(Correspondence {
            left,
            right,
            pairs: set.into_iter().collect(),
        })
    }

    /// `X x Y`.
    pub fn full(left: usize, right: usize) -> Self {
        Correspondence {
            left,
            right,
            pairs: (0..left)
                .flat_map(|i| (0..right).map(move |j| (i, j)))
                .collect(),
        }
    }

    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        Correspondence {
            left: n,
            right: n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    /// `X_1 x Y_{sigma(1)} ∪ ... ∪ X_k x Y_{sigma(k)}` for block lists of
    /// equal length and a block bijection `sigma`.
    pub fn from_blocks(
        left: usize,
        right: usize,
        x_blocks: &[Vec<usize>],
        y_blocks: &[Vec<usize>],
        sigma: &[usize],
    ) -> Result<Self> {
        if x_blocks.len() != y_blocks.len() || sigma.len() != x_blocks.len() {
            return Err(Error::InvalidCorrespondence(
                "block lists and bijection differ in length".into(),
            ));
        }
        let pairs = x_blocks.iter().zip(sigma).flat_map(|(xb, &s)| {
            xb.iter()
                .flat_map(move |&x| y_blocks[s].iter().map(move |&y| (x, y)))
        });
        Self::new(left, right, pairs.collect::<Vec<_>>())
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Inverse relation `Y -> X`.
    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        Correspondence {
            left: self.right,
            right: self.left,
            pairs,
        }
    }

    /// `other ∘ self`: pairs `(x, z)` with some `y` such that `(x, y)` is in
    /// `self` and `(y, z)` in `other`.
    pub fn then(&self, other: &Correspondence) -> Result<Self> {
        if self.right != other.left {
            return Err(Error::InvalidCorrespondence(format!(
                "cannot compose {}x{} with {}x{}",
                self.left, self.right, other.left, other.right
            )));
        }
        let pairs = self.pairs.iter().flat_map(|&(x, y)| {
            other
                .pairs
                .iter()
                .filter(move |&&(y2, _)| y2 == y)
                .map(move |&(_, z)| (x, z))
        });
        Self::new(self.left, other.right, pairs.collect::<Vec<_>>())
    }

    /// Degree of every left and right point.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut dl = vec![0; self.left];
        let mut dr = vec![0; self.right];
        for &(i, j) in &self.pairs {
            dl[i] += 1;
            dr[j] += 1;
        }
        (dl, dr)
    }

    /// Inclusion-minimal among correspondences: every pair has an endpoint
    /// of degree one.
    pub fn is_irreducible(&self) -> bool {
        let (dl, dr) = self.degrees();
        self.pairs.iter().all(|&(i, j)| dl[i] == 1 || dr[j] == 1)
    }

    fn check_sizes(&self, x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<()> {
        if self.left != x.len() || self.right != y.len() {
            return Err(Error::InvalidCorrespondence(format!(
                "correspondence is {}x{} but spaces have {} and {} points",
                self.left,
                self.right,
                x.len(),
                y.len()
            )));
        }
        Ok(())
    }
}

/// `sup |d_X(x, x') - d_Y(y, y')|` over pairs of pairs of an arbitrary
/// relation; 0 for an empty relation.
pub fn relation_distortion(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    pairs: &[(usize, usize)],
) -> f64 {
    let mut d = 0.0f64;
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for &(a2, b2) in &pairs[k + 1..] {
            d = d.max((x.dist(a, a2) - y.dist(b, b2)).abs());
        }
    }
    d
}

/// Distortion of a correspondence.
pub fn distortion(x: &FiniteMetricSpace, y: &FiniteMetricSpace, corr: &Correspondence) -> Result<f64> {
    corr.check_sizes(x, y)?;
    Ok(relation_distortion(x, y, &corr.pairs))
}

/// A single-valued selection from `corr`: every left point goes to its
/// smallest partner.
pub fn extract_map(corr: &Correspondence) -> Vec<usize> {
    let mut f = vec![usize::MAX; corr.left];
    for &(i, j) in &corr.pairs {
        if f[i] == usize::MAX {
            f[i] = j;
        }
    }
    f
}

/// Next permutation in lexicographic order; false after the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

pub(crate) fn blocks_of(assignment: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in assignment.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

pub(crate) fn check_guard(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<()> {
    let size = x.len().max(y.len());
    if size > GH_LIMIT {
        return Err(Error::TooLarge {
            what: "correspondence enumeration",
            size,
            limit: GH_LIMIT,
        });
    }
    Ok(())
}

/// Every irreducible correspondence between `x` and `y`, each exactly once.
///
/// Order: block count `k` ascending, then partitions of `x` and of `y` in
/// RGS order, then block bijections in lexicographic order. Only bijections
/// where every matched block pair has a singleton side are produced.
pub fn enumerate_irreducible(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<impl Iterator<Item = Correspondence>> {
    check_guard(x, y)?;
    let (n, m) = (x.len(), y.len());
    Ok((1..=n.min(m)).flat_map(move |k| {
        RgsIter::new(n, k).flat_map(move |ax| {
            let xb = blocks_of(&ax, k);
            RgsIter::new(m, k).flat_map(move |ay| {
                let yb = blocks_of(&ay, k);
                let xb = xb.clone();
                let mut perms = Vec::new();
                let mut p: Vec<usize> = (0..k).collect();
                loop {
                    if p
                        .iter()
                        .enumerate()
                        .all(|(i, &s)| xb[i].len() == 1 || yb[s].len() == 1)
                    {
                        perms.push(p.clone());
                    }
                    if !next_permutation(&mut p) {
                        break;
                    }
                }
                perms.into_iter().map(move |sigma| {
                    Correspondence::from_blocks(n, m, &xb, &yb, &sigma)
                        .expect("blocks partition both sides")
                })
            })
        })
    }))
}
