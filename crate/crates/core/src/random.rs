//! Seeded generators for test spaces, subsets and graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{BipartiteGraph, SimpleGraph};
use crate::metric::{index_labels, FiniteMetricSpace, PointMetric, DEFAULT_TOLERANCE};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn triangle_ok(d: &[Vec<f64>]) -> bool {
    let n = d.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| d[i][k] <= d[i][j] + d[j][k])))
}

/// A space with integer distances in `[1, 9]`, redrawn until the triangle
/// inequality holds. Practical for `n ≤ 7`.
pub fn integer_space(rng: &mut impl Rng, n: usize) -> FiniteMetricSpace {
    loop {
        let mut d = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(1..=9) as f64;
                d[i][j] = v;
                d[j][i] = v;
            }
        }
        if triangle_ok(&d) {
            return FiniteMetricSpace::new(index_labels(n), &d, 0.0)
                .expect("integer table passed the triangle check");
        }
    }
}

/// A space with real distances: shortest-path closure of uniform weights
/// in `[lo, hi]`, `0 < lo ≤ hi`. Works for any `n`.
pub fn real_space(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> FiniteMetricSpace {
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(lo..=hi);
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    FiniteMetricSpace::new(index_labels(n), &d, DEFAULT_TOLERANCE)
        .expect("shortest-path closure is a metric")
}

/// `n` distinct points of the integer grid `[0, side)^dim`.
pub fn grid_points(rng: &mut impl Rng, n: usize, dim: usize, side: i64) -> Vec<Vec<f64>> {
    assert!((side as u128).pow(dim as u32) >= n as u128, "grid too small");
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n);
    while pts.len() < n {
        let p: Vec<f64> = (0..dim).map(|_| rng.gen_range(0..side) as f64).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Euclidean space on random distinct grid points.
pub fn grid_space(rng: &mut impl Rng, n: usize, dim: usize, side: i64) -> FiniteMetricSpace {
    FiniteMetricSpace::from_points(&grid_points(rng, n, dim, side), PointMetric::Euclidean, DEFAULT_TOLERANCE)
        .expect("distinct points")
}

/// Non-empty subset of `0..n`, sorted.
pub fn subset(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let k = rng.gen_range(1..=n);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx.truncate(k);
    idx.sort_unstable();
    idx
}

/// Random permutation of `0..n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Graph with each edge present with probability `1/2`.
pub fn graph(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let pairs = n * n.saturating_sub(1) / 2;
    SimpleGraph::from_mask(n, rng.gen_range(0..1u64 << pairs))
}

/// Bipartite graph with an edge cover, edges kept with probability `1/2`.
pub fn bipartite_with_cover(rng: &mut impl Rng, p: usize, q: usize) -> BipartiteGraph {
    loop {
        let g = BipartiteGraph::from_mask(p, q, rng.gen_range(0..1u64 << (p * q)));
        if g.has_edge_cover() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let a = integer_space(&mut seeded(3), 6);
        let b = integer_space(&mut seeded(3), 6);
        assert_eq!(a, b);
        let d = a.matrix();
        assert!(d.iter().flatten().all(|&v| v == v.round() && v <= 9.0));
        let r = real_space(&mut seeded(1), 10, 0.2, 1.0);
        assert_eq!(r.len(), 10);
        let g = bipartite_with_cover(&mut seeded(5), 3, 3);
        assert!(g.has_edge_cover());
    }
}
