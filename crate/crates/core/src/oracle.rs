//! Slow reference implementations used to cross-check the fast routes.

use std::collections::BTreeSet;

use crate::combinatorics::SimpleGraph;
use crate::error::{Error, Result};
use crate::gh::{next_permutation, relation_distortion};
use crate::metric::{FiniteMetricSpace, RgsIter};

/// Largest `#X · #Y` accepted by [`gh_brute`].
pub const GH_BRUTE_LIMIT: usize = 16;

/// `½ min dis R` over every relation `R ⊆ X × Y` surjective onto both
/// sides.
pub fn gh_brute(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<f64> {
    let (n, m) = (x.len(), y.len());
    if n * m > GH_BRUTE_LIMIT {
        return Err(Error::TooLarge {
            what: "relation search",
            size: n * m,
            limit: GH_BRUTE_LIMIT,
        });
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let full_left = (1u32 << n) - 1;
    let full_right = (1u32 << m) - 1;
    let mut best = f64::INFINITY;
    let mut pairs = Vec::with_capacity(all.len());
    for mask in 1u32..1 << all.len() {
        pairs.clear();
        let (mut l, mut r) = (0u32, 0u32);
        for (k, &(i, j)) in all.iter().enumerate() {
            if mask >> k & 1 == 1 {
                pairs.push((i, j));
                l |= 1 << i;
                r |= 1 << j;
            }
        }
        if l == full_left && r == full_right {
            best = best.min(relation_distortion(x, y, &pairs));
        }
    }
    Ok(best / 2.0)
}

/// Minimum number of cliques partitioning the vertex set.
pub fn clique_cover_brute(graph: &SimpleGraph) -> usize {
    let n = graph.n();
    if n == 0 {
        return 0;
    }
    let missing = graph.complement();
    (1..=n)
        .find(|&k| RgsIter::new(n, k).any(|a| missing.edges().iter().all(|&(i, j)| a[i] != a[j])))
        .unwrap_or(n)
}

/// Minimum number of colours in a proper colouring, by backtracking.
pub fn chromatic_brute(graph: &SimpleGraph) -> usize {
    let n = graph.n();
    if n == 0 {
        return 0;
    }
    let adj = graph.adjacency_masks();
    fn colour(v: usize, k: usize, col: &mut [usize], adj: &[u64]) -> bool {
        if v == col.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || col[u] != c) {
                col[v] = c;
                if colour(v + 1, k, col, adj) {
                    return true;
                }
            }
        }
        false
    }
    let mut col = vec![0; n];
    (1..=n).find(|&k| colour(0, k, &mut col, &adj)).unwrap_or(n)
}

/// Matchings of the cycle `C_m` (empty one included) by subset enumeration.
pub fn cycle_matchings_brute(m: usize) -> u64 {
    assert!((3..=24).contains(&m));
    let full = (1u32 << m) - 1;
    // edge k joins vertices k and k + 1 mod m; adjacent edges share a vertex
    let next = |s: u32| ((s << 1) | (s >> (m - 1))) & full;
    (0u32..1 << m).filter(|&s| s & next(s) == 0).count() as u64
}

/// Canonical edge mask of a graph: the least mask over all vertex
/// relabelings.
pub fn canonical_mask(graph: &SimpleGraph) -> u64 {
    let n = graph.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut pos = vec![vec![0usize; n]; n];
    let mut b = 0;
    for i in 0..n {
        for j in i + 1..n {
            pos[i][j] = b;
            pos[j][i] = b;
            b += 1;
        }
    }
    let mut best = u64::MAX;
    loop {
        let mask = graph
            .edges()
            .iter()
            .fold(0u64, |acc, &(i, j)| acc | 1 << pos[perm[i]][perm[j]]);
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// One representative of each isomorphism class of graphs on `n ≤ 6`
/// vertices, ordered by canonical mask.
pub fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 6);
    let pairs = n * n.saturating_sub(1) / 2;
    let classes: BTreeSet<u64> = (0u64..1 << pairs)
        .map(|mask| canonical_mask(&SimpleGraph::from_mask(n, mask)))
        .collect();
    classes
        .into_iter()
        .map(|mask| SimpleGraph::from_mask(n, mask))
        .collect()
}
