use crate::combinatorics::BipartiteGraph;
use crate::error::{Error, Result};

/// Edge limit for [`count_edge_covers`].
pub const EDGE_COVER_LIMIT: usize = 24;
/// Largest cycle whose matching count fits in a `u64`.
pub const CYCLE_LIMIT: usize = 92;

/// Number of edge subsets touching every vertex of both parts.
///
/// Depth-first over edges in sorted order; a branch dies as soon as some
/// vertex has seen its last incident edge without being covered.
pub fn count_edge_covers(graph: &BipartiteGraph) -> Result<u64> {
    let edges = graph.edges();
    if edges.len() > EDGE_COVER_LIMIT {
        return Err(Error::TooLarge {
            what: "bipartite edge set",
            size: edges.len(),
            limit: EDGE_COVER_LIMIT,
        });
    }
    if !graph.has_edge_cover() {
        return Ok(0);
    }
    let p = graph.p();
    let nv = p + graph.q();
    // vertices whose last incident edge is edge e
    let mut last = vec![usize::MAX; nv];
    for (e, &(l, r)) in edges.iter().enumerate() {
        last[l] = e;
        last[p + r] = e;
    }
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (v, &e) in last.iter().enumerate() {
        closes[e].push(v);
    }

    fn go(
        e: usize,
        covered: &mut [u32],
        edges: &[(usize, usize)],
        p: usize,
        closes: &[Vec<usize>],
    ) -> u64 {
        if e == edges.len() {
            return 1;
        }
        let (l, r) = (edges[e].0, p + edges[e].1);
        let mut total = 0;
        // skip edge e
        if closes[e].iter().all(|&v| covered[v] > 0) {
            total += go(e + 1, covered, edges, p, closes);
        }
        covered[l] += 1;
        covered[r] += 1;
        total += go(e + 1, covered, edges, p, closes);
        covered[l] -= 1;
        covered[r] -= 1;
        total
    }

    let mut covered = vec![0u32; nv];
    Ok(go(0, &mut covered, edges, p, &closes))
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |c, j| c * (n - j) / (j + 1))
}

/// Number of matchings of the cycle `C_m`, the empty matching included:
/// `Σ_i m/(m−i) · C(m−i, i)` over `0 ≤ i ≤ m/2`.
pub fn cycle_matching_count(m: usize) -> Result<u64> {
    if !(3..=CYCLE_LIMIT).contains(&m) {
        return Err(Error::MOutOfRange(m));
    }
    let m = m as u128;
    let total: u128 = (0..=m / 2)
        .map(|i| m * binomial(m - i, i) / (m - i))
        .sum();
    u64::try_from(total).map_err(|_| Error::MOutOfRange(m as usize))
}

/// A bipartite graph realized in `R^{p+q}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    /// `ν(a_i)` for the left part.
    pub a: Vec<Vec<f64>>,
    /// `ν(b_j)` for the right part.
    pub b: Vec<Vec<f64>>,
    /// `N = 1 + max_j |I_j|`; edges sit at `√(N − 1)`, non-edges at `√(N + 1)`.
    pub big_n: usize,
}

impl Realization {
    pub fn edge_distance(&self) -> f64 {
        ((self.big_n - 1) as f64).sqrt()
    }

    pub fn non_edge_distance(&self) -> f64 {
        ((self.big_n + 1) as f64).sqrt()
    }
}

/// `ν(a_i) = e_i`, `ν(b_j) = √(m_j) e_{p+j} + Σ_{i∈I_j} e_i` with `I_j` the
/// neighbours of `b_j` and `m_j = N − |I_j|`.
pub fn realize_configuration(graph: &BipartiteGraph) -> Result<Realization> {
    if graph.p() == 0 || graph.q() == 0 || !graph.has_edge_cover() {
        return Err(Error::NoEdgeCover);
    }
    let (p, q) = (graph.p(), graph.q());
    let dim = p + q;
    let nbrs: Vec<Vec<usize>> = (0..q).map(|j| graph.left_neighbours(j)).collect();
    let big_n = 1 + nbrs.iter().map(Vec::len).max().unwrap_or(0);
    let a = (0..p)
        .map(|i| {
            let mut v = vec![0.0; dim];
            v[i] = 1.0;
            v
        })
        .collect();
    let b = nbrs
        .iter()
        .enumerate()
        .map(|(j, ij)| {
            let mut v = vec![0.0; dim];
            v[p + j] = ((big_n - ij.len()) as f64).sqrt();
            for &i in ij {
                v[i] = 1.0;
            }
            v
        })
        .collect();
    Ok(Realization { a, b, big_n })
}
