//! Steiner minimal trees inside a finite ambient space.
//!
//! `smt(M, X)` is the least length of a tree whose vertices lie in `X` and
//! include `M`. Two exact routes: the minimum over supersets `M ⊆ V ⊆ X` of
//! `mst(V)`, and the minimum over full Steiner topologies of the cheapest
//! placement of their interior vertices in `X`.

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;
use crate::trees::mst::mst_length_of;

/// Ambient size limit for the superset route.
pub const SUPERSET_LIMIT: usize = 16;
/// Boundary size limit for the network route.
pub const TOPOLOGY_LIMIT: usize = 7;

/// A full Steiner topology on `n` boundary vertices.
///
/// Vertices `0..n` are the boundary (degree 1), `n..2n − 2` are interior
/// (degree 3). For `n = 2` the topology is the single edge `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinerTopology {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SteinerTopology {
    pub fn vertex_count(&self) -> usize {
        2 * self.n - 2
    }

    pub fn interior_count(&self) -> usize {
        self.n - 2
    }

    /// Checks degrees, edge count and connectivity.
    pub fn is_valid(&self) -> bool {
        let v = self.vertex_count();
        if self.n < 2 || self.edges.len() + 1 != v {
            return false;
        }
        let mut deg = vec![0usize; v];
        let mut dsu = crate::trees::mst::Dsu::new(v);
        for &(a, b) in &self.edges {
            if a >= v || b >= v || a == b || !dsu.union(a, b) {
                return false;
            }
            deg[a] += 1;
            deg[b] += 1;
        }
        (0..v).all(|i| deg[i] == if i < self.n { 1 } else { 3 })
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// `(2n − 5)!!` for `n ≥ 3`, and `1` for `n = 2`.
pub fn topology_count(n: usize) -> u64 {
    (3..n).map(|k| (2 * k - 3) as u64).product()
}

/// All full Steiner topologies on `n` labelled boundary vertices, `2 ≤ n ≤ 7`.
///
/// Built by inserting boundary vertex `k` into every edge of each topology
/// on `0..k`; the interior vertex created by that insertion gets label
/// `n + k − 2`.
pub fn enumerate_topologies(n: usize) -> Result<Vec<SteinerTopology>> {
    if !(2..=TOPOLOGY_LIMIT).contains(&n) {
        return Err(Error::NOutOfRange(n));
    }
    if n == 2 {
        return Ok(vec![SteinerTopology {
            n,
            edges: vec![(0, 1)],
        }]);
    }
    let mut level = vec![vec![(0, n), (1, n), (2, n)]];
    for k in 3..n {
        let s = n + k - 2;
        let mut next = Vec::with_capacity(level.len() * (2 * k - 3));
        for edges in &level {
            for (e, &(a, b)) in edges.iter().enumerate() {
                let mut t = edges.clone();
                t[e] = (a, s);
                t.push((b, s));
                t.push((k, s));
                next.push(t);
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|mut edges| {
            for e in &mut edges {
                *e = (e.0.min(e.1), e.0.max(e.1));
            }
            edges.sort_unstable();
            SteinerTopology { n, edges }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupersetResult {
    pub length: f64,
    /// Sorted ambient indices of the optimal superset.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkResult {
    pub length: f64,
    /// `None` when `#M = 1`.
    pub topology: Option<SteinerTopology>,
    /// Ambient index of each topology vertex.
    pub placement: Vec<usize>,
}

fn check_boundary(ambient: &FiniteMetricSpace, m: &[usize]) -> Result<Vec<usize>> {
    if m.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut s = m.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&i) = s.iter().find(|&&i| i >= ambient.len()) {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: ambient.len(),
        });
    }
    Ok(s)
}

/// `min { mst(V) : M ⊆ V ⊆ X }`. Among minimizers within `tol` the
/// lexicographically first sorted `V` is reported.
pub fn smt_by_supersets(
    ambient: &FiniteMetricSpace,
    m: &[usize],
    tol: f64,
) -> Result<SupersetResult> {
    let n = ambient.len();
    if n > SUPERSET_LIMIT {
        return Err(Error::TooLarge {
            what: "ambient space",
            size: n,
            limit: SUPERSET_LIMIT,
        });
    }
    let m = check_boundary(ambient, m)?;
    let free: Vec<usize> = (0..n).filter(|i| m.binary_search(i).is_err()).collect();
    let candidates: Vec<(Vec<usize>, f64)> = (0u32..(1u32 << free.len()))
        .map(|mask| {
            let mut v = m.clone();
            v.extend((0..free.len()).filter(|b| mask >> b & 1 == 1).map(|b| free[b]));
            v.sort_unstable();
            let len = mst_length_of(ambient, &v);
            (v, len)
        })
        .collect();
    let min = candidates.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let (vertices, length) = candidates
        .into_iter()
        .filter(|c| c.1 <= min + tol)
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("M itself is a candidate");
    Ok(SupersetResult { length, vertices })
}

/// Cheapest placement of one topology by dynamic programming on the tree.
fn place(
    ambient: &FiniteMetricSpace,
    boundary: &[usize],
    topo: &SteinerTopology,
) -> (f64, Vec<usize>) {
    let nx = ambient.len();
    let v = topo.vertex_count();
    let adj = topo.adjacency();
    // rooted at boundary vertex 0, children listed in DFS preorder
    let mut order = Vec::with_capacity(v);
    let mut parent = vec![usize::MAX; v];
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in adj[u].iter().rev() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    // cost[u][p]: subtree of u with u at ambient point p
    let mut cost = vec![vec![0.0f64; nx]; v];
    // choice[c][p]: best position of child c given its parent at p
    let mut choice = vec![vec![0usize; nx]; v];
    for &u in order.iter().rev() {
        let mut cu: Vec<f64> = if u < topo.n {
            (0..nx)
                .map(|p| if p == boundary[u] { 0.0 } else { f64::INFINITY })
                .collect()
        } else {
            vec![0.0; nx]
        };
        for &c in &adj[u] {
            if c == parent[u] && u != 0 {
                continue;
            }
            for p in 0..nx {
                if cu[p].is_infinite() {
                    continue;
                }
                let (mut bq, mut bv) = (0, f64::INFINITY);
                for q in 0..nx {
                    let val = cost[c][q] + ambient.dist(p, q);
                    if val < bv {
                        bv = val;
                        bq = q;
                    }
                }
                cu[p] += bv;
                choice[c][p] = bq;
            }
        }
        cost[u] = cu;
    }
    let root = boundary[0];
    let mut placement = vec![0usize; v];
    placement[0] = root;
    for &u in &order[1..] {
        placement[u] = choice[u][placement[parent[u]]];
    }
    (cost[0][root], placement)
}

/// `min` over full Steiner topologies on `M` of the cheapest placement of
/// interior vertices in the ambient space.
///
/// Topologies are tried in [`enumerate_topologies`] order and a later one
/// replaces the incumbent only when shorter by more than `tol`.
pub fn smt_by_networks(
    ambient: &FiniteMetricSpace,
    m: &[usize],
    tol: f64,
) -> Result<NetworkResult> {
    let m = check_boundary(ambient, m)?;
    if m.len() > TOPOLOGY_LIMIT {
        return Err(Error::TooLarge {
            what: "boundary set",
            size: m.len(),
            limit: TOPOLOGY_LIMIT,
        });
    }
    if m.len() == 1 {
        return Ok(NetworkResult {
            length: 0.0,
            topology: None,
            placement: m,
        });
    }
    let mut best: Option<NetworkResult> = None;
    for topo in enumerate_topologies(m.len())? {
        let (length, placement) = place(ambient, &m, &topo);
        if best.as_ref().is_none_or(|b| length < b.length - tol) {
            best = Some(NetworkResult {
                length,
                topology: Some(topo),
                placement,
            });
        }
    }
    Ok(best.expect("at least one topology"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{PointMetric, DEFAULT_TOLERANCE as TOL};
    use std::collections::HashSet;

    fn canonical_prufer(n: usize) -> HashSet<Vec<(usize, usize)>> {
        // trees on 2n − 2 vertices via Prüfer codes, keep those with the
        // right degrees, canonicalize interior labels by sorting over all
        // relabelings
        let v = 2 * n - 2;
        let len = v - 2;
        let mut out = HashSet::new();
        let mut code = vec![n; len];
        loop {
            let mut deg = vec![1usize; v];
            for &c in &code {
                deg[c] += 1;
            }
            if (0..v).all(|i| deg[i] == if i < n { 1 } else { 3 }) {
                let edges = decode(&code, v);
                let mut perm: Vec<usize> = (n..v).collect();
                let mut canon: Option<Vec<(usize, usize)>> = None;
                loop {
                    let map = |x: usize| if x < n { x } else { perm[x - n] };
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| {
                            let (a, b) = (map(a), map(b));
                            (a.min(b), a.max(b))
                        })
                        .collect();
                    e.sort_unstable();
                    if canon.as_ref().is_none_or(|c| e < *c) {
                        canon = Some(e);
                    }
                    if !crate::gh::next_permutation(&mut perm) {
                        break;
                    }
                }
                out.insert(canon.unwrap());
            }
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                code[i] += 1;
                if code[i] < v {
                    break;
                }
                code[i] = n;
            }
        }
    }

    fn decode(code: &[usize], v: usize) -> Vec<(usize, usize)> {
        let mut deg = vec![1usize; v];
        for &c in code {
            deg[c] += 1;
        }
        let mut edges = Vec::new();
        for &c in code {
            let leaf = (0..v).find(|&i| deg[i] == 1).unwrap();
            edges.push((leaf, c));
            deg[leaf] -= 1;
            deg[c] -= 1;
        }
        let rest: Vec<usize> = (0..v).filter(|&i| deg[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges
    }

    fn canon(t: &SteinerTopology) -> Vec<(usize, usize)> {
        let n = t.n;
        let v = t.vertex_count();
        let mut perm: Vec<usize> = (n..v).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let map = |x: usize| if x < n { x } else { perm[x - n] };
            let mut e: Vec<(usize, usize)> = t
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (map(a), map(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|c| e < *c) {
                best = Some(e);
            }
            if !crate::gh::next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap()
    }

    #[test]
    fn topology_counts_and_validity() {
        for n in 2..=7 {
            let ts = enumerate_topologies(n).unwrap();
            assert_eq!(ts.len() as u64, topology_count(n), "n = {n}");
            assert!(ts.iter().all(SteinerTopology::is_valid));
        }
        assert_eq!(topology_count(4), 3);
        assert_eq!(topology_count(7), 945);
        assert_eq!(enumerate_topologies(1).unwrap_err(), Error::NOutOfRange(1));
        assert_eq!(enumerate_topologies(8).unwrap_err(), Error::NOutOfRange(8));
    }

    #[test]
    fn topologies_match_prufer_oracle() {
        for n in 3..=6 {
            let ours: HashSet<_> = enumerate_topologies(n).unwrap().iter().map(canon).collect();
            assert_eq!(ours.len() as u64, topology_count(n), "duplicates at n = {n}");
            assert_eq!(ours, canonical_prufer(n), "n = {n}");
        }
    }

    fn brute_networks(ambient: &FiniteMetricSpace, m: &[usize]) -> f64 {
        if m.len() == 1 {
            return 0.0;
        }
        let nx = ambient.len();
        let mut best = f64::INFINITY;
        for t in enumerate_topologies(m.len()).unwrap() {
            let k = t.interior_count();
            let mut pos = vec![0usize; k];
            loop {
                let at = |u: usize| if u < t.n { m[u] } else { pos[u - t.n] };
                let len: f64 = t.edges.iter().map(|&(a, b)| ambient.dist(at(a), at(b))).sum();
                best = best.min(len);
                let mut i = 0;
                while i < k {
                    pos[i] += 1;
                    if pos[i] < nx {
                        break;
                    }
                    pos[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        best
    }

    fn grid() -> FiniteMetricSpace {
        let mut pts = Vec::new();
        for y in 0..3 {
            for x in 0..3 {
                pts.push(vec![x as f64, y as f64]);
            }
        }
        FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL).unwrap()
    }

    #[test]
    fn grid_routes_agree() {
        let g = grid();
        // corners and the centre
        let m = [0, 2, 6, 8];
        let a = smt_by_supersets(&g, &m, TOL).unwrap();
        let b = smt_by_networks(&g, &m, TOL).unwrap();
        assert!((a.length - 4.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!((a.length - b.length).abs() < 1e-9);
        assert_eq!(a.vertices, vec![0, 2, 4, 6, 8]);
        assert!((b.length - brute_networks(&g, &m)).abs() < 1e-12);
        let p = b.placement;
        let t = b.topology.unwrap();
        let len: f64 = t.edges.iter().map(|&(u, w)| g.dist(p[u], p[w])).sum();
        assert!((len - b.length).abs() < 1e-12);
        for (u, &idx) in m.iter().enumerate() {
            assert_eq!(p[u], idx);
        }
    }

    #[test]
    fn small_cases() {
        let g = grid();
        assert_eq!(smt_by_supersets(&g, &[4], TOL).unwrap().length, 0.0);
        assert_eq!(smt_by_networks(&g, &[4], TOL).unwrap().length, 0.0);
        assert_eq!(smt_by_networks(&g, &[0, 8], TOL).unwrap().length, g.dist(0, 8));
        assert_eq!(smt_by_supersets(&g, &[0, 1, 2], TOL).unwrap().length, 2.0);
        assert_eq!(smt_by_supersets(&g, &[], TOL).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn dp_matches_placement_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let nx = rng.gen_range(3..=7);
            let pts: Vec<Vec<f64>> = (0..nx)
                .map(|_| vec![rng.gen_range(0..6) as f64, rng.gen_range(0..6) as f64])
                .collect();
            let Ok(x) = FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL) else {
                continue;
            };
            let k = rng.gen_range(2..=nx.min(4));
            let m: Vec<usize> = (0..k).collect();
            let dp = smt_by_networks(&x, &m, TOL).unwrap().length;
            assert!((dp - brute_networks(&x, &m)).abs() < 1e-12);
            let sup = smt_by_supersets(&x, &m, TOL).unwrap().length;
            assert!((dp - sup).abs() < 1e-9, "{dp} vs {sup}");
        }
    }
}
