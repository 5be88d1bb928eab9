use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) out of range for {n} vertices"
                )));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i}, {j})")));
            }
        }
        Ok(SimpleGraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Neighbourhood bitmasks, one per vertex. Needs `n ≤ 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    /// The dual graph `G′`: same vertices, complementary edge set.
    pub fn complement(&self) -> Self {
        SimpleGraph {
            n: self.n,
            edges: (0..self.n)
                .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
                .filter(|&(i, j)| !self.has_edge(i, j))
                .collect(),
        }
    }

    /// Graph on vertices `0..n` whose edges are the set bits of `mask`
    /// over the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SimpleGraph {
            n,
            edges: (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, e)| e)
                .collect(),
        }
    }
}

/// Bipartite graph between left vertices `0..p` and right vertices `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    /// Sorted `(left, right)` pairs.
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(p: usize, q: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (l, r) in edges {
            if l >= p || r >= q {
                return Err(Error::InvalidGraph(format!(
                    "edge ({l}, {r}) out of range for parts {p} and {q}"
                )));
            }
            if !set.insert((l, r)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({l}, {r})")));
            }
        }
        Ok(BipartiteGraph {
            p,
            q,
            edges: set.into_iter().collect(),
        })
    }

    pub fn complete(p: usize, q: usize) -> Self {
        BipartiteGraph {
            p,
            q,
            edges: (0..p).flat_map(|l| (0..q).map(move |r| (l, r))).collect(),
        }
    }

    /// The cycle `C_{2k}` with alternate vertices as the two parts, `k ≥ 2`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidGraph(format!("cycle C_{} is not simple", 2 * k)));
        }
        Self::new(k, k, (0..k).flat_map(|i| [(i, i), (i, (i + 1) % k)]))
    }

    /// Graph whose edges are the set bits of `mask` over the pairs
    /// `(l, r)` in lexicographic order.
    pub fn from_mask(p: usize, q: usize, mask: u64) -> Self {
        BipartiteGraph {
            p,
            q,
            edges: (0..p)
                .flat_map(|l| (0..q).map(move |r| (l, r)))
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, e)| e)
                .collect(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.edges.binary_search(&(l, r)).is_ok()
    }

    /// Left neighbours of right vertex `r`, ascending.
    pub fn left_neighbours(&self, r: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == r).map(|e| e.0).collect()
    }

    /// True when no vertex of either part is isolated, which is exactly
    /// when an edge cover exists.
    pub fn has_edge_cover(&self) -> bool {
        let mut left = vec![false; self.p];
        let mut right = vec![false; self.q];
        for &(l, r) in &self.edges {
            left[l] = true;
            right[r] = true;
        }
        left.iter().chain(&right).all(|&c| c)
    }
}
