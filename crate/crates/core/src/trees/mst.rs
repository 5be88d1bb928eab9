use crate::metric::FiniteMetricSpace;

/// A spanning tree of the complete distance graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Tree {
    pub n: usize,
    /// `(i, j, length)` with `i < j`, in the order Kruskal accepted them.
    pub edges: Vec<(usize, usize, f64)>,
}

impl Tree {
    pub fn length(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Kruskal's algorithm over all pairs, edges ordered by `(length, i, j)`.
///
/// The edge multiset of lengths does not depend on tie-breaking; the tree
/// itself does.
pub fn mst(space: &FiniteMetricSpace) -> Tree {
    let n = space.len();
    let mut edges: Vec<(usize, usize, f64)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, space.dist(i, j)))
        .collect();
    edges.sort_by(|a, b| a.2.total_cmp(&b.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
    let mut dsu = Dsu::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for e in edges {
        if dsu.union(e.0, e.1) {
            tree.push(e);
            if tree.len() + 1 == n {
                break;
            }
        }
    }
    Tree { n, edges: tree }
}

pub fn mst_length(space: &FiniteMetricSpace) -> f64 {
    mst(space).length()
}

/// MST length of the subspace on `idx` (Prim, `O(k^2)`).
pub(crate) fn mst_length_of(space: &FiniteMetricSpace, idx: &[usize]) -> f64 {
    let k = idx.len();
    if k < 2 {
        return 0.0;
    }
    let mut in_tree = vec![false; k];
    let mut best = vec![f64::INFINITY; k];
    best[0] = 0.0;
    let mut total = 0.0;
    for _ in 0..k {
        let mut u = usize::MAX;
        for v in 0..k {
            if !in_tree[v] && (u == usize::MAX || best[v] < best[u]) {
                u = v;
            }
        }
        in_tree[u] = true;
        total += best[u];
        for v in 0..k {
            if !in_tree[v] {
                best[v] = best[v].min(space.dist(idx[u], idx[v]));
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{simplex, PointMetric, DEFAULT_TOLERANCE as TOL};

    fn line(xs: &[f64]) -> FiniteMetricSpace {
        let pts: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
        FiniteMetricSpace::from_points(&pts, PointMetric::Euclidean, TOL).unwrap()
    }

    #[test]
    fn line_mst() {
        let x = line(&[0.0, 1.0, 3.0, 7.0]);
        let t = mst(&x);
        assert_eq!(t.length(), 7.0);
        let mut lens: Vec<f64> = t.edges.iter().map(|e| e.2).collect();
        lens.sort_by(f64::total_cmp);
        assert_eq!(lens, vec![1.0, 2.0, 4.0]);
        assert_eq!(mst_length_of(&x, &[0, 1, 2, 3]), 7.0);
    }

    #[test]
    fn degenerate_and_uniform() {
        let p = FiniteMetricSpace::one_point();
        assert!(mst(&p).edges.is_empty());
        assert_eq!(mst_length(&p), 0.0);
        let d4 = simplex(4, 1.0).unwrap();
        let t = mst(&d4);
        assert_eq!(t.edges.len(), 3);
        assert_eq!(t.length(), 3.0);
        // lexicographic ties pick the star at 0
        assert_eq!(
            t.edges.iter().map(|e| (e.0, e.1)).collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3)]
        );
    }

    #[test]
    fn tree_is_spanning() {
        let x = line(&[0.0, 2.0, 2.5, 6.0, 6.1, 9.0]);
        let t = mst(&x);
        let mut dsu = Dsu::new(x.len());
        for &(i, j, _) in &t.edges {
            assert!(dsu.union(i, j), "cycle at ({i}, {j})");
        }
        assert_eq!(t.edges.len(), x.len() - 1);
    }
}
