use crate::combinatorics::SimpleGraph;
use crate::error::{Error, Result};
use crate::gh::gh_to_simplex;
use crate::metric::{index_labels, FiniteMetricSpace, PARTITION_LIMIT};
use crate::oracle;

/// Largest graph for which the brute-force cross-check runs.
pub const GRAPH_ORACLE_LIMIT: usize = 8;

/// Default edge and non-edge distances.
pub const DEFAULT_AB: (f64, f64) = (1.0, 2.0);

fn check_ab(a: f64, b: f64) -> Result<()> {
    if a > 0.0 && a < b && b <= 2.0 * a && b.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidAB { a, b })
    }
}

/// Vertices of `graph` with distance `a` on edges and `b` on non-edges.
pub fn two_distance_space(graph: &SimpleGraph, a: f64, b: f64) -> Result<FiniteMetricSpace> {
    check_ab(a, b)?;
    if graph.n() == 0 {
        return Err(Error::EmptySpace);
    }
    Ok(FiniteMetricSpace::from_fn_unchecked(index_labels(graph.n()), |i, j| {
        if graph.has_edge(i, j) {
            a
        } else {
            b
        }
    }))
}

/// `m + 1` where `m` is the greatest `k` with `2 d_GH(aΔ_k, V) = b`
/// (within `tol`), `m = 0` when there is none.
fn theta_by_gh(graph: &SimpleGraph, a: f64, b: f64, tol: f64) -> Result<usize> {
    let n = graph.n();
    if n > PARTITION_LIMIT {
        return Err(Error::TooLarge {
            what: "graph",
            size: n,
            limit: PARTITION_LIMIT,
        });
    }
    let v = two_distance_space(graph, a, b)?;
    let mut m = 0;
    for k in 1..=n {
        if (2.0 * gh_to_simplex(&v, k, a)? - b).abs() <= tol {
            m = k;
        }
    }
    Ok(m + 1)
}

/// Clique cover number `θ(G)` through distances to simplexes, checked
/// against a minimum clique partition when `n ≤ 8`.
pub fn clique_cover_number(graph: &SimpleGraph, a: f64, b: f64, tol: f64) -> Result<usize> {
    let theta = theta_by_gh(graph, a, b, tol)?;
    if graph.n() <= GRAPH_ORACLE_LIMIT {
        let brute = oracle::clique_cover_brute(graph);
        if brute != theta {
            return Err(Error::OracleMismatch {
                what: "clique cover number",
                left: theta.to_string(),
                right: brute.to_string(),
            });
        }
    }
    Ok(theta)
}

/// Chromatic number `γ(G) = θ(G′)` through distances to simplexes, checked
/// against a minimum proper colouring when `n ≤ 8`.
pub fn chromatic_number(graph: &SimpleGraph, a: f64, b: f64, tol: f64) -> Result<usize> {
    let gamma = theta_by_gh(&graph.complement(), a, b, tol)?;
    if graph.n() <= GRAPH_ORACLE_LIMIT {
        let brute = oracle::chromatic_brute(graph);
        if brute != gamma {
            return Err(Error::OracleMismatch {
                what: "chromatic number",
                left: gamma.to_string(),
                right: brute.to_string(),
            });
        }
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::DEFAULT_TOLERANCE as TOL;

    const A: f64 = DEFAULT_AB.0;
    const B: f64 = DEFAULT_AB.1;

    #[test]
    fn examples() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(clique_cover_number(&p3, A, B, TOL).unwrap(), 2);
        assert_eq!(chromatic_number(&p3, A, B, TOL).unwrap(), 2);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(clique_cover_number(&k4, A, B, TOL).unwrap(), 1);
        assert_eq!(chromatic_number(&k4, A, B, TOL).unwrap(), 4);
        let e4 = SimpleGraph::empty(4);
        assert_eq!(clique_cover_number(&e4, A, B, TOL).unwrap(), 4);
        assert_eq!(chromatic_number(&e4, A, B, TOL).unwrap(), 1);
    }

    #[test]
    fn other_ab() {
        let c5 = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        for (a, b) in [(1.0, 1.5), (2.0, 3.0), (1.0, 2.0)] {
            assert_eq!(clique_cover_number(&c5, a, b, TOL).unwrap(), 3);
            assert_eq!(chromatic_number(&c5, a, b, TOL).unwrap(), 3);
        }
    }

    #[test]
    fn single_vertex_and_errors() {
        let g = SimpleGraph::empty(1);
        assert_eq!(clique_cover_number(&g, A, B, TOL).unwrap(), 1);
        assert_eq!(chromatic_number(&g, A, B, TOL).unwrap(), 1);
        for (a, b) in [(1.0, 1.0), (1.0, 2.5), (2.0, 1.0), (0.0, 0.0)] {
            assert!(matches!(
                clique_cover_number(&g, a, b, TOL),
                Err(Error::InvalidAB { .. })
            ));
        }
        assert!(matches!(
            clique_cover_number(&SimpleGraph::empty(13), A, B, TOL),
            Err(Error::TooLarge { .. })
        ));
    }
}
