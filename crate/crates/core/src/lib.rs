//! Exact Hausdorff and Gromov-Hausdorff distances on finite metric spaces.
//!
//! Everything here works on small finite spaces by exhaustive search, and
//! most quantities can be reached by two independent routes:
//!
//! * [`metric`]: validated spaces, simplexes, partitions with their `diam`,
//!   `alpha`, `beta` functionals, covering and packing numbers.
//! * [`hausdorff`]: Hausdorff distance between subsets, the sets `C_s(A, B)`
//!   and counts of sets in s-position.
//! * [`gh`]: correspondences and distortion, exact `d_GH` with a witness,
//!   closed forms for simplexes and small spaces, geodesics `R_t`.
//! * [`trees`]: minimum spanning trees, the mst-spectrum by edges, by
//!   partitions and by distances to simplexes, Steiner minimal trees by
//!   supersets and by full Steiner networks.
//! * [`combinatorics`]: generalized Borsuk partitions, clique cover and
//!   chromatic numbers, edge-cover counts and configuration realization.
//!
//! ```
//! use msgeo::metric::{simplex, FiniteMetricSpace};
//! use msgeo::gh::{gh_exact, gh_to_simplex};
//!
//! let x = FiniteMetricSpace::from_matrix(&[
//!     vec![0.0, 1.0, 3.0],
//!     vec![1.0, 0.0, 2.0],
//!     vec![3.0, 2.0, 0.0],
//! ])
//! .unwrap();
//! let d = gh_exact(&simplex(3, 6.0).unwrap(), &x).unwrap().distance;
//! assert_eq!(d, 2.5);
//! assert_eq!(gh_to_simplex(&x, 3, 6.0).unwrap(), 2.5);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod gh;
pub mod hausdorff;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod random;
pub mod selftest;
pub mod trees;

pub use error::{Error, Result};
pub use metric::{FiniteMetricSpace, DEFAULT_TOLERANCE};
