//! Correspondences, distortion and Gromov-Hausdorff distances.

mod closed;
mod correspondence;
mod exact;
mod geodesic;

pub use closed::{gh_bounds, gh_scaling_check, gh_three_point, gh_to_simplex, gh_two_point};
pub use correspondence::{
    distortion, enumerate_irreducible, extract_map, relation_distortion, Correspondence, GH_LIMIT,
};
pub use exact::{gh_exact, GHResult};
pub(crate) use correspondence::next_permutation;
pub use geodesic::interpolate;
