//! Spanning trees, the mst-spectrum and Steiner minimal trees.

mod mst;
mod spectrum;
mod steiner;

pub use mst::{mst, mst_length, Tree};
pub use spectrum::{mst_spectrum, mst_spectrum_by_gh, mst_spectrum_by_partitions, GhSpectrum};
pub use steiner::{
    enumerate_topologies, smt_by_networks, smt_by_supersets, topology_count, NetworkResult,
    SteinerTopology, SupersetResult, SUPERSET_LIMIT, TOPOLOGY_LIMIT,
};
