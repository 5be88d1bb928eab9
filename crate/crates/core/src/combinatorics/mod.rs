//! Borsuk partitions, graph numbers via distances to simplexes, edge
//! covers of bipartite graphs and their Euclidean realization.

mod borsuk;
mod covers;
mod graph;
mod numbers;

pub use borsuk::{borsuk_by_gh, borsuk_partitionable};
pub use covers::{
    count_edge_covers, cycle_matching_count, realize_configuration, Realization, CYCLE_LIMIT,
    EDGE_COVER_LIMIT,
};
pub use graph::{BipartiteGraph, SimpleGraph};
pub use numbers::{
    chromatic_number, clique_cover_number, two_distance_space, DEFAULT_AB, GRAPH_ORACLE_LIMIT,
};
