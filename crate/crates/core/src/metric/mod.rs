//! Finite metric spaces, partitions of their points, and covering numbers.

mod cover;
mod partition;
mod space;

pub use cover::{cov, pack, COVER_LIMIT};
pub use partition::{
    enumerate_partitions, partition_stats, partitions_of, stirling2, Partition, PartitionStats,
    RgsIter, PARTITION_LIMIT,
};
pub(crate) use partition::{check_partition_args, stats_for_assignment};
pub use space::{
    index_labels, scale, simplex, validate_space, FiniteMetricSpace, PointMetric,
    DEFAULT_TOLERANCE,
};
