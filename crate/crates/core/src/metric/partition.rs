//! Set partitions of point indices and the block functionals built on them.
//!
//! Partitions are enumerated as restricted growth strings (RGS): `a[0] = 0`
//! and `a[i] <= 1 + max(a[..i])`. Each partition into exactly `m` blocks has
//! one such string, and the iterator yields them in lexicographic order, so
//! every consumer sees a deterministic sequence.

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;

/// Largest point count accepted by partition enumeration.
pub const PARTITION_LIMIT: usize = 12;

/// A division of `0..n` into disjoint non-empty blocks.
///
/// Blocks are ordered by their smallest element and each block is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from a block label per element. Labels need not be
    /// canonical; empty label values are skipped.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let n = assignment.len();
        let mut order: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &lab) in assignment.iter().enumerate() {
            match order.iter().position(|&l| l == lab) {
                Some(b) => blocks[b].push(i),
                None => {
                    order.push(lab);
                    blocks.push(vec![i]);
                }
            }
        }
        Partition { n, blocks }
    }

    /// Validates explicit blocks over `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} out of range 0..{n}"
                    )));
                }
                if owner[i] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} appears in more than one block"
                    )));
                }
                owner[i] = b;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("index {i} is not covered")));
        }
        Ok(Self::from_assignment(&owner))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every element.
    pub fn assignment(&self) -> Vec<usize> {
        let mut a = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                a[i] = b;
            }
        }
        a
    }
}

/// Iterator over restricted growth strings of length `n` with exactly `m`
/// distinct values.
#[derive(Debug, Clone)]
pub struct RgsIter {
    m: usize,
    a: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize, m: usize) -> Self {
        let done = m == 0 || m > n;
        let mut it = RgsIter {
            m,
            a: vec![0; n],
            started: false,
            done,
        };
        if !done {
            it.fill_from(1, 0);
        }
        it
    }

    /// Lexicographically smallest completion of `a[..from]`, whose current
    /// maximum label is `max`, that reaches exactly `m` labels.
    fn fill_from(&mut self, from: usize, max: usize) {
        let n = self.a.len();
        let need = self.m - 1 - max;
        let zeros = n - from - need;
        for i in from..from + zeros {
            self.a[i] = 0;
        }
        for (k, i) in (from + zeros..n).enumerate() {
            self.a[i] = max + 1 + k;
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.a.len();
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.a[i - 1]);
        }
        for i in (1..n).rev() {
            let pm = prefix_max[i];
            let v = self.a[i] + 1;
            if v > pm + 1 {
                continue;
            }
            let new_max = pm.max(v);
            if new_max + 1 > self.m || n - 1 - i < self.m - 1 - new_max {
                continue;
            }
            self.a[i] = v;
            self.fill_from(i + 1, new_max);
            return true;
        }
        false
    }
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(self.a.clone())
    }
}

/// Every partition of the points of `space` into exactly `m` blocks, each
/// exactly once, in RGS order.
pub fn enumerate_partitions(
    space: &FiniteMetricSpace,
    m: usize,
) -> Result<impl Iterator<Item = Partition>> {
    partitions_of(space.len(), m)
}

/// Index-only variant of [`enumerate_partitions`].
pub fn partitions_of(n: usize, m: usize) -> Result<impl Iterator<Item = Partition>> {
    check_partition_args(n, m)?;
    Ok(RgsIter::new(n, m).map(|a| Partition::from_assignment(&a)))
}

/// The size guard and block-count range shared by every partition scan.
pub(crate) fn check_partition_args(n: usize, m: usize) -> Result<()> {
    if n > PARTITION_LIMIT {
        return Err(Error::TooLarge {
            what: "partition enumeration",
            size: n,
            limit: PARTITION_LIMIT,
        });
    }
    if m == 0 || m > n {
        return Err(Error::InvalidParams(format!(
            "block count must satisfy 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// Stirling number of the second kind, S(n, m).
pub fn stirling2(n: usize, m: usize) -> u64 {
    let mut row = vec![0u64; m + 1];
    row[0] = 1;
    for _ in 0..n {
        for k in (1..=m).rev() {
            row[k] = k as u64 * row[k] + row[k - 1];
        }
        row[0] = 0;
    }
    row[m]
}

/// Diameter and inter-block functionals of a partition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionStats {
    /// Largest block diameter.
    pub diam: f64,
    /// Smallest distance between points of different blocks; `+inf` for a
    /// single block.
    pub alpha: f64,
    /// Largest distance between points of different blocks; `0` for a single
    /// block.
    pub beta: f64,
}

pub fn partition_stats(space: &FiniteMetricSpace, partition: &Partition) -> Result<PartitionStats> {
    if partition.n() != space.len() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} elements for a space of {} points",
            partition.n(),
            space.len()
        )));
    }
    Ok(stats_for_assignment(space, &partition.assignment()))
}

/// Functionals straight from a block label per point.
pub(crate) fn stats_for_assignment(space: &FiniteMetricSpace, a: &[usize]) -> PartitionStats {
    let n = space.len();
    let mut diam = 0.0f64;
    let mut alpha = f64::INFINITY;
    let mut beta = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let d = space.dist(i, j);
            if a[i] == a[j] {
                diam = diam.max(d);
            } else {
                alpha = alpha.min(d);
                beta = beta.max(d);
            }
        }
    }
    PartitionStats { diam, alpha, beta }
}
