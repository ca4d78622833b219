//! Exact-cover verification of certificates and biclique covers.

use crate::blocks::Biclique;
use crate::certificate::{ProductCertificate, UniformCertificate, UniformHost};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{
    CompleteUniformIndex, ExplicitUniformIndex, GraphEdgeIndex, HostIndex, MultiplicityReport,
    PairIndex, DENSE_HOST_LIMIT,
};

pub type UniformReport = MultiplicityReport<UniformIndex>;
pub type ProductReport = MultiplicityReport<PairIndex>;
pub type CoverReport = MultiplicityReport<GraphEdgeIndex>;

/// Rank translation for either flavour of uniform host.
pub enum UniformIndex {
    Complete(CompleteUniformIndex),
    Explicit(ExplicitUniformIndex),
}

impl HostIndex for UniformIndex {
    type Key = Vec<u32>;

    fn size(&self) -> u64 {
        match self {
            UniformIndex::Complete(i) => i.size(),
            UniformIndex::Explicit(i) => i.size(),
        }
    }

    fn rank(&self, key: &Vec<u32>) -> Option<u64> {
        match self {
            UniformIndex::Complete(i) => i.rank(key),
            UniformIndex::Explicit(i) => i.rank(key),
        }
    }

    fn unrank(&self, rank: u64) -> Vec<u32> {
        match self {
            UniformIndex::Complete(i) => i.unrank(rank),
            UniformIndex::Explicit(i) => i.unrank(rank),
        }
    }
}

const FOREIGN_SAMPLE_CAP: usize = 16;

/// Shared accumulation over ranked block edges.
struct Accumulator<H: HostIndex> {
    host: H,
    dense: Option<Vec<u32>>,
    streamed: Option<Vec<u64>>,
    covered_total: u64,
    foreign_total: u64,
    foreign_samples: Vec<(usize, H::Key)>,
}

impl<H: HostIndex> Accumulator<H> {
    fn new(host: H) -> Self {
        let size = host.size();
        if size <= DENSE_HOST_LIMIT {
            Accumulator {
                host,
                dense: Some(vec![0u32; size as usize]),
                streamed: None,
                covered_total: 0,
                foreign_total: 0,
                foreign_samples: Vec::new(),
            }
        } else {
            Accumulator {
                host,
                dense: None,
                streamed: Some(Vec::new()),
                covered_total: 0,
                foreign_total: 0,
                foreign_samples: Vec::new(),
            }
        }
    }

    fn add(&mut self, block_index: usize, key: H::Key) {
        match self.host.rank(&key) {
            Some(rank) => {
                self.covered_total += 1;
                if let Some(v) = self.dense.as_mut() {
                    v[rank as usize] = v[rank as usize].saturating_add(1);
                } else {
                    self.streamed.as_mut().expect("streamed mode").push(rank);
                }
            }
            None => {
                self.foreign_total += 1;
                if self.foreign_samples.len() < FOREIGN_SAMPLE_CAP {
                    self.foreign_samples.push((block_index, key));
                }
            }
        }
    }

    fn finish(self) -> MultiplicityReport<H> {
        match self.dense {
            Some(counts) => MultiplicityReport::from_dense(
                self.host,
                counts,
                self.covered_total,
                self.foreign_total,
                self.foreign_samples,
            ),
            None => MultiplicityReport::from_streamed(
                self.host,
                self.streamed.expect("streamed mode"),
                self.foreign_total,
                self.foreign_samples,
            ),
        }
    }
}

/// Counts, for every r-set edge of the host, how many blocks contain it.
///
/// Structural problems (a block whose labels fall outside the host vertex
/// set, or whose class count is not r) are errors naming the block index;
/// everything else lands in the report.
pub fn verify_partition(cert: &UniformCertificate) -> Result<UniformReport> {
    let host = cert.host();
    let r = host.r() as usize;
    if let UniformHost::Complete { n, r } = host {
        let size = crate::num_util::binomial(*n as u64, *r as u64)?;
        if size > u64::MAX as u128 {
            return Err(Error::InvalidArguments(
                "host has too many edges to verify".into(),
            ));
        }
    }
    let index = match host {
        UniformHost::Complete { n, r } => UniformIndex::Complete(CompleteUniformIndex::new(*n, *r)),
        UniformHost::Explicit { edges, .. } => {
            UniformIndex::Explicit(ExplicitUniformIndex::new(edges.clone()))
        }
    };
    let mut acc = Accumulator::new(index);
    for (i, block) in cert.blocks().iter().enumerate() {
        if block.r() != r {
            return Err(Error::BlockOutsideHost {
                index: i,
                reason: format!("block has {} classes, host is {r}-uniform", block.r()),
            });
        }
        if let Some(v) = block.vertices().find(|&v| !host.contains_vertex(v)) {
            return Err(Error::BlockOutsideHost {
                index: i,
                reason: format!("vertex {v} is not a host vertex"),
            });
        }
        for edge in block.edges() {
            acc.add(i, edge);
        }
    }
    Ok(acc.finish())
}

/// Counts, for every pair (e, f) in E(left) x E(right), how many product
/// blocks contain it.
pub fn verify_product_partition(cert: &ProductCertificate) -> Result<ProductReport> {
    let index = PairIndex::new(cert.left().sorted_edges(), cert.right().sorted_edges());
    let mut acc = Accumulator::new(index);
    for (i, block) in cert.blocks().iter().enumerate() {
        if let Some(v) = block
            .left
            .vertices()
            .find(|&v| !cert.left().contains_vertex(v))
        {
            return Err(Error::BlockOutsideHost {
                index: i,
                reason: format!("left vertex {v} is not in the left host"),
            });
        }
        if let Some(v) = block
            .right
            .vertices()
            .find(|&v| !cert.right().contains_vertex(v))
        {
            return Err(Error::BlockOutsideHost {
                index: i,
                reason: format!("right vertex {v} is not in the right host"),
            });
        }
        for pair in block.pairs() {
            acc.add(i, pair);
        }
    }
    Ok(acc.finish())
}

/// Per-edge cover counts of a biclique multiset over a host graph.
///
/// A biclique edge that is not a host edge is a structural error, not a
/// report entry.
pub fn cover_multiplicities(host: &Graph, bicliques: &[Biclique]) -> Result<CoverReport> {
    let index = GraphEdgeIndex::new(host.sorted_edges());
    let mut acc = Accumulator::new(index);
    for (i, b) in bicliques.iter().enumerate() {
        for e in b.edges() {
            if !host.contains_edge(e) {
                return Err(Error::CoverOutsideHost {
                    index: i,
                    u: e.lo(),
                    v: e.hi(),
                });
            }
            acc.add(i, e);
        }
    }
    Ok(acc.finish())
}

/// True when a biclique list exactly partitions the host's edge set.
pub fn is_exact_biclique_partition(host: &Graph, bicliques: &[Biclique]) -> bool {
    cover_multiplicities(host, bicliques)
        .map(|r| r.is_exact_partition())
        .unwrap_or(false)
}

/// Sum of per-block edge counts; exact partitions must match the host size.
pub fn total_block_edges(cert: &UniformCertificate) -> u128 {
    cert.blocks().iter().map(|b| b.edge_count()).sum()
}

pub fn total_block_pairs(cert: &ProductCertificate) -> u128 {
    cert.blocks().iter().map(|b| b.pair_count()).sum()
}
