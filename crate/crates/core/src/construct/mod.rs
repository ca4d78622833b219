//! Explicit constructions, emitted as verifiable certificates.

mod blowup;
mod oddcover;
mod recursive;
mod schemes;
mod trivial;

pub use blowup::{best_g_certificate, blowup_product, restrict_product};
pub use oddcover::{odd_cover_k6, odd_cover_k8, restrict_bicliques};
pub use recursive::{count_f4_recursive, f2k_lift, f4_recursive, F4_RECURSION_CUTOFF};
pub use schemes::{base_k4k6, base_k4k6_scheme, k3_scheme, k4_scheme};
pub use trivial::{trivial_block_count, trivial_decomposition};

use std::collections::BTreeSet;

use crate::blocks::Biclique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::is_exact_biclique_partition;

/// Star partition of K_n: for each vertex a >= 2 the biclique
/// ({a}, {1..a-1}). Exactly n-1 bicliques.
pub fn star_witness(n: u32) -> Result<Vec<Biclique>> {
    if n == 0 {
        return Err(Error::InvalidArguments("star witness needs n >= 1".into()));
    }
    (2..=n)
        .map(|a| Biclique::new([a], 1..a))
        .collect::<Result<Vec<_>>>()
}

/// An edge partition of K_n into four graphs g0..g3 together with biclique
/// partitions of g1, g2, g3 and of the unions g0+g1, g0+g2, g0+g3.
///
/// Construction validates everything: the four edge sets must partition
/// E(K_n) and every supplied biclique list must exactly partition its graph.
#[derive(Clone, Debug)]
pub struct PartitionScheme {
    n: u32,
    parts: [Graph; 4],
    unions: [Graph; 3],
    wit_parts: [Vec<Biclique>; 3],
    wit_unions: [Vec<Biclique>; 3],
}

impl PartitionScheme {
    pub fn new(
        n: u32,
        parts: [Graph; 4],
        wit_parts: [Vec<Biclique>; 3],
        wit_unions: [Vec<Biclique>; 3],
    ) -> Result<Self> {
        let host = Graph::complete(n)?;
        for (i, g) in parts.iter().enumerate() {
            if !g.vertex_set().is_subset(host.vertex_set()) {
                return Err(Error::InvalidScheme(format!(
                    "g{i} uses vertices outside 1..={n}"
                )));
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !parts[i].is_edge_disjoint(&parts[j]) {
                    return Err(Error::InvalidScheme(format!("g{i} and g{j} share an edge")));
                }
            }
        }
        let total: usize = parts.iter().map(|g| g.edge_count()).sum();
        if total != host.edge_count() {
            return Err(Error::InvalidScheme(format!(
                "parts cover {total} edges, K_{n} has {}",
                host.edge_count()
            )));
        }
        let unions = [
            parts[0].union(&parts[1]),
            parts[0].union(&parts[2]),
            parts[0].union(&parts[3]),
        ];
        for i in 0..3 {
            if !is_exact_biclique_partition(&parts[i + 1], &wit_parts[i]) {
                return Err(Error::InvalidScheme(format!(
                    "witness list for g{} is not an exact partition",
                    i + 1
                )));
            }
            if !is_exact_biclique_partition(&unions[i], &wit_unions[i]) {
                return Err(Error::InvalidScheme(format!(
                    "witness list for g0+g{} is not an exact partition",
                    i + 1
                )));
            }
        }
        Ok(PartitionScheme {
            n,
            parts,
            unions,
            wit_parts,
            wit_unions,
        })
    }

    /// The scheme that puts all of K_n into g1, witnessed by stars.
    /// Yields the 2(n-1) and 3(n-1) product partitions.
    pub fn all_in_g1(n: u32) -> Result<Self> {
        let kn = Graph::complete(n)?;
        let empty = Graph::empty(1..=n);
        let stars = star_witness(n)?;
        PartitionScheme::new(
            n,
            [empty.clone(), kn, empty.clone(), empty],
            [stars.clone(), Vec::new(), Vec::new()],
            [stars, Vec::new(), Vec::new()],
        )
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// g0..g3 in order.
    pub fn part(&self, i: usize) -> &Graph {
        &self.parts[i]
    }

    /// g0+gi for i in 1..=3.
    pub fn union_with_g0(&self, i: usize) -> &Graph {
        &self.unions[i - 1]
    }

    /// Witness partition of gi, i in 1..=3.
    pub fn part_witness(&self, i: usize) -> &[Biclique] {
        &self.wit_parts[i - 1]
    }

    /// Witness partition of g0+gi, i in 1..=3.
    pub fn union_witness(&self, i: usize) -> &[Biclique] {
        &self.wit_unions[i - 1]
    }
}

pub(crate) fn vertex_range(lo: u32, hi: u32) -> BTreeSet<u32> {
    (lo..=hi).collect()
}
