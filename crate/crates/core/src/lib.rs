//! Partition certificates for complete r-uniform hypergraphs and for
//! products of edge sets, together with exact-cover verification, explicit
//! constructions, complete branch-and-bound solvers, and closed-form bound
//! tables.
//!
//! The objects throughout are *blocks*: complete r-partite r-graphs inside
//! K_n^(r), bicliques inside a graph, and products E(K_a,b) x E(K_c,d)
//! inside E(G) x E(H). A [`Certificate`] lists blocks claimed to partition
//! a host exactly; [`verify::verify_partition`] and friends check such
//! claims by counting every host edge's cover multiplicity.

pub mod blocks;
pub mod bounds;
pub mod certificate;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
mod num_util;
pub mod report;
pub mod transform;
pub mod verify;
pub mod weighted;

pub use blocks::{Biclique, MultipartiteBlock, ProductBlock};
pub use certificate::{Certificate, ProductCertificate, UniformCertificate, UniformHost};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use report::MultiplicityReport;
pub use weighted::{Weight, WeightedGraphList};
