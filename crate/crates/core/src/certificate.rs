//! Certificates and their on-disk JSON document format.
//!
//! A certificate names a host (a complete r-uniform hypergraph, an explicit
//! r-graph, or a product of two graphs) and lists the blocks claimed to
//! partition the host's edge or pair set. Files are a single JSON document
//! with fields `{format_version, kind, host, blocks, metadata}`; blocks are
//! arrays of sorted vertex-label arrays, so identical inputs always produce
//! byte-identical files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::blocks::{Biclique, MultipartiteBlock, ProductBlock};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num_util::binomial;

pub const FORMAT_VERSION: u32 = 1;

/// Host of an r-uniform certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniformHost {
    /// K_n^(r): all r-subsets of labels 1..=n.
    Complete { n: u32, r: u32 },
    /// An explicit r-graph.
    Explicit {
        r: u32,
        vertices: BTreeSet<u32>,
        /// sorted, deduplicated, each inner vector sorted and of length r
        edges: Vec<Vec<u32>>,
    },
}

impl UniformHost {
    pub fn complete(n: u32, r: u32) -> Result<Self> {
        if r == 0 || n < r {
            return Err(Error::InvalidArguments(format!(
                "complete uniform host needs n >= r >= 1, got n={n}, r={r}"
            )));
        }
        Ok(UniformHost::Complete { n, r })
    }

    pub fn explicit<I: IntoIterator<Item = Vec<u32>>>(
        r: u32,
        vertices: impl IntoIterator<Item = u32>,
        edges: I,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArguments("r must be positive".into()));
        }
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let mut normalized = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.len() != r as usize {
                return Err(Error::InvalidArguments(format!(
                    "edge {e:?} is not an {r}-set"
                )));
            }
            if let Some(v) = e.iter().find(|v| !vertices.contains(v)) {
                return Err(Error::InvalidArguments(format!(
                    "edge {e:?} uses vertex {v} outside the declared vertex set"
                )));
            }
            normalized.push(e);
        }
        normalized.sort();
        normalized.dedup();
        Ok(UniformHost::Explicit {
            r,
            vertices,
            edges: normalized,
        })
    }

    pub fn r(&self) -> u32 {
        match self {
            UniformHost::Complete { r, .. } => *r,
            UniformHost::Explicit { r, .. } => *r,
        }
    }

    /// Number of host edges.
    pub fn size(&self) -> u128 {
        match self {
            UniformHost::Complete { n, r } => {
                binomial(*n as u64, *r as u64).expect("host size overflows")
            }
            UniformHost::Explicit { edges, .. } => edges.len() as u128,
        }
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        match self {
            UniformHost::Complete { n, .. } => v >= 1 && v <= *n,
            UniformHost::Explicit { vertices, .. } => vertices.contains(&v),
        }
    }
}

/// A claimed partition of the edge set of an r-uniform host into complete
/// r-partite blocks.
#[derive(Clone, Debug)]
pub struct UniformCertificate {
    host: UniformHost,
    blocks: Vec<MultipartiteBlock>,
    metadata: BTreeMap<String, String>,
}

impl UniformCertificate {
    pub fn new(host: UniformHost, blocks: Vec<MultipartiteBlock>) -> Self {
        UniformCertificate {
            host,
            blocks,
            metadata: BTreeMap::new(),
        }
    }

    pub fn host(&self) -> &UniformHost {
        &self.host
    }

    pub fn blocks(&self) -> &[MultipartiteBlock] {
        &self.blocks
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn set_metadata(&mut self, key: &str, value: impl ToString) {
        self.metadata.insert(key.to_string(), value.to_string());
    }

    pub fn with_metadata(mut self, key: &str, value: impl ToString) -> Self {
        self.set_metadata(key, value);
        self
    }
}

/// A claimed partition of E(left) x E(right) into products of bicliques.
#[derive(Clone, Debug)]
pub struct ProductCertificate {
    left: Graph,
    right: Graph,
    blocks: Vec<ProductBlock>,
    metadata: BTreeMap<String, String>,
}

impl ProductCertificate {
    pub fn new(left: Graph, right: Graph, blocks: Vec<ProductBlock>) -> Self {
        ProductCertificate {
            left,
            right,
            blocks,
            metadata: BTreeMap::new(),
        }
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn blocks(&self) -> &[ProductBlock] {
        &self.blocks
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn set_metadata(&mut self, key: &str, value: impl ToString) {
        self.metadata.insert(key.to_string(), value.to_string());
    }

    pub fn with_metadata(mut self, key: &str, value: impl ToString) -> Self {
        self.set_metadata(key, value);
        self
    }

    /// Swaps the two factors of the host and of every block.
    pub fn transposed(&self) -> ProductCertificate {
        ProductCertificate {
            left: self.right.clone(),
            right: self.left.clone(),
            blocks: self.blocks.iter().map(ProductBlock::transposed).collect(),
            metadata: self.metadata.clone(),
        }
    }

    /// Number of pairs in the host set E(left) x E(right).
    pub fn pair_count(&self) -> u128 {
        self.left.edge_count() as u128 * self.right.edge_count() as u128
    }
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Uniform(UniformCertificate),
    Product(ProductCertificate),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Uniform(_) => "r-uniform",
            Certificate::Product(_) => "product",
        }
    }

    pub fn block_count(&self) -> usize {
        match self {
            Certificate::Uniform(c) => c.blocks.len(),
            Certificate::Product(c) => c.blocks.len(),
        }
    }
}

// ---------------------------------------------------------------------------
// document model

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<u32>,
    edges: Vec<[u32; 2]>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            vertices: g.vertices().collect(),
            edges: g.edges().map(|e| [e.lo(), e.hi()]).collect(),
        }
    }
}

impl GraphDoc {
    fn into_graph(self) -> Result<Graph> {
        Graph::from_edges(self.vertices, self.edges.iter().map(|e| (e[0], e[1])))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
enum HostDoc {
    Complete {
        n: u32,
        r: u32,
    },
    Explicit {
        r: u32,
        vertices: Vec<u32>,
        edges: Vec<Vec<u32>>,
    },
    Product {
        left: GraphDoc,
        right: GraphDoc,
    },
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    format_version: u32,
    kind: String,
    host: HostDoc,
    blocks: Vec<Vec<Vec<u32>>>,
    metadata: BTreeMap<String, String>,
}

fn class_doc(set: &BTreeSet<u32>) -> Vec<u32> {
    set.iter().copied().collect()
}

impl From<&Certificate> for CertificateDoc {
    fn from(cert: &Certificate) -> Self {
        match cert {
            Certificate::Uniform(c) => CertificateDoc {
                format_version: FORMAT_VERSION,
                kind: "r-uniform".into(),
                host: match &c.host {
                    UniformHost::Complete { n, r } => HostDoc::Complete { n: *n, r: *r },
                    UniformHost::Explicit { r, vertices, edges } => HostDoc::Explicit {
                        r: *r,
                        vertices: vertices.iter().copied().collect(),
                        edges: edges.clone(),
                    },
                },
                blocks: c
                    .blocks
                    .iter()
                    .map(|b| b.classes().iter().map(class_doc).collect())
                    .collect(),
                metadata: c.metadata.clone(),
            },
            Certificate::Product(c) => CertificateDoc {
                format_version: FORMAT_VERSION,
                kind: "product".into(),
                host: HostDoc::Product {
                    left: (&c.left).into(),
                    right: (&c.right).into(),
                },
                blocks: c
                    .blocks
                    .iter()
                    .map(|b| {
                        vec![
                            class_doc(b.left.class_x()),
                            class_doc(b.left.class_y()),
                            class_doc(b.right.class_x()),
                            class_doc(b.right.class_y()),
                        ]
                    })
                    .collect(),
                metadata: c.metadata.clone(),
            },
        }
    }
}

impl CertificateDoc {
    fn into_certificate(self) -> Result<Certificate> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        match (self.kind.as_str(), self.host) {
            ("r-uniform", HostDoc::Complete { n, r }) => {
                let host = UniformHost::complete(n, r).map_err(format_err)?;
                let blocks = uniform_blocks(self.blocks, r)?;
                Ok(Certificate::Uniform(UniformCertificate {
                    host,
                    blocks,
                    metadata: self.metadata,
                }))
            }
            ("r-uniform", HostDoc::Explicit { r, vertices, edges }) => {
                let host = UniformHost::explicit(r, vertices, edges).map_err(format_err)?;
                let blocks = uniform_blocks(self.blocks, r)?;
                Ok(Certificate::Uniform(UniformCertificate {
                    host,
                    blocks,
                    metadata: self.metadata,
                }))
            }
            ("product", HostDoc::Product { left, right }) => {
                let left = left.into_graph().map_err(format_err)?;
                let right = right.into_graph().map_err(format_err)?;
                let mut blocks = Vec::with_capacity(self.blocks.len());
                for (i, classes) in self.blocks.into_iter().enumerate() {
                    if classes.len() != 4 {
                        return Err(Error::Format(format!(
                            "block {i}: a product block needs 4 classes, got {}",
                            classes.len()
                        )));
                    }
                    let mut it = classes.into_iter();
                    let (lx, ly) = (it.next().unwrap(), it.next().unwrap());
                    let (rx, ry) = (it.next().unwrap(), it.next().unwrap());
                    let left_b = Biclique::new(lx, ly)
                        .map_err(|e| Error::Format(format!("block {i}: {e}")))?;
                    let right_b = Biclique::new(rx, ry)
                        .map_err(|e| Error::Format(format!("block {i}: {e}")))?;
                    blocks.push(ProductBlock::new(left_b, right_b));
                }
                Ok(Certificate::Product(ProductCertificate {
                    left,
                    right,
                    blocks,
                    metadata: self.metadata,
                }))
            }
            (kind, _) => Err(Error::Format(format!(
                "kind {kind:?} does not match the host shape"
            ))),
        }
    }
}

fn format_err(e: Error) -> Error {
    Error::Format(e.to_string())
}

fn uniform_blocks(raw: Vec<Vec<Vec<u32>>>, r: u32) -> Result<Vec<MultipartiteBlock>> {
    let mut blocks = Vec::with_capacity(raw.len());
    for (i, classes) in raw.into_iter().enumerate() {
        if classes.len() != r as usize {
            return Err(Error::Format(format!(
                "block {i}: expected {r} classes, got {}",
                classes.len()
            )));
        }
        blocks.push(
            MultipartiteBlock::new(classes)
                .map_err(|e| Error::Format(format!("block {i}: {e}")))?,
        );
    }
    Ok(blocks)
}

// ---------------------------------------------------------------------------
// io

impl Certificate {
    pub fn to_json(&self) -> String {
        let doc: CertificateDoc = self.into();
        let mut s = serde_json::to_string_pretty(&doc).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        let doc: CertificateDoc =
            serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        doc.into_certificate()
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read_file(path: &Path) -> Result<Certificate> {
        let s = std::fs::read_to_string(path)?;
        Certificate::from_json(&s)
    }
}

/// Writes a graph as the shared `{vertices, edges}` document.
pub fn graph_to_json(g: &Graph) -> String {
    let doc: GraphDoc = g.into();
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    doc.into_graph().map_err(format_err)
}

/// An explicit r-graph document `{r, vertices, edges}` for solver input.
#[derive(Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub r: u32,
    pub vertices: Vec<u32>,
    pub edges: Vec<Vec<u32>>,
}

pub fn hypergraph_from_json(s: &str) -> Result<(u32, BTreeSet<u32>, Vec<Vec<u32>>)> {
    let doc: HypergraphDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    match UniformHost::explicit(doc.r, doc.vertices, doc.edges).map_err(format_err)? {
        UniformHost::Explicit { r, vertices, edges } => Ok((r, vertices, edges)),
        UniformHost::Complete { .. } => unreachable!(),
    }
}
