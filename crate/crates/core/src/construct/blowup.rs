//! Growing product certificates to larger complete hosts, and restricting
//! them back down.

use std::collections::{BTreeMap, BTreeSet};

use crate::blocks::ProductBlock;
use crate::certificate::ProductCertificate;
use crate::construct::{star_witness, vertex_range};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::verify_product_partition;

/// Checks that a product host factor is the complete graph on 1..=m and
/// returns m.
fn complete_order(g: &Graph, side: &str) -> Result<u32> {
    let m = g.vertex_count() as u32;
    let contiguous = g.vertex_set().iter().copied().eq(1..=m);
    if m < 2 || !contiguous || !g.is_complete() {
        return Err(Error::InvalidArguments(format!(
            "{side} host must be a complete graph on labels 1..=m with m >= 2"
        )));
    }
    Ok(m)
}

/// Tiles K_{1+(m-1)t} by t copies of K_m that pairwise overlap in the
/// blown-up vertex. Copy s (1-based) maps base label 1 to the whole prefix
/// 1..=1+(m-1)(s-1) and base label 1+x to the single vertex
/// 1+(m-1)(s-1)+x.
fn copy_expansion(m: u32, s: u32) -> BTreeMap<u32, BTreeSet<u32>> {
    let offset = (m - 1) * (s - 1);
    let mut map = BTreeMap::new();
    map.insert(1, vertex_range(1, 1 + offset));
    for x in 1..m {
        map.insert(1 + x, [1 + offset + x].into_iter().collect());
    }
    map
}

/// Inflates an exact product partition of E(K_a) x E(K_b) with c blocks
/// into one of E(K_{1+(a-1)i}) x E(K_{1+(b-1)j}) with exactly c*i*j blocks.
///
/// The right factor is tiled by j translated copies of K_b overlapping in
/// one vertex; each copy carries the base certificate pulled back through
/// the blow-up of that vertex. The left factor is then tiled the same way
/// by i copies of K_a.
pub fn blowup_product(base: &ProductCertificate, i: u32, j: u32) -> Result<ProductCertificate> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidArguments("blow-up needs i, j >= 1".into()));
    }
    let a = complete_order(base.left(), "left")?;
    let b = complete_order(base.right(), "right")?;
    let report = verify_product_partition(base)?;
    if !report.is_exact_partition() {
        return Err(Error::NotExactPartition(
            "blow-up base certificate must partition its host exactly".into(),
        ));
    }

    // extend the right factor: j overlapping copies of K_b
    let mut right_extended: Vec<ProductBlock> = Vec::new();
    for t in 1..=j {
        let expansion = copy_expansion(b, t);
        for block in base.blocks() {
            right_extended.push(ProductBlock::new(
                block.left.clone(),
                block.right.expand(&expansion)?,
            ));
        }
    }

    // extend the left factor: i overlapping copies of K_a
    let mut blocks: Vec<ProductBlock> = Vec::new();
    for s in 1..=i {
        let expansion = copy_expansion(a, s);
        for block in &right_extended {
            blocks.push(ProductBlock::new(
                block.left.expand(&expansion)?,
                block.right.clone(),
            ));
        }
    }

    Ok(ProductCertificate::new(
        Graph::complete(1 + (a - 1) * i)?,
        Graph::complete(1 + (b - 1) * j)?,
        blocks,
    )
    .with_metadata("construction", "blowup")
    .with_metadata("base_blocks", base.blocks().len())
    .with_metadata("i", i)
    .with_metadata("j", j))
}

/// Restricts a product certificate to induced subgraphs of both factors.
/// Block classes are intersected with the kept sets; blocks that lose a
/// class are dropped. Exactness is preserved.
pub fn restrict_product(
    cert: &ProductCertificate,
    keep_left: &BTreeSet<u32>,
    keep_right: &BTreeSet<u32>,
) -> ProductCertificate {
    let blocks = cert
        .blocks()
        .iter()
        .filter_map(|b| b.restrict(keep_left, keep_right))
        .collect();
    ProductCertificate::new(
        cert.left().induced(keep_left),
        cert.right().induced(keep_right),
        blocks,
    )
    .with_metadata("construction", "restricted")
}

/// Star-product partition of E(K_m1) x E(K_m2): (m1-1)(m2-1) blocks.
fn trivial_product(m1: u32, m2: u32) -> Result<ProductCertificate> {
    let left_stars = star_witness(m1)?;
    let right_stars = star_witness(m2)?;
    let mut blocks = Vec::with_capacity(left_stars.len() * right_stars.len());
    for l in &left_stars {
        for r in &right_stars {
            blocks.push(ProductBlock::new(l.clone(), r.clone()));
        }
    }
    Ok(
        ProductCertificate::new(Graph::complete(m1)?, Graph::complete(m2)?, blocks)
            .with_metadata("construction", "star-product"),
    )
}

fn base_candidate(
    base: &ProductCertificate,
    a: u32,
    b: u32,
    m1: u32,
    m2: u32,
) -> Result<ProductCertificate> {
    let i = (m1 - 1).div_ceil(a - 1);
    let j = (m2 - 1).div_ceil(b - 1);
    let grown = blowup_product(base, i, j)?;
    Ok(restrict_product(
        &grown,
        &vertex_range(1, m1),
        &vertex_range(1, m2),
    ))
}

/// The smallest certificate for E(K_m1) x E(K_m2) among the star product
/// and blow-ups of the 14-block base (in both factor orientations)
/// restricted down to the requested orders. Ties go to the star product.
pub fn best_g_certificate(m1: u32, m2: u32) -> Result<ProductCertificate> {
    if m1 < 2 || m2 < 2 {
        return Err(Error::InvalidArguments(
            "best_g_certificate needs m1, m2 >= 2".into(),
        ));
    }
    let base = super::base_k4k6();
    let mut best = trivial_product(m1, m2)?;

    let direct = base_candidate(&base, 4, 6, m1, m2)?;
    if direct.blocks().len() < best.blocks().len() {
        best = direct;
    }
    let transposed = base_candidate(&base, 4, 6, m2, m1)?.transposed();
    if transposed.blocks().len() < best.blocks().len() {
        best = transposed;
    }
    Ok(best.with_metadata("m1", m1).with_metadata("m2", m2))
}
