//! Weak graph products and the block-doubling map from product blocks to
//! bicliques over pair vertices.

use std::collections::BTreeSet;

use crate::blocks::{Biclique, MultipartiteBlock, ProductBlock};
use crate::certificate::{ProductCertificate, UniformCertificate, UniformHost};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical integer label for the pair vertex (u, v): with iu and iv the
/// 0-based positions of u and v in the sorted factor vertex lists, the
/// label is iu * |V(h)| + iv + 1.
pub fn pair_vertex_label(g: &Graph, h: &Graph, u: u32, v: u32) -> Result<u32> {
    let iu = g
        .vertex_set()
        .iter()
        .position(|&x| x == u)
        .ok_or_else(|| Error::InvalidArguments(format!("vertex {u} not in the left factor")))?;
    let iv =
        h.vertex_set().iter().position(|&x| x == v).ok_or_else(|| {
            Error::InvalidArguments(format!("vertex {v} not in the right factor"))
        })?;
    Ok((iu * h.vertex_count() + iv) as u32 + 1)
}

/// The weak product g * h: vertices are all pairs, and (u1,v1) ~ (u2,v2)
/// exactly when u1 ~ u2 in g and v1 ~ v2 in h. Has 2 |E(g)| |E(h)| edges.
pub fn weak_product(g: &Graph, h: &Graph) -> Result<Graph> {
    // the pair labels of all vertex pairs are exactly 1..=|V(g)|*|V(h)|
    let n_pairs = (g.vertex_count() * h.vertex_count()) as u32;
    let mut product = Graph::empty(1..=n_pairs);
    for e in g.edges() {
        for f in h.edges() {
            let (u1, u2) = e.endpoints();
            let (v1, v2) = f.endpoints();
            product.insert_edge(
                pair_vertex_label(g, h, u1, v1)?,
                pair_vertex_label(g, h, u2, v2)?,
            )?;
            product.insert_edge(
                pair_vertex_label(g, h, u1, v2)?,
                pair_vertex_label(g, h, u2, v1)?,
            )?;
        }
    }
    Ok(product)
}

fn pair_class(
    g: &Graph,
    h: &Graph,
    xs: &BTreeSet<u32>,
    ys: &BTreeSet<u32>,
) -> Result<BTreeSet<u32>> {
    let mut out = BTreeSet::new();
    for &x in xs {
        for &y in ys {
            out.insert(pair_vertex_label(g, h, x, y)?);
        }
    }
    Ok(out)
}

/// Turns each product block (X1,X2) x (Y1,Y2) into the two bicliques over
/// pair vertices with classes X1*Y1 | X2*Y2 and X1*Y2 | X2*Y1. If the input
/// exactly partitions E(g) x E(h), the 2 |blocks| outputs exactly partition
/// the edge set of the weak product g * h.
pub fn double_blocks(blocks: &[ProductBlock], g: &Graph, h: &Graph) -> Result<Vec<Biclique>> {
    let mut out = Vec::with_capacity(blocks.len() * 2);
    for block in blocks {
        let x1 = block.left.class_x();
        let x2 = block.left.class_y();
        let y1 = block.right.class_x();
        let y2 = block.right.class_y();
        out.push(Biclique::new(
            pair_class(g, h, x1, y1)?,
            pair_class(g, h, x2, y2)?,
        )?);
        out.push(Biclique::new(
            pair_class(g, h, x1, y2)?,
            pair_class(g, h, x2, y1)?,
        )?);
    }
    Ok(out)
}

/// [`double_blocks`] packaged as a 2-uniform certificate over the weak
/// product host, with the pair labeling recorded in the metadata.
pub fn double_blocks_certificate(cert: &ProductCertificate) -> Result<UniformCertificate> {
    let g = cert.left();
    let h = cert.right();
    let product = weak_product(g, h)?;
    let bicliques = double_blocks(cert.blocks(), g, h)?;
    let host = UniformHost::explicit(
        2,
        product.vertices(),
        product
            .edges()
            .map(|e| vec![e.lo(), e.hi()])
            .collect::<Vec<_>>(),
    )?;
    let blocks = bicliques
        .iter()
        .map(MultipartiteBlock::from_biclique)
        .collect();
    let left_order: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
    let right_order: Vec<String> = h.vertices().map(|v| v.to_string()).collect();
    Ok(UniformCertificate::new(host, blocks)
        .with_metadata("construction", "double-blocks")
        .with_metadata(
            "pair_vertex_labeling",
            "label(u,v) = index(u)*|V(right)| + index(v) + 1 over the sorted factor vertex lists",
        )
        .with_metadata("left_vertices", left_order.join(","))
        .with_metadata("right_vertices", right_order.join(",")))
}
