//! Product partitions of E(K_3) x E(K_n) and E(K_4) x E(K_n) driven by a
//! four-part partition scheme of K_n.

use crate::blocks::{Biclique, ProductBlock};
use crate::certificate::ProductCertificate;
use crate::construct::PartitionScheme;
use crate::error::Result;
use crate::graph::Graph;

/// For each i, the star of K_3 at vertex i and the opposite single edge.
/// Star and opposite edge partition E(K_3).
fn k3_left_parts() -> [(Biclique, Biclique); 3] {
    let star = |i: u32, a: u32, b: u32| Biclique::new([i], [a, b]).expect("disjoint");
    let edge = |a: u32, b: u32| Biclique::new([a], [b]).expect("disjoint");
    [
        (star(1, 2, 3), edge(2, 3)),
        (star(2, 1, 3), edge(1, 3)),
        (star(3, 1, 2), edge(1, 2)),
    ]
}

/// For each i, a 4-cycle of K_4 (as the biclique pairing two complementary
/// vertex pairs) and the complementary perfect matching (two single edges).
fn k4_left_parts() -> [(Biclique, [Biclique; 2]); 3] {
    let pair = |a: u32, b: u32, c: u32, d: u32| Biclique::new([a, b], [c, d]).expect("disjoint");
    let edge = |a: u32, b: u32| Biclique::new([a], [b]).expect("disjoint");
    [
        (pair(1, 2, 3, 4), [edge(1, 2), edge(3, 4)]),
        (pair(1, 3, 2, 4), [edge(1, 3), edge(2, 4)]),
        (pair(1, 4, 2, 3), [edge(1, 4), edge(2, 3)]),
    ]
}

/// Product partition of E(K_3) x E(K_n) from a partition scheme.
///
/// For each i = 1,2,3 the scheme's witness of g_i is crossed with the star
/// of K_3 at i, and the witness of g0+g_i with the single edge opposite i.
/// Block count is the sum of all six witness sizes.
pub fn k3_scheme(scheme: &PartitionScheme) -> Result<ProductCertificate> {
    let left_parts = k3_left_parts();
    let mut blocks = Vec::new();
    for (i, (star, _)) in left_parts.iter().enumerate() {
        for b in scheme.part_witness(i + 1) {
            blocks.push(ProductBlock::new(star.clone(), b.clone()));
        }
    }
    for (i, (_, opposite)) in left_parts.iter().enumerate() {
        for b in scheme.union_witness(i + 1) {
            blocks.push(ProductBlock::new(opposite.clone(), b.clone()));
        }
    }
    Ok(
        ProductCertificate::new(Graph::complete(3)?, Graph::complete(scheme.n())?, blocks)
            .with_metadata("construction", "k3-scheme")
            .with_metadata("n", scheme.n()),
    )
}

/// Product partition of E(K_4) x E(K_n) from a partition scheme.
///
/// The witness of g_i is crossed with the i-th 4-cycle of K_4; the witness
/// of g0+g_i with each of the two matching edges complementary to that
/// cycle. Block count is sum_i (|wit(g_i)| + 2 |wit(g0+g_i)|).
pub fn k4_scheme(scheme: &PartitionScheme) -> Result<ProductCertificate> {
    let left_parts = k4_left_parts();
    let mut blocks = Vec::new();
    for (i, (cycle, _)) in left_parts.iter().enumerate() {
        for b in scheme.part_witness(i + 1) {
            blocks.push(ProductBlock::new(cycle.clone(), b.clone()));
        }
    }
    for (i, (_, matching)) in left_parts.iter().enumerate() {
        for b in scheme.union_witness(i + 1) {
            for e in matching {
                blocks.push(ProductBlock::new(e.clone(), b.clone()));
            }
        }
    }
    Ok(
        ProductCertificate::new(Graph::complete(4)?, Graph::complete(scheme.n())?, blocks)
            .with_metadata("construction", "k4-scheme")
            .with_metadata("n", scheme.n()),
    )
}

/// The partition of K_6 whose unions g0+g_i are one K_{3,2}, another
/// K_{3,2}, and a disjoint pair of bicliques, with two-biclique witnesses
/// for each g_i. Feeding it to [`k4_scheme`] gives the 14-block base
/// certificate for (K_4, K_6).
pub fn base_k4k6_scheme() -> Result<PartitionScheme> {
    let n = 6;
    let wit = |classes: [(&[u32], &[u32]); 2]| -> Result<Vec<Biclique>> {
        classes
            .iter()
            .map(|(x, y)| Biclique::new(x.iter().copied(), y.iter().copied()))
            .collect()
    };

    let g0 = Graph::from_edges(1..=n, [(1, 2), (3, 4)])?;
    let wit_u1 = vec![Biclique::new([1, 3, 5], [2, 4])?];
    let wit_u2 = vec![Biclique::new([1, 4, 6], [2, 3])?];
    let wit_u3 = vec![
        Biclique::new([3, 6], [4, 5])?,
        Biclique::new([1], [2, 5, 6])?,
    ];
    let wit_g1 = wit([(&[4], &[1, 5]), (&[2], &[3, 5])])?;
    let wit_g2 = wit([(&[2], &[4, 6]), (&[3], &[1, 6])])?;
    let wit_g3 = wit([(&[5], &[1, 3, 6]), (&[6], &[1, 4])])?;

    // each g_i is the union witness's edge set minus g0
    let part_from = |wits: &[Biclique]| -> Result<Graph> {
        let mut g = Graph::empty(1..=n);
        for b in wits {
            for e in b.edges() {
                if !g0.contains_edge(e) {
                    g.insert_edge(e.lo(), e.hi())?;
                }
            }
        }
        Ok(g)
    };
    let g1 = part_from(&wit_u1)?;
    let g2 = part_from(&wit_u2)?;
    let g3 = part_from(&wit_u3)?;

    PartitionScheme::new(
        n,
        [g0, g1, g2, g3],
        [wit_g1, wit_g2, wit_g3],
        [wit_u1, wit_u2, wit_u3],
    )
}

/// The 14-block exact partition of E(K_4) x E(K_6).
pub fn base_k4k6() -> ProductCertificate {
    let scheme = base_k4k6_scheme().expect("the base scheme is valid");
    k4_scheme(&scheme)
        .expect("the base scheme builds")
        .with_metadata("construction", "base-k4k6")
}
