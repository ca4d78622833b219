//! Recursive constructions: the halving recursion for K_n^(4) and the
//! second-vertex lift from 2k-uniform to (2k+2)-uniform certificates.

use std::collections::{BTreeMap, HashMap};

use crate::blocks::MultipartiteBlock;
use crate::certificate::{UniformCertificate, UniformHost};
use crate::construct::{best_g_certificate, trivial_decomposition, vertex_range};
use crate::error::{Error, Result};
use crate::num_util::binomial;

/// Below this order the halving recursion falls back to the trivial
/// construction; the split cannot beat it until the parts reach order 16.
pub const F4_RECURSION_CUTOFF: u32 = 8;

/// Partition certificate for K_n^(4) by splitting the vertices into halves.
///
/// With A the first ceil(n/2) labels and B the rest: edges inside A and
/// inside B are handled recursively, the 3-1 split families by a 3-uniform
/// interval construction on the majority side crossed with the whole other
/// side as a fourth class, and the 2-2 family by the best product
/// certificate for (|A|, |B|) read as 4-partite blocks.
pub fn f4_recursive(n: u32) -> Result<UniformCertificate> {
    if n < 4 {
        return Err(Error::InvalidArguments(format!(
            "f4_recursive needs n >= 4, got {n}"
        )));
    }
    let blocks = f4_blocks(n)?;
    Ok(
        UniformCertificate::new(UniformHost::complete(n, 4)?, blocks)
            .with_metadata("construction", "f4-recursive")
            .with_metadata("n", n),
    )
}

/// Shifts every label by `offset`.
fn shift_block(block: &MultipartiteBlock, offset: u32) -> Result<MultipartiteBlock> {
    MultipartiteBlock::new(
        block
            .classes()
            .iter()
            .map(|c| c.iter().map(|v| v + offset).collect::<Vec<_>>()),
    )
}

fn f4_blocks(n: u32) -> Result<Vec<MultipartiteBlock>> {
    if n <= F4_RECURSION_CUTOFF {
        return Ok(trivial_decomposition(n, 4)?.blocks().to_vec());
    }
    let a = n.div_ceil(2);
    let b = n - a;
    let b_class = vertex_range(a + 1, n);
    let a_class = vertex_range(1, a);

    let mut blocks = f4_blocks(a)?;
    for block in f4_blocks(b)? {
        blocks.push(shift_block(&block, a)?);
    }
    // three vertices in A, one anywhere in B
    for block in trivial_decomposition(a, 3)?.blocks() {
        let mut classes: Vec<Vec<u32>> = block
            .classes()
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        classes.push(b_class.iter().copied().collect());
        blocks.push(MultipartiteBlock::new(classes)?);
    }
    // three vertices in B, one anywhere in A
    for block in trivial_decomposition(b, 3)?.blocks() {
        let mut classes: Vec<Vec<u32>> = block
            .classes()
            .iter()
            .map(|c| c.iter().map(|v| v + a).collect())
            .collect();
        classes.push(a_class.iter().copied().collect());
        blocks.push(MultipartiteBlock::new(classes)?);
    }
    // two in A, two in B: product blocks become 4-partite blocks
    for pb in best_g_certificate(a, b)?.blocks() {
        blocks.push(MultipartiteBlock::new([
            pb.left.class_x().iter().copied().collect::<Vec<_>>(),
            pb.left.class_y().iter().copied().collect(),
            pb.right.class_x().iter().map(|v| v + a).collect(),
            pb.right.class_y().iter().map(|v| v + a).collect(),
        ])?);
    }
    Ok(blocks)
}

/// Block count of [`f4_recursive`] evaluated by the recurrence, without
/// materializing any blocks.
pub fn count_f4_recursive(n: u32) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidArguments(format!(
            "count_f4_recursive needs n >= 4, got {n}"
        )));
    }
    let mut memo: HashMap<u32, u64> = HashMap::new();
    let mut g_memo: HashMap<(u32, u32), u64> = HashMap::new();
    count_rec(n, &mut memo, &mut g_memo)
}

fn count_rec(
    n: u32,
    memo: &mut HashMap<u32, u64>,
    g_memo: &mut HashMap<(u32, u32), u64>,
) -> Result<u64> {
    if let Some(&c) = memo.get(&n) {
        return Ok(c);
    }
    let count = if n <= F4_RECURSION_CUTOFF {
        binomial((n - 2) as u64, 2)? as u64
    } else {
        let a = n.div_ceil(2);
        let b = n - a;
        let g_count = match g_memo.get(&(a, b)) {
            Some(&c) => c,
            None => {
                let c = best_g_certificate(a, b)?.blocks().len() as u64;
                g_memo.insert((a, b), c);
                c
            }
        };
        let f3 = |m: u32| if m >= 3 { (m - 2) as u64 } else { 0 };
        count_rec(a, memo, g_memo)? + count_rec(b, memo, g_memo)? + g_count + f3(a) + f3(b)
    };
    memo.insert(n, count);
    Ok(count)
}

/// Lifts 2k-uniform certificates to a (2k+2)-uniform certificate for
/// K_n^(2k+2).
///
/// Grouping the (2k+2)-edges by their second-smallest vertex i, the group
/// for i is the base certificate for K_{n-i}^(2k) on labels i+1..n extended
/// with the classes {1..i-1} and {i}. The result is an exact partition with
/// sum_i baseCount(n-i) blocks.
pub fn f2k_lift<F>(base_builder: F, n: u32) -> Result<UniformCertificate>
where
    F: Fn(u32) -> Result<UniformCertificate>,
{
    let probe = base_builder(n.saturating_sub(2).max(1))?;
    let r = probe.host().r();
    if n < r + 2 {
        return Err(Error::InvalidArguments(format!(
            "f2k_lift needs n >= {}, got {n}",
            r + 2
        )));
    }

    let mut blocks = Vec::new();
    for i in 2..=(n - r) {
        let m = n - i;
        let base = if m == n - 2 {
            probe.clone()
        } else {
            base_builder(m)?
        };
        match base.host() {
            UniformHost::Complete { n: bn, r: br } if *bn == m && *br == r => {}
            _ => {
                return Err(Error::InvalidArguments(format!(
                    "base builder must produce complete {r}-uniform hosts, got a bad host at m={m}"
                )))
            }
        }
        let shift: BTreeMap<u32, u32> = (1..=m).map(|v| (v, v + i)).collect();
        for block in base.blocks() {
            let mut classes: Vec<Vec<u32>> = vec![(1..i).collect(), vec![i]];
            for c in block.classes() {
                classes.push(c.iter().map(|v| shift[v]).collect());
            }
            blocks.push(MultipartiteBlock::new(classes)?);
        }
    }
    Ok(
        UniformCertificate::new(UniformHost::complete(n, r + 2)?, blocks)
            .with_metadata("construction", "f2k-lift")
            .with_metadata("base_r", r)
            .with_metadata("n", n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{total_block_edges, verify_partition};

    #[test]
    fn base_cases_match_trivial() {
        let c = f4_recursive(4).unwrap();
        assert_eq!(c.blocks().len(), 1);
        let c = f4_recursive(8).unwrap();
        assert_eq!(c.blocks().len(), 15);
        assert!(verify_partition(&c).unwrap().is_exact_partition());
        assert!(f4_recursive(3).is_err());
    }

    #[test]
    fn counts_match_recurrence_values() {
        assert_eq!(count_f4_recursive(8).unwrap(), 15);
        assert_eq!(count_f4_recursive(16).unwrap(), 91); // 2*15 + 49 + 2*6
        assert_eq!(count_f4_recursive(32).unwrap(), 420); // 2*91 + 210 + 2*14
    }

    #[test]
    fn materialized_counts_agree_and_verify() {
        for n in [9, 12, 16, 20] {
            let cert = f4_recursive(n).unwrap();
            assert_eq!(
                cert.blocks().len() as u64,
                count_f4_recursive(n).unwrap(),
                "n={n}"
            );
            assert_eq!(total_block_edges(&cert), binomial(n as u64, 4).unwrap());
            assert!(
                verify_partition(&cert).unwrap().is_exact_partition(),
                "n={n}"
            );
        }
    }

    #[test]
    fn lift_from_trivial_f4_to_k8_6() {
        let cert = f2k_lift(|m| trivial_decomposition(m, 4), 8).unwrap();
        // f4(6) + f4(5) + f4(4) = 6 + 3 + 1
        assert_eq!(cert.blocks().len(), 10);
        let report = verify_partition(&cert).unwrap();
        assert_eq!(report.host_size(), 28);
        assert!(report.is_exact_partition());
    }

    #[test]
    fn lift_smallest_case_is_one_block() {
        let cert = f2k_lift(|m| trivial_decomposition(m, 4), 6).unwrap();
        assert_eq!(cert.blocks().len(), 1);
        assert!(verify_partition(&cert).unwrap().is_exact_partition());
    }

    #[test]
    fn lift_count_is_sum_of_base_counts() {
        let n = 9;
        let cert = f2k_lift(|m| trivial_decomposition(m, 4), n).unwrap();
        let expected: u128 = (2..=(n - 4)).map(|i| trivial_block_count_for(n - i)).sum();
        assert_eq!(cert.blocks().len() as u128, expected);

        fn trivial_block_count_for(m: u32) -> u128 {
            crate::construct::trivial_block_count(m, 4).unwrap()
        }
    }

    #[test]
    fn double_lift_to_eight_uniform() {
        // k=2 lift under a k=3 lift: certificate for K_10^(8)
        let lift6 = |m: u32| f2k_lift(|q| trivial_decomposition(q, 4), m);
        let cert = f2k_lift(lift6, 10).unwrap();
        // sum over i=2..=4 of lift6Count(10 - i) = 10 + 4 + 1
        assert_eq!(cert.blocks().len(), 15);
        let report = verify_partition(&cert).unwrap();
        assert_eq!(report.host_size(), 45);
        assert!(report.is_exact_partition());
    }

    #[test]
    fn lift_rejects_small_n() {
        assert!(f2k_lift(|m| trivial_decomposition(m, 4), 5).is_err());
    }
}
