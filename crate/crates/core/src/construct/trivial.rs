//! The interval construction generalizing the star partition of K_n.

use crate::blocks::MultipartiteBlock;
use crate::certificate::{UniformCertificate, UniformHost};
use crate::error::{Error, Result};
use crate::num_util::binomial;

/// Partitions K_n^(r) by fixing the vertices at even positions.
///
/// Order the labels 1..n. An r-set, written in increasing order, is assigned
/// to the block determined by its 2nd, 4th, ..., (2*floor(r/2))th vertices.
/// For fixed values a_1 < a_2 < ... at those positions the matching r-sets
/// form a complete r-partite r-graph whose other classes are the open
/// intervals between the fixed vertices. The result is an exact partition
/// into binomial(n - ceil(r/2), floor(r/2)) blocks.
pub fn trivial_decomposition(n: u32, r: u32) -> Result<UniformCertificate> {
    if r == 0 || n < r {
        return Err(Error::InvalidArguments(format!(
            "trivial decomposition needs n >= r >= 1, got n={n}, r={r}"
        )));
    }
    let host = UniformHost::complete(n, r)?;
    let k = (r / 2) as usize; // number of fixed (even) positions
    let odd_r = r % 2 == 1;

    let mut blocks = Vec::new();
    let mut fixed = vec![0u32; k];
    build_blocks(n, k, odd_r, 0, &mut fixed, &mut blocks)?;

    Ok(UniformCertificate::new(host, blocks)
        .with_metadata("construction", "trivial")
        .with_metadata("n", n)
        .with_metadata("r", r))
}

fn build_blocks(
    n: u32,
    k: usize,
    odd_r: bool,
    depth: usize,
    fixed: &mut Vec<u32>,
    out: &mut Vec<MultipartiteBlock>,
) -> Result<()> {
    if depth == k {
        // the r-set must end at the last fixed vertex when r is even,
        // so a trailing interval class exists only when r is odd
        if odd_r && fixed.last().map(|&a| a >= n).unwrap_or(false) {
            return Ok(());
        }
        let mut classes: Vec<Vec<u32>> = Vec::with_capacity(2 * k + usize::from(odd_r));
        let mut prev = 0u32;
        for &a in fixed.iter() {
            classes.push(((prev + 1)..a).collect());
            classes.push(vec![a]);
            prev = a;
        }
        if odd_r {
            // covers r = 1 as well: the single block has one class 1..=n
            classes.push(((prev + 1)..=n).collect());
        }
        out.push(MultipartiteBlock::new(classes)?);
        return Ok(());
    }
    // each fixed vertex needs a nonempty interval before it
    let lo = if depth == 0 { 2 } else { fixed[depth - 1] + 2 };
    for a in lo..=n {
        fixed[depth] = a;
        build_blocks(n, k, odd_r, depth + 1, fixed, out)?;
    }
    Ok(())
}

/// Block count of [`trivial_decomposition`] without materializing it.
pub fn trivial_block_count(n: u32, r: u32) -> Result<u128> {
    if r == 0 || n < r {
        return Err(Error::InvalidArguments(format!(
            "trivial decomposition needs n >= r >= 1, got n={n}, r={r}"
        )));
    }
    binomial((n - r.div_ceil(2)) as u64, (r / 2) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_partition;

    #[test]
    fn counts_match_formula() {
        assert_eq!(trivial_decomposition(4, 4).unwrap().blocks().len(), 1);
        assert_eq!(trivial_decomposition(6, 4).unwrap().blocks().len(), 6);
        assert_eq!(trivial_decomposition(5, 3).unwrap().blocks().len(), 3); // n-2
        assert_eq!(trivial_decomposition(5, 2).unwrap().blocks().len(), 4); // n-1
        assert!(trivial_decomposition(3, 4).is_err());
    }

    #[test]
    fn small_cases_are_exact_partitions() {
        for n in 1..=9 {
            for r in 1..=n {
                let cert = trivial_decomposition(n, r).unwrap();
                assert_eq!(
                    cert.blocks().len() as u128,
                    trivial_block_count(n, r).unwrap(),
                    "count formula n={n} r={r}"
                );
                let report = verify_partition(&cert).unwrap();
                assert!(report.is_exact_partition(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn r_equals_two_gives_stars() {
        let cert = trivial_decomposition(5, 2).unwrap();
        for block in cert.blocks() {
            assert_eq!(block.r(), 2);
            // one class is a singleton (the fixed vertex)
            assert!(block.classes().iter().any(|c| c.len() == 1));
        }
    }
}
