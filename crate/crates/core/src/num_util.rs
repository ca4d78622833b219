//! Exact integer helpers shared across the crate.

use crate::error::{Error, Result};

/// Exact binomial coefficient with the usual convention C(n,k) = 0 when
/// k > n. Errors out instead of overflowing.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or_else(|| Error::InvalidArguments(format!("binomial({n},{k}) overflows")))?;
        acc /= i as u128; // exact at every step
    }
    Ok(acc)
}

/// Binomial coefficient small enough to fit in u64; for ranking edge sets.
pub(crate) fn binomial_u64(n: u64, k: u64) -> u64 {
    binomial(n, k)
        .ok()
        .and_then(|v| u64::try_from(v).ok())
        .expect("host sizes handled by ranking fit in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(6, 4).unwrap(), 15);
        assert_eq!(binomial(5, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(52, 26).unwrap(), 495_918_532_948_104);
    }
}
