//! Closed-form lower and upper bounds with exact integer and rational
//! arithmetic, and side-by-side comparison tables.

use std::fmt;

use num::rational::Ratio;

use crate::construct::{best_g_certificate, count_f4_recursive};
use crate::error::{Error, Result};

pub use crate::num_util::binomial;

/// Exact rational bound value.
pub type Rat = Ratio<i128>;

fn rat_int(v: i128) -> Rat {
    Rat::from_integer(v)
}

fn ceil_rat(r: Rat) -> i128 {
    r.ceil().to_integer()
}

fn to_i128(v: u128, what: &str) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::InvalidArguments(format!("{what} overflows")))
}

/// f_2(n) = n - 1.
pub fn gp_f2(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArguments("gp_f2 needs n >= 1".into()));
    }
    Ok(n - 1)
}

/// f_3(n) = n - 2.
pub fn alon_f3(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArguments("alon_f3 needs n >= 2".into()));
    }
    Ok(n - 2)
}

/// The interval-construction upper bound binomial(n - ceil(r/2), floor(r/2)).
pub fn trivial_upper(n: u64, r: u64) -> Result<u128> {
    if r == 0 || n < r {
        return Err(Error::InvalidArguments(format!(
            "trivial_upper needs n >= r >= 1, got n={n}, r={r}"
        )));
    }
    binomial(n - r.div_ceil(2), r / 2)
}

/// Lower bound for f_{2k}(n): 2 binomial(n-1, k) / binomial(2k, k),
/// returned as the exact rational together with its ceiling.
pub fn ckv_lower(n: u64, k: u64) -> Result<(Rat, u128)> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidArguments(format!(
            "ckv_lower needs n >= 2k >= 2, got n={n}, k={k}"
        )));
    }
    let num = 2 * binomial(n - 1, k)?;
    let den = binomial(2 * k, k)?;
    let rat = Rat::new(
        to_i128(num, "ckv numerator")?,
        to_i128(den, "ckv denominator")?,
    );
    Ok((rat, ceil_rat(rat) as u128))
}

/// Upper bound for f_{2k}(n), k >= 3:
/// binomial(n-k, k) - 2 floor(n/16) binomial(floor(n/2)-k+3, k-3).
pub fn cioaba_tait_upper(n: u64, k: u64) -> Result<u128> {
    if k < 3 {
        return Err(Error::InvalidArguments(format!(
            "cioaba_tait_upper needs k >= 3, got k={k}"
        )));
    }
    if n < 2 * k {
        return Err(Error::InvalidArguments(format!(
            "cioaba_tait_upper needs n >= 2k, got n={n}, k={k}"
        )));
    }
    let main = binomial(n - k, k)?;
    let correction = 2 * (n / 16) as u128 * binomial(n / 2 - k + 3, k - 3)?;
    Ok(main.saturating_sub(correction))
}

/// (ceil(9(n-1)/5), 2(n-1)) bracketing the block count for (K_3, K_n).
pub fn g_k3_bounds(n: u64) -> Result<(u64, u64)> {
    let (lo, _) = g_k3_lower_rational(n)?;
    Ok((ceil_rat(lo) as u64, 2 * (n - 1)))
}

pub fn g_k3_lower_rational(n: u64) -> Result<(Rat, u64)> {
    if n == 0 {
        return Err(Error::InvalidArguments("g_k3 needs n >= 1".into()));
    }
    let rat = Rat::new(9 * (n as i128 - 1), 5);
    Ok((rat, ceil_rat(rat) as u64))
}

/// (ceil(12(n-1)/5), 3(n-1)) bracketing the block count for (K_4, K_n).
pub fn g_k4_bounds(n: u64) -> Result<(u64, u64)> {
    let (lo, _) = g_k4_lower_rational(n)?;
    Ok((ceil_rat(lo) as u64, 3 * (n - 1)))
}

pub fn g_k4_lower_rational(n: u64) -> Result<(Rat, u64)> {
    if n == 0 {
        return Err(Error::InvalidArguments("g_k4 needs n >= 1".into()));
    }
    let rat = Rat::new(12 * (n as i128 - 1), 5);
    Ok((rat, ceil_rat(rat) as u64))
}

/// Lower bound ceil(((n-1)^2 + 1) / 2) for the block count of
/// E(K_n) x E(K_n), via biclique partitions of the weak product.
pub fn g_weakproduct_lower(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArguments(
            "g_weakproduct_lower needs n >= 1".into(),
        ));
    }
    let q = (n - 1) * (n - 1) + 1;
    Ok(q.div_ceil(2))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Lower,
    Upper,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Lower => write!(f, "lower"),
            Direction::Upper => write!(f, "upper"),
        }
    }
}

/// One bound: its name, direction, exact rational value, and the integer
/// it implies (ceiling for lower bounds, the value itself for upper ones).
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub name: String,
    pub direction: Direction,
    pub value: Rat,
    pub integer: i128,
}

impl BoundEntry {
    fn lower(name: &str, value: Rat) -> Self {
        BoundEntry {
            name: name.into(),
            direction: Direction::Lower,
            integer: ceil_rat(value),
            value,
        }
    }

    fn upper_int(name: &str, value: i128) -> Self {
        BoundEntry {
            name: name.into(),
            direction: Direction::Upper,
            value: rat_int(value),
            integer: value,
        }
    }

    fn lower_int(name: &str, value: i128) -> Self {
        BoundEntry {
            name: name.into(),
            direction: Direction::Lower,
            value: rat_int(value),
            integer: value,
        }
    }
}

impl fmt::Display for BoundEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{:5} {:28} {}", self.direction, self.name, self.integer)
        } else {
            write!(
                f,
                "{:5} {:28} {}  (exact {})",
                self.direction, self.name, self.integer, self.value
            )
        }
    }
}

/// All applicable bounds for one quantity.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub label: String,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn lower_max(&self) -> Option<i128> {
        self.entries
            .iter()
            .filter(|e| e.direction == Direction::Lower)
            .map(|e| e.integer)
            .max()
    }

    pub fn upper_min(&self) -> Option<i128> {
        self.entries
            .iter()
            .filter(|e| e.direction == Direction::Upper)
            .map(|e| e.integer)
            .min()
    }

    /// Every lower bound must stay at or below every upper bound.
    pub fn is_consistent(&self) -> bool {
        match (self.lower_max(), self.upper_min()) {
            (Some(lo), Some(hi)) => lo <= hi,
            _ => true,
        }
    }

    /// True when `value` respects every entry of the report.
    pub fn brackets(&self, value: i128) -> bool {
        self.entries.iter().all(|e| match e.direction {
            Direction::Lower => value >= e.integer,
            Direction::Upper => value <= e.integer,
        })
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quantity: {}", self.label)?;
        for e in &self.entries {
            writeln!(f, "  {e}")?;
        }
        Ok(())
    }
}

/// A quantity a bound table can be produced for.
#[derive(Clone, Copy, Debug)]
pub enum Quantity {
    /// f_r(n)
    Uniform { n: u64, r: u64 },
    /// block count for E(K_3) x E(K_n)
    GK3 { n: u64 },
    /// block count for E(K_4) x E(K_n)
    GK4 { n: u64 },
    /// block count for E(K_n) x E(K_n)
    GSquare { n: u64 },
}

/// Best available f_4 upper value used by the lift recurrence.
fn f4_best(n: u64) -> Result<u128> {
    let trivial = trivial_upper(n, 4)?;
    if (4..=4096).contains(&n) {
        Ok(trivial.min(count_f4_recursive(n as u32)? as u128))
    } else {
        Ok(trivial)
    }
}

/// Upper bound for f_{2k}(n) by lifting the best f_4 counts through
/// f_{2k+2}(n) <= sum_{m=2k}^{n-2} f_{2k}(m).
fn lift_upper(n: u64, k: u64) -> Result<u128> {
    debug_assert!(k >= 2);
    let mut values: Vec<u128> = (4..=n).map(f4_best).collect::<Result<_>>()?;
    // values[m - 4] holds f_{2j}(m) for the current j
    let mut r = 4;
    while r < 2 * k {
        let next_r = r + 2;
        let mut next = vec![0u128; values.len()];
        for (idx, slot) in next.iter_mut().enumerate() {
            let m = idx as u64 + 4;
            if m < next_r {
                continue;
            }
            if m == next_r {
                *slot = 1; // single edge, single block
                continue;
            }
            *slot = (r..=(m - 2)).map(|q| values[(q - 4) as usize]).sum();
        }
        values = next;
        r = next_r;
    }
    Ok(values[(n - 4) as usize])
}

pub fn bound_table(q: &Quantity) -> Result<BoundReport> {
    match *q {
        Quantity::Uniform { n, r } => {
            let mut entries = Vec::new();
            match r {
                2 => {
                    let v = gp_f2(n)? as i128;
                    entries.push(BoundEntry::lower_int("graham-pollak", v));
                    entries.push(BoundEntry::upper_int("graham-pollak", v));
                }
                3 => {
                    let v = alon_f3(n)? as i128;
                    entries.push(BoundEntry::lower_int("alon", v));
                    entries.push(BoundEntry::upper_int("alon", v));
                }
                _ => {
                    entries.push(BoundEntry::upper_int(
                        "trivial",
                        to_i128(trivial_upper(n, r)?, "trivial upper")?,
                    ));
                    if r % 2 == 0 {
                        let k = r / 2;
                        let (rat, _) = ckv_lower(n, k)?;
                        entries.push(BoundEntry::lower("ckv", rat));
                        if k >= 3 {
                            entries.push(BoundEntry::upper_int(
                                "cioaba-tait",
                                to_i128(cioaba_tait_upper(n, k)?, "cioaba-tait upper")?,
                            ));
                            entries.push(BoundEntry::upper_int(
                                "lift-recursive",
                                to_i128(lift_upper(n, k)?, "lift upper")?,
                            ));
                        }
                        if r == 4 && n <= 4096 {
                            entries.push(BoundEntry::upper_int(
                                "recursive-split",
                                count_f4_recursive(n as u32)? as i128,
                            ));
                        }
                    }
                }
            }
            Ok(BoundReport {
                label: format!("f_{r}({n})"),
                entries,
            })
        }
        Quantity::GK3 { n } => {
            let (rat, _) = g_k3_lower_rational(n)?;
            let (_, hi) = g_k3_bounds(n)?;
            Ok(BoundReport {
                label: format!("g(K_3, K_{n})"),
                entries: vec![
                    BoundEntry::lower("weighted-gp", rat),
                    BoundEntry::upper_int("four-way-scheme", hi as i128),
                ],
            })
        }
        Quantity::GK4 { n } => {
            let (rat, _) = g_k4_lower_rational(n)?;
            let (_, hi) = g_k4_bounds(n)?;
            let certified = best_g_certificate(4, n as u32)?.blocks().len() as i128;
            Ok(BoundReport {
                label: format!("g(K_4, K_{n})"),
                entries: vec![
                    BoundEntry::lower("weighted-gp", rat),
                    BoundEntry::upper_int("cycle-scheme", hi as i128),
                    BoundEntry::upper_int("certified", certified),
                ],
            })
        }
        Quantity::GSquare { n } => {
            let lo = g_weakproduct_lower(n)? as i128;
            let trivial = ((n as i128) - 1) * ((n as i128) - 1);
            let certified = if (2..=4096).contains(&n) {
                Some(best_g_certificate(n as u32, n as u32)?.blocks().len() as i128)
            } else {
                None
            };
            let mut entries = vec![
                BoundEntry::lower_int("weak-product", lo),
                BoundEntry::upper_int("star-product", trivial),
            ];
            if let Some(c) = certified {
                entries.push(BoundEntry::upper_int("certified", c));
            }
            Ok(BoundReport {
                label: format!("g(K_{n}, K_{n})"),
                entries,
            })
        }
    }
}
