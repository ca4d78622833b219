//! `bicert bounds`: closed-form bound tables.

use anyhow::{bail, Result};

use bicert::bounds::{bound_table, Quantity};

#[derive(clap::Args)]
pub struct BoundsArgs {
    /// f2 | f3 | f4 | fr | f2k | g-k3 | g-k4 | g-square
    quantity: String,
    #[arg(long)]
    n: u64,
    /// uniformity r (for fr)
    #[arg(long)]
    r: Option<u64>,
    /// half-uniformity k (for f2k: the quantity is f_{2k}(n))
    #[arg(long)]
    k: Option<u64>,
}

pub fn run(args: BoundsArgs) -> Result<u8> {
    let quantity = match args.quantity.as_str() {
        "f2" => Quantity::Uniform { n: args.n, r: 2 },
        "f3" => Quantity::Uniform { n: args.n, r: 3 },
        "f4" => Quantity::Uniform { n: args.n, r: 4 },
        "fr" => match args.r {
            Some(r) => Quantity::Uniform { n: args.n, r },
            None => bail!("fr needs --r"),
        },
        "f2k" => match args.k {
            Some(k) => Quantity::Uniform {
                n: args.n,
                r: 2 * k,
            },
            None => bail!("f2k needs --k"),
        },
        "g-k3" => Quantity::GK3 { n: args.n },
        "g-k4" => Quantity::GK4 { n: args.n },
        "g-square" => Quantity::GSquare { n: args.n },
        other => bail!("unknown quantity {other:?}"),
    };
    let report = bound_table(&quantity)?;
    print!("{report}");
    if !report.is_consistent() {
        bail!("bound table is inconsistent (a lower bound exceeds an upper bound)");
    }
    Ok(0)
}
