//! `bicert transform`: weak products and block doubling.

use std::path::PathBuf;

use anyhow::{bail, Result};

use bicert::certificate::{graph_to_json, Certificate};
use bicert::transform::{double_blocks_certificate, weak_product};

use crate::spec::parse_graph_spec;
use crate::write_output;

#[derive(clap::Subcommand)]
enum Transform {
    /// write the weak product of two graphs as a graph document
    WeakProduct {
        /// left factor: complete:N, file:PATH, or a path
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// double a product certificate into a biclique certificate over the
    /// weak product of its hosts
    DoubleBlocks {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(clap::Args)]
pub struct TransformArgs {
    #[command(subcommand)]
    transform: Transform,
}

pub fn run(args: TransformArgs) -> Result<u8> {
    match args.transform {
        Transform::WeakProduct { left, right, out } => {
            let g = parse_graph_spec(&left)?;
            let h = parse_graph_spec(&right)?;
            let product = weak_product(&g, &h)?;
            write_output(&out, &graph_to_json(&product))?;
            println!(
                "weak product: {} vertices, {} edges -> {}",
                product.vertex_count(),
                product.edge_count(),
                out.display()
            );
            Ok(0)
        }
        Transform::DoubleBlocks { cert, out } => {
            let cert = match Certificate::read_file(&cert)? {
                Certificate::Product(c) => c,
                Certificate::Uniform(_) => bail!("double-blocks needs a product certificate"),
            };
            let doubled = double_blocks_certificate(&cert)?;
            let blocks = doubled.blocks().len();
            write_output(&out, &Certificate::Uniform(doubled).to_json())?;
            println!(
                "doubled {} product blocks into {} bicliques -> {}",
                cert.blocks().len(),
                blocks,
                out.display()
            );
            Ok(0)
        }
    }
}
