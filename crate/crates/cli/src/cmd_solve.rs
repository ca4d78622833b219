//! `bicert solve`: exact minimum-partition runs.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};

use bicert::certificate::{hypergraph_from_json, Certificate};
use bicert::exact::{
    complete_uniform_edges, min_biclique_partition, min_multipartite_partition,
    min_product_block_partition, min_product_block_partition_with, product_lower_bound, Optimum,
    SolveResult,
};
use bicert::{Graph, MultipartiteBlock, ProductCertificate, UniformCertificate, UniformHost};

use crate::spec::{parse_graph_spec, read_to_string, BudgetArgs};
use crate::write_output;

#[derive(clap::Subcommand)]
enum Quantity {
    /// minimum biclique partition of a graph's edge set
    F2 {
        /// host K_n
        #[arg(long, conflicts_with = "graph_file")]
        complete: Option<u32>,
        /// host from a {vertices, edges} document
        #[arg(long)]
        graph_file: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// write the witness certificate here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// minimum complete r-partite partition of an r-graph
    Fr {
        #[arg(long)]
        r: u32,
        /// host K_n^(r)
        #[arg(long, conflicts_with = "hypergraph_file")]
        complete: Option<u32>,
        /// host from a {r, vertices, edges} document
        #[arg(long)]
        hypergraph_file: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// minimum product-block partition of E(left) x E(right)
    G {
        /// left factor: complete:N, file:PATH, or a path
        #[arg(long)]
        left: String,
        /// right factor: complete:N, file:PATH, or a path
        #[arg(long)]
        right: String,
        /// do not seed the search with the closed-form lower bound
        #[arg(long)]
        no_bound_seed: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
pub struct SolveArgs {
    #[command(subcommand)]
    quantity: Quantity,
}

pub fn run(args: SolveArgs) -> Result<u8> {
    match args.quantity {
        Quantity::F2 {
            complete,
            graph_file,
            budget,
            out,
        } => {
            let host = match (complete, graph_file) {
                (Some(n), None) => Graph::complete(n)?,
                (None, Some(path)) => {
                    bicert::certificate::graph_from_json(&read_to_string(&path)?)?
                }
                _ => bail!("give exactly one of --complete or --graph-file"),
            };
            let result = min_biclique_partition(&host, &budget.to_budget()?)?;
            if let (Some(path), Some(witness)) = (&out, &result.certificate) {
                let blocks: Vec<MultipartiteBlock> = witness
                    .iter()
                    .map(MultipartiteBlock::from_biclique)
                    .collect();
                let uniform_host = host_as_2_uniform(&host)?;
                let cert = Certificate::Uniform(
                    UniformCertificate::new(uniform_host, blocks)
                        .with_metadata("construction", "solver-witness"),
                );
                write_output(path, &cert.to_json())?;
            }
            report("f2", &result)
        }
        Quantity::Fr {
            r,
            complete,
            hypergraph_file,
            budget,
            out,
        } => {
            let (host, edges) = match (complete, hypergraph_file) {
                (Some(n), None) => (UniformHost::complete(n, r)?, complete_uniform_edges(n, r)?),
                (None, Some(path)) => {
                    let (file_r, vertices, edges) = hypergraph_from_json(&read_to_string(&path)?)?;
                    if file_r != r {
                        bail!("--r {r} does not match the file's r = {file_r}");
                    }
                    (UniformHost::explicit(r, vertices, edges.clone())?, edges)
                }
                _ => bail!("give exactly one of --complete or --hypergraph-file"),
            };
            let result = min_multipartite_partition(&edges, r, &budget.to_budget()?)?;
            if let (Some(path), Some(witness)) = (&out, &result.certificate) {
                let cert = Certificate::Uniform(
                    UniformCertificate::new(host, witness.clone())
                        .with_metadata("construction", "solver-witness"),
                );
                write_output(path, &cert.to_json())?;
            }
            report(&format!("f{r}"), &result)
        }
        Quantity::G {
            left,
            right,
            no_bound_seed,
            budget,
            out,
        } => {
            let g = parse_graph_spec(&left).context("--left")?;
            let h = parse_graph_spec(&right).context("--right")?;
            let budget = budget.to_budget()?;
            let result = if no_bound_seed {
                min_product_block_partition_with(&g, &h, &budget, None)?
            } else {
                if let Some(lower) = product_lower_bound(&g, &h) {
                    println!("closed-form lower bound: {lower}");
                }
                min_product_block_partition(&g, &h, &budget)?
            };
            if let (Some(path), Some(witness)) = (&out, &result.certificate) {
                let cert = Certificate::Product(
                    ProductCertificate::new(g.clone(), h.clone(), witness.clone())
                        .with_metadata("construction", "solver-witness"),
                );
                write_output(path, &cert.to_json())?;
            }
            report("g", &result)
        }
    }
}

fn host_as_2_uniform(g: &Graph) -> Result<UniformHost> {
    let n = g.vertex_count() as u32;
    let contiguous = g.vertex_set().iter().copied().eq(1..=n);
    if contiguous && g.is_complete() && n >= 2 {
        Ok(UniformHost::complete(n, 2)?)
    } else {
        Ok(UniformHost::explicit(
            2,
            g.vertices(),
            g.edges().map(|e| vec![e.lo(), e.hi()]).collect::<Vec<_>>(),
        )?)
    }
}

fn report<B>(label: &str, result: &SolveResult<B>) -> Result<u8> {
    match &result.optimum {
        Optimum::Resolved(v) => {
            println!(
                "{label}: optimum = {v}  (nodes explored: {})",
                result.nodes_explored
            );
            Ok(0)
        }
        Optimum::Unresolved { best_upper } => {
            match best_upper {
                Some(u) => println!(
                    "{label}: unresolved (best <= {u})  (nodes explored: {})",
                    result.nodes_explored
                ),
                None => println!(
                    "{label}: unresolved  (nodes explored: {})",
                    result.nodes_explored
                ),
            }
            Ok(1)
        }
    }
}
