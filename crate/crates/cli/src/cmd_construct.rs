//! `bicert construct`: emit certificates for every built-in construction.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Deserialize;

use bicert::certificate::Certificate;
use bicert::construct::{
    base_k4k6, blowup_product, f2k_lift, f4_recursive, k3_scheme, k4_scheme, odd_cover_k8,
    trivial_decomposition, PartitionScheme,
};
use bicert::{Biclique, Graph, MultipartiteBlock, UniformCertificate, UniformHost};

use crate::spec::read_to_string;
use crate::write_output;

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    /// interval construction for K_n^(r)
    Trivial,
    /// E(K_3) x E(K_n) from a partition scheme (default: all of K_n in g1)
    K3Scheme,
    /// E(K_4) x E(K_n) from a partition scheme
    K4Scheme,
    /// the 14-block partition of E(K_4) x E(K_6)
    BaseK4k6,
    /// blow-up of a product certificate to i, j overlapping copies
    Blowup,
    /// halving recursion for K_n^(4)
    F4Recursive,
    /// lift 2k-uniform certificates to K_n^(2k+2)
    F2kLift,
    /// the four-biclique odd cover of K_8 (a cover, not a partition)
    OddCoverK8,
}

#[derive(clap::Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// base uniformity half: the lift consumes 2k-uniform certificates
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    /// base certificate file for blowup (default: the built-in base-k4k6)
    #[arg(long)]
    base: Option<PathBuf>,
    /// scheme file for k3-scheme / k4-scheme
    #[arg(long)]
    scheme: Option<PathBuf>,
    /// output certificate path
    #[arg(long)]
    out: PathBuf,
}

fn require(opt: Option<u32>, flag: &str) -> Result<u32> {
    opt.with_context(|| format!("missing required flag --{flag}"))
}

pub fn run(args: ConstructArgs) -> Result<u8> {
    let cert = build(&args)?;
    write_output(&args.out, &cert.to_json())?;
    println!(
        "{}: wrote {} with {} blocks",
        cert.kind(),
        args.out.display(),
        cert.block_count()
    );
    Ok(0)
}

fn build(args: &ConstructArgs) -> Result<Certificate> {
    Ok(match args.kind {
        Kind::Trivial => {
            let n = require(args.n, "n")?;
            let r = require(args.r, "r")?;
            Certificate::Uniform(trivial_decomposition(n, r)?)
        }
        Kind::K3Scheme => {
            let scheme = load_scheme(args)?;
            Certificate::Product(k3_scheme(&scheme)?)
        }
        Kind::K4Scheme => {
            let scheme = load_scheme(args)?;
            Certificate::Product(k4_scheme(&scheme)?)
        }
        Kind::BaseK4k6 => Certificate::Product(base_k4k6()),
        Kind::Blowup => {
            let i = require(args.i, "i")?;
            let j = require(args.j, "j")?;
            let base = match &args.base {
                Some(path) => match Certificate::read_file(path)? {
                    Certificate::Product(c) => c,
                    Certificate::Uniform(_) => {
                        bail!("blowup base must be a product certificate")
                    }
                },
                None => base_k4k6(),
            };
            Certificate::Product(blowup_product(&base, i, j)?)
        }
        Kind::F4Recursive => {
            let n = require(args.n, "n")?;
            Certificate::Uniform(f4_recursive(n)?)
        }
        Kind::F2kLift => {
            let n = require(args.n, "n")?;
            let k = require(args.k, "k")?;
            if k < 2 {
                bail!("--k must be at least 2 (the lift consumes 2k-uniform certificates)");
            }
            Certificate::Uniform(lift_chain(k, n)?)
        }
        Kind::OddCoverK8 => {
            let host = UniformHost::complete(8, 2)?;
            let blocks: Vec<MultipartiteBlock> = odd_cover_k8()
                .iter()
                .map(MultipartiteBlock::from_biclique)
                .collect();
            Certificate::Uniform(
                UniformCertificate::new(host, blocks)
                    .with_metadata("construction", "odd-cover-k8")
                    .with_metadata("note", "odd cover of K_8, not a partition"),
            )
        }
    })
}

/// Chains the lift down to the trivial 4-uniform base: k = 2 lifts the
/// trivial K_m^(4) certificates, larger k lifts the previous chain.
fn lift_chain(k: u32, n: u32) -> Result<UniformCertificate, bicert::Error> {
    fn builder(k: u32) -> Box<dyn Fn(u32) -> Result<UniformCertificate, bicert::Error>> {
        if k == 2 {
            Box::new(|m| trivial_decomposition(m, 4))
        } else {
            Box::new(move |m| f2k_lift(&*builder(k - 1), m))
        }
    }
    f2k_lift(&*builder(k), n)
}

#[derive(Deserialize)]
struct SchemeDoc {
    n: u32,
    g0: Vec<[u32; 2]>,
    g1: Vec<[u32; 2]>,
    g2: Vec<[u32; 2]>,
    g3: Vec<[u32; 2]>,
    wit_g1: Vec<[Vec<u32>; 2]>,
    wit_g2: Vec<[Vec<u32>; 2]>,
    wit_g3: Vec<[Vec<u32>; 2]>,
    wit_g0_g1: Vec<[Vec<u32>; 2]>,
    wit_g0_g2: Vec<[Vec<u32>; 2]>,
    wit_g0_g3: Vec<[Vec<u32>; 2]>,
}

fn load_scheme(args: &ConstructArgs) -> Result<PartitionScheme> {
    match &args.scheme {
        None => {
            let n = require(args.n, "n")?;
            Ok(PartitionScheme::all_in_g1(n)?)
        }
        Some(path) => {
            let doc: SchemeDoc = serde_json::from_str(&read_to_string(path)?)
                .with_context(|| format!("bad scheme file {}", path.display()))?;
            let graph = |edges: &[[u32; 2]]| -> Result<Graph> {
                Ok(Graph::from_edges(
                    1..=doc.n,
                    edges.iter().map(|e| (e[0], e[1])),
                )?)
            };
            let wits = |raw: &[[Vec<u32>; 2]]| -> Result<Vec<Biclique>> {
                raw.iter()
                    .map(|[x, y]| {
                        Biclique::new(x.iter().copied(), y.iter().copied()).map_err(Into::into)
                    })
                    .collect()
            };
            Ok(PartitionScheme::new(
                doc.n,
                [
                    graph(&doc.g0)?,
                    graph(&doc.g1)?,
                    graph(&doc.g2)?,
                    graph(&doc.g3)?,
                ],
                [wits(&doc.wit_g1)?, wits(&doc.wit_g2)?, wits(&doc.wit_g3)?],
                [
                    wits(&doc.wit_g0_g1)?,
                    wits(&doc.wit_g0_g2)?,
                    wits(&doc.wit_g0_g3)?,
                ],
            )?)
        }
    }
}
