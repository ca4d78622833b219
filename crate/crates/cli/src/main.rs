//! `bicert`: construct block-partition certificates, verify certificate
//! files, run the exact solvers, compute bound tables, and apply the
//! product-to-weak-product transforms.
//!
//! Exit codes: 0 on success (verified / resolved), 1 when a verification
//! fails or a solve stays unresolved, 2 on usage or format errors.

mod cmd_bounds;
mod cmd_construct;
mod cmd_solve;
mod cmd_transform;
mod cmd_verify;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bicert",
    version,
    about = "block partition certificates: construct, verify, solve, bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate and write it to a file
    Construct(cmd_construct::ConstructArgs),
    /// Check a certificate file for exact partition
    Verify(cmd_verify::VerifyArgs),
    /// Run an exact minimum-partition solver
    Solve(cmd_solve::SolveArgs),
    /// Print a bound table for a quantity
    Bounds(cmd_bounds::BoundsArgs),
    /// Weak products and block doubling
    Transform(cmd_transform::TransformArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => cmd_construct::run(args),
        Command::Verify(args) => cmd_verify::run(args),
        Command::Solve(args) => cmd_solve::run(args),
        Command::Bounds(args) => cmd_bounds::run(args),
        Command::Transform(args) => cmd_transform::run(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

pub(crate) fn write_output(path: &PathBuf, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))
}
