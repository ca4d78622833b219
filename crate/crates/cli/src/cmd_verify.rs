//! `bicert verify`: exact-cover check of a certificate file.

use std::path::PathBuf;

use anyhow::Result;

use bicert::certificate::Certificate;
use bicert::report::HostIndex;
use bicert::verify::{verify_partition, verify_product_partition};
use bicert::MultiplicityReport;

const VIOLATION_LIMIT: usize = 10;

#[derive(clap::Args)]
pub struct VerifyArgs {
    /// certificate file to check
    cert: PathBuf,
}

pub fn run(args: VerifyArgs) -> Result<u8> {
    let cert = Certificate::read_file(&args.cert)?;
    match cert {
        Certificate::Uniform(c) => {
            let report = verify_partition(&c)?;
            summarize(&report, c.blocks().len(), |k| format_set(k))
        }
        Certificate::Product(c) => {
            let report = verify_product_partition(&c)?;
            summarize(&report, c.blocks().len(), |(e, f)| {
                format!("({},{})x({},{})", e.lo(), e.hi(), f.lo(), f.hi())
            })
        }
    }
}

fn format_set(key: &[u32]) -> String {
    let inner: Vec<String> = key.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn summarize<H, F>(report: &MultiplicityReport<H>, blocks: usize, show: F) -> Result<u8>
where
    H: HostIndex,
    F: Fn(&H::Key) -> String,
{
    println!(
        "host edges: {}, blocks: {}, covered incidences: {}",
        report.host_size(),
        blocks,
        report.covered_total()
    );
    println!(
        "odd cover: {}, uniform cover: {}{}",
        report.is_odd_cover(),
        report.is_uniform_cover(),
        match report.uniform_cover_value() {
            Some(v) => format!(" (value {v})"),
            None => String::new(),
        }
    );
    if report.is_exact_partition() {
        println!("exact partition: OK");
        return Ok(0);
    }
    println!("exact partition: FAILED");
    if report.foreign_total() > 0 {
        println!(
            "  {} block edges lie outside the host",
            report.foreign_total()
        );
        for (block, key) in report.foreign_samples().iter().take(VIOLATION_LIMIT) {
            println!("  block {}: foreign edge {}", block, show(key));
        }
    }
    for (key, count) in report.violations(VIOLATION_LIMIT) {
        println!("  edge {}: multiplicity {}", show(&key), count);
    }
    Ok(1)
}
