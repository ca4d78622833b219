//! Shared argument parsing: graph specs and budgets.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bicert::certificate::graph_from_json;
use bicert::exact::Budget;
use bicert::Graph;

/// Parses `complete:N`, `file:PATH`, or a bare path to a graph document.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    if let Some(n) = spec.strip_prefix("complete:") {
        let n: u32 = n
            .parse()
            .with_context(|| format!("bad order in graph spec {spec:?}"))?;
        return Ok(Graph::complete(n)?);
    }
    let path = spec.strip_prefix("file:").unwrap_or(spec);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {path:?}"))?;
    Ok(graph_from_json(&text)?)
}

#[derive(clap::Args, Clone)]
pub struct BudgetArgs {
    /// Node-count cap for the search
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock cap in seconds
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Worker threads (>1 enables the parallel mode)
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

impl BudgetArgs {
    pub fn to_budget(&self) -> Result<Budget> {
        if self.threads == 0 {
            bail!("--threads must be at least 1");
        }
        Ok(Budget {
            max_nodes: self.budget_nodes,
            max_time: self.budget_seconds.map(std::time::Duration::from_secs_f64),
            threads: self.threads,
        })
    }
}

pub fn read_to_string(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}
