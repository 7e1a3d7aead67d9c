use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use ndl_cli::{generate, run, ExperimentConfig};
use ndl_core::graph::write_edge_list;
use std::path::PathBuf;
use std::process::ExitCode;

/// Spectral certification, odd-cycle counting and commonality campaigns.
#[derive(Parser)]
#[command(name = "ndl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in graph as an edge list, e.g. `gen paley 13`.
    Gen { spec: Vec<String> },
    /// Print n, d, λ, p and the hypothesis ratios for k = 1..4.
    Certify,
    /// Count homomorphisms (and labelled copies for cycles) of a pattern.
    Count,
    /// Count monochromatic odd cycles for a given or random two-colouring.
    VerifyCommonality,
    /// Search for an odd cycle in random dense subgraphs.
    VerifyTuran,
    /// Extract an almost-regular set on which a subgraph stays dense.
    Regularize,
    /// Run every oracle and inequality check on the built-in corpus.
    OracleSuite,
    /// Colour a random balanced cut red and count monochromatic odd cycles.
    ProbeBipartite,
    /// Run the command named in `--config`.
    Run,
}

#[derive(Args, Default)]
struct Opts {
    /// key = value file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Host edge-list file.
    #[arg(long, global = true)]
    host: Option<PathBuf>,
    /// Built-in host such as "paley 101" or "random-regular 10 3".
    #[arg(long, global = true)]
    graph: Option<String>,
    /// Red subgraph edge-list file.
    #[arg(long, global = true)]
    sub: Option<PathBuf>,
    /// Vertex-list file for the set X.
    #[arg(long, global = true)]
    subset: Option<PathBuf>,
    /// Pattern: c<m>, p<m> or fig8:<q>,<r>.
    #[arg(long, global = true)]
    pattern: Option<String>,
    #[arg(long, global = true)]
    k: Option<usize>,
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    delta: Option<f64>,
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    #[arg(long, global = true)]
    rho: Option<f64>,
    #[arg(long, global = true)]
    eta: Option<f64>,
    /// Red-edge probability for random colourings.
    #[arg(long, global = true)]
    keep: Option<f64>,
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output path; the CSV table goes next to it with a .csv extension.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
}

impl Opts {
    fn to_config(&self) -> ExperimentConfig {
        ExperimentConfig {
            command: None,
            host: self.host.clone(),
            graph: self.graph.clone(),
            sub: self.sub.clone(),
            subset: self.subset.clone(),
            pattern: self.pattern.clone(),
            k: self.k,
            alpha: self.alpha,
            delta: self.delta,
            epsilon: self.epsilon,
            rho: self.rho,
            eta: self.eta,
            keep: self.keep,
            trials: self.trials,
            seed: self.seed,
            out: self.out.clone(),
            threads: self.threads,
            timing: self.timing.then_some(true),
        }
    }
}

fn command_name(c: &Command) -> Option<&'static str> {
    Some(match c {
        Command::Gen { .. } => "gen",
        Command::Certify => "certify",
        Command::Count => "count",
        Command::VerifyCommonality => "verify-commonality",
        Command::VerifyTuran => "verify-turan",
        Command::Regularize => "regularize",
        Command::OracleSuite => "oracle-suite",
        Command::ProbeBipartite => "probe-bipartite",
        Command::Run => return None,
    })
}

fn execute(cli: Cli) -> Result<bool> {
    let mut flags = cli.opts.to_config();
    flags.command = command_name(&cli.command).map(String::from);
    if let Command::Gen { spec } = &cli.command {
        if !spec.is_empty() {
            flags.graph = Some(spec.join(" "));
        }
    }
    let cfg = match &cli.opts.config {
        Some(path) => ExperimentConfig::read(path)?.overlay(&flags),
        None => flags,
    };

    if cfg.command.as_deref() == Some("gen") {
        let text = write_edge_list(&generate(&cfg)?);
        match &cfg.out {
            Some(path) => {
                std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
            }
            None => print!("{text}"),
        }
        return Ok(true);
    }
    let report = run(&cfg)?;
    report.emit(cfg.out.as_deref())?;
    Ok(report.aggregate.pass)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
