//! The campaigns behind each subcommand.

use crate::config::ExperimentConfig;
use crate::inputs::{read_graph, read_vertex_list, GraphSpec};
use crate::report::{Aggregate, Report, Table, Verdict};
use anyhow::{anyhow, bail, Result};
use ndl_core::commonality::{verify_commonality, CommonalityReport};
use ndl_core::constructions::paley;
use ndl_core::counting::{count_report, Pattern};
use ndl_core::experiments::*;
use ndl_core::regularize::{regularize, RegularizationParams};
use ndl_core::spectral::{certify_ndl, NdlCertificate};
use ndl_core::{exec, Error, Graph, VertexSet};
use serde_json::{json, Value};
use std::time::Instant;

pub const COMMANDS: [&str; 8] = [
    "gen",
    "certify",
    "count",
    "verify-commonality",
    "verify-turan",
    "regularize",
    "oracle-suite",
    "probe-bipartite",
];

const DEFAULT_TRIALS: usize = 100;
const DEFAULT_DELTA: f64 = 0.05;
const DEFAULT_KEEP: f64 = 0.5;
const DEFAULT_RHO: f64 = 1.0;
const DEFAULT_ETA: f64 = 0.01;

struct Outcome {
    summary: Value,
    records: Value,
    verdicts: Vec<Verdict>,
    table: Table,
}

fn seed(cfg: &ExperimentConfig) -> u64 {
    cfg.seed.unwrap_or(0)
}

fn k(cfg: &ExperimentConfig) -> Result<usize> {
    match cfg.k.unwrap_or(1) {
        0 => bail!("k must be at least 1"),
        k => Ok(k),
    }
}

fn trials(cfg: &ExperimentConfig) -> usize {
    cfg.trials.unwrap_or(DEFAULT_TRIALS)
}

/// Host from `host` (a file) or `graph` (a built-in).
pub fn load_host(cfg: &ExperimentConfig) -> Result<(String, Graph)> {
    if let Some(path) = &cfg.host {
        return Ok((path.display().to_string(), read_graph(path)?));
    }
    if let Some(spec) = &cfg.graph {
        return Ok((spec.clone(), GraphSpec::parse(spec)?.build(seed(cfg))?));
    }
    bail!("no host graph: pass --host <file> or --graph <spec>")
}

/// The edge list for `gen`.
pub fn generate(cfg: &ExperimentConfig) -> Result<Graph> {
    let spec = cfg
        .graph
        .as_deref()
        .ok_or_else(|| anyhow!("gen needs a graph, e.g. `gen paley 13`"))?;
    GraphSpec::parse(spec)?.build(seed(cfg))
}

/// Runs the configured campaign on a pool of `threads` workers.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    let command = cfg
        .command
        .clone()
        .ok_or_else(|| anyhow!("no command given"))?;
    let start = Instant::now();
    let outcome = exec::with_threads(cfg.threads, || dispatch(&command, cfg))?;
    let timing_ms = cfg
        .timing
        .unwrap_or(false)
        .then(|| start.elapsed().as_millis());
    Ok(Report {
        command,
        config: cfg.clone(),
        aggregate: Aggregate::from_flags(outcome.verdicts),
        summary: outcome.summary,
        records: outcome.records,
        timing_ms,
        table: outcome.table,
    })
}

fn dispatch(command: &str, cfg: &ExperimentConfig) -> Result<Outcome> {
    match command {
        "gen" => gen_summary(cfg),
        "certify" => certify(cfg),
        "count" => count(cfg),
        "verify-commonality" => verify_commonality_campaign(cfg),
        "verify-turan" => verify_turan(cfg),
        "regularize" => regularize_campaign(cfg),
        "oracle-suite" => oracle_suite(cfg),
        "probe-bipartite" => probe_bipartite(cfg),
        other => bail!(
            "unknown command {other:?}; expected one of {}",
            COMMANDS.join(", ")
        ),
    }
}

fn gen_summary(cfg: &ExperimentConfig) -> Result<Outcome> {
    let g = generate(cfg)?;
    let mut table = Table::new(&["n", "m"]);
    table.push(vec![g.n().to_string(), g.edge_count().to_string()]);
    Ok(Outcome {
        summary: json!({ "n": g.n(), "m": g.edge_count() }),
        records: json!([]),
        verdicts: vec![Verdict::Pass],
        table,
    })
}

fn certificate_json(cert: &NdlCertificate) -> Value {
    let ratios: Vec<Value> = (1..=4)
        .map(|k| cert.hypothesis_ratio(k).map_or(Value::Null, |r| json!(r)))
        .collect();
    json!({
        "n": cert.n,
        "d": cert.d,
        "lambda": cert.lambda,
        "p": cert.p,
        "hypothesis_ratio": ratios,
    })
}

fn certify(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (_, g) = load_host(cfg)?;
    let cert = certify_ndl(&g)?;
    let mut table = Table::new(&["k", "hypothesis_ratio"]);
    for k in 1..=4u32 {
        let r = cert
            .hypothesis_ratio(k)
            .map_or(String::new(), |r| r.to_string());
        table.push(vec![k.to_string(), r]);
    }
    Ok(Outcome {
        summary: certificate_json(&cert),
        records: json!([]),
        verdicts: vec![Verdict::Pass],
        table,
    })
}

fn count(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (id, g) = load_host(cfg)?;
    let pattern: Pattern = match &cfg.pattern {
        Some(p) => p.parse()?,
        None => Pattern::Cycle(2 * k(cfg)? + 1),
    };
    let r = count_report(&id, &g, pattern)?;
    let mut table = Table::new(&[
        "graph",
        "pattern",
        "hom_count",
        "injective_count",
        "density",
    ]);
    table.push(vec![
        r.graph_id.clone(),
        r.pattern.clone(),
        r.hom_count.to_string(),
        r.injective_count.map_or(String::new(), |c| c.to_string()),
        r.density.to_string(),
    ]);
    Ok(Outcome {
        summary: serde_json::to_value(&r)?,
        records: json!([]),
        verdicts: vec![Verdict::Pass],
        table,
    })
}

/// Pass when the monochromatic total reaches `(1−ε)` times the bound.
fn commonality_verdict(r: &CommonalityReport, slack: f64) -> Verdict {
    if r.bound <= 0.0 {
        Verdict::Vacuous
    } else {
        Verdict::from((r.n_g + r.n_complement) as f64 >= (1.0 - slack) * r.bound)
    }
}

const COLOURING_HEADERS: [&str; 9] = [
    "trial",
    "g_edges",
    "n_g",
    "n_complement",
    "total",
    "bound",
    "delta",
    "hypothesis_ratio",
    "verdict",
];

fn colouring_row(trial: usize, g_edges: usize, r: &CommonalityReport, v: Verdict) -> Vec<String> {
    vec![
        trial.to_string(),
        g_edges.to_string(),
        r.n_g.to_string(),
        r.n_complement.to_string(),
        (r.n_g + r.n_complement).to_string(),
        r.bound.to_string(),
        r.delta.to_string(),
        r.hypothesis_ratio.to_string(),
        format!("{v:?}").to_lowercase(),
    ]
}

fn totals_summary(reports: &[&CommonalityReport], slack: f64) -> Value {
    let totals: Vec<f64> = reports
        .iter()
        .map(|r| (r.n_g + r.n_complement) as f64)
        .collect();
    let mean = totals.iter().sum::<f64>() / totals.len().max(1) as f64;
    let min = totals.iter().copied().fold(f64::INFINITY, f64::min);
    let first = reports.first();
    json!({
        "k": first.map(|r| r.k),
        "x_size": first.map(|r| r.x_size),
        "hypothesis_ratio": first.map(|r| r.hypothesis_ratio),
        "bound": first.map(|r| r.bound),
        "slack": slack,
        "min_total": if totals.is_empty() { Value::Null } else { json!(min) },
        "mean_total": mean,
    })
}

fn verify_commonality_campaign(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (_, host) = load_host(cfg)?;
    let cert = certify_ndl(&host)?;
    let k = k(cfg)?;
    let slack = cfg.epsilon.unwrap_or(0.0);
    let mut table = Table::new(&COLOURING_HEADERS);
    if let Some(sub_path) = &cfg.sub {
        let sub = read_graph(sub_path)?;
        let x = match &cfg.subset {
            Some(path) => read_vertex_list(path, host.n())?,
            None => VertexSet::full(host.n()),
        };
        let r = verify_commonality(&host, &cert, &x, &sub, k)?;
        let v = commonality_verdict(&r, slack);
        table.push(colouring_row(0, sub.edge_count(), &r, v));
        return Ok(Outcome {
            summary: totals_summary(&[&r], slack),
            records: json!([r]),
            verdicts: vec![v],
            table,
        });
    }
    let keep = cfg.keep.unwrap_or(DEFAULT_KEEP);
    if !(0.0..=1.0).contains(&keep) {
        bail!("keep must lie in [0, 1]");
    }
    let runs = colouring_trials(&host, &cert, k, keep, trials(cfg), seed(cfg))?;
    let verdicts: Vec<Verdict> = runs
        .iter()
        .map(|t| commonality_verdict(&t.report, slack))
        .collect();
    for (t, v) in runs.iter().zip(&verdicts) {
        table.push(colouring_row(t.trial, t.g_edges, &t.report, *v));
    }
    let reports: Vec<&CommonalityReport> = runs.iter().map(|t| &t.report).collect();
    Ok(Outcome {
        summary: totals_summary(&reports, slack),
        records: serde_json::to_value(&runs)?,
        verdicts,
        table,
    })
}

fn verify_turan(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (_, host) = load_host(cfg)?;
    let k = k(cfg)?;
    let delta = cfg.delta.unwrap_or(DEFAULT_DELTA);
    let runs = cycle_search_trials(&host, k, delta, trials(cfg), seed(cfg))?;
    let mut table = Table::new(&["trial", "g_edges", "host_edges", "found", "cycle"]);
    for t in &runs {
        let cycle = t.cycle.as_ref().map_or(String::new(), |c| {
            c.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        });
        table.push(vec![
            t.trial.to_string(),
            t.g_edges.to_string(),
            t.host_edges.to_string(),
            t.cycle.is_some().to_string(),
            cycle,
        ]);
    }
    let found = runs.iter().filter(|t| t.cycle.is_some()).count();
    Ok(Outcome {
        summary: json!({ "k": k, "delta": delta, "found": found, "trials": runs.len() }),
        records: serde_json::to_value(&runs)?,
        verdicts: runs
            .iter()
            .map(|t| Verdict::from(t.cycle.is_some()))
            .collect(),
        table,
    })
}

fn regularize_campaign(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (_, host) = load_host(cfg)?;
    let sub = read_graph(
        cfg.sub
            .as_ref()
            .ok_or_else(|| anyhow!("regularize needs --sub <file>"))?,
    )?;
    let alpha = cfg
        .alpha
        .ok_or_else(|| anyhow!("regularize needs --alpha"))?;
    let epsilon = cfg
        .epsilon
        .ok_or_else(|| anyhow!("regularize needs --epsilon"))?;
    let params = RegularizationParams::new(
        alpha,
        epsilon,
        cfg.rho.unwrap_or(DEFAULT_RHO),
        cfg.eta.unwrap_or(DEFAULT_ETA),
    )?;
    let mut table = Table::new(&["stage", "label", "size"]);
    match regularize(&host, &sub, &params) {
        Ok(r) => {
            for (i, round) in r.peel_trace.iter().enumerate() {
                table.push(vec![
                    "peel".into(),
                    format!("round{}", i + 1),
                    round.len().to_string(),
                ]);
            }
            for s in &r.trace {
                table.push(vec![
                    "cascade".into(),
                    s.label.clone(),
                    s.members.len().to_string(),
                ]);
            }
            table.push(vec!["result".into(), "X".into(), r.x.len().to_string()]);
            Ok(Outcome {
                summary: json!({ "x_size": r.x.len(), "core_size": r.core.len(), "checks": r.checks }),
                verdicts: vec![Verdict::from(r.checks.all_ok())],
                records: serde_json::to_value(&r)?,
                table,
            })
        }
        Err(Error::Extraction { reason, trace }) => {
            for (i, set) in trace.iter().enumerate() {
                table.push(vec![
                    "removed".into(),
                    format!("set{}", i + 1),
                    set.len().to_string(),
                ]);
            }
            Ok(Outcome {
                summary: json!({ "extraction_failed": reason, "trace": trace }),
                records: json!([]),
                verdicts: vec![Verdict::Fail],
                table,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn probe_bipartite(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (_, host) = load_host(cfg)?;
    let cert = certify_ndl(&host)?;
    let k = k(cfg)?;
    let slack = cfg.epsilon.unwrap_or(0.0);
    let runs = bipartite_probe_trials(&host, &cert, k, trials(cfg), seed(cfg))?;
    let verdict = |r: &CommonalityReport| {
        if r.n_g != 0 {
            Verdict::Fail
        } else if r.hypothesis_ratio >= 1.0 || r.bound <= 0.0 {
            Verdict::Vacuous
        } else {
            Verdict::from(r.n_complement as f64 >= (1.0 - slack) * r.bound)
        }
    };
    let mut table = Table::new(&COLOURING_HEADERS);
    let verdicts: Vec<Verdict> = runs.iter().map(|t| verdict(&t.report)).collect();
    for (t, v) in runs.iter().zip(&verdicts) {
        table.push(colouring_row(t.trial, t.g_edges, &t.report, *v));
    }
    let cut_fraction = runs.iter().map(|t| t.g_edges as f64).sum::<f64>()
        / (runs.len().max(1) as f64 * host.edge_count().max(1) as f64);
    let reports: Vec<&CommonalityReport> = runs.iter().map(|t| &t.report).collect();
    let mut summary = totals_summary(&reports, slack);
    summary["mean_cut_fraction"] = json!(cut_fraction);
    summary["max_red_copies"] = json!(runs.iter().map(|t| t.report.n_g).max());
    Ok(Outcome {
        summary,
        records: serde_json::to_value(&runs)?,
        verdicts,
        table,
    })
}

/// Every identity and inequality check on the built-in corpus.
fn oracle_suite(cfg: &ExperimentConfig) -> Result<Outcome> {
    let n = trials(cfg);
    let s = seed(cfg);
    let mut table = Table::new(&["check", "subject", "value", "limit", "pass"]);
    let mut verdicts = Vec::new();
    let mut push = |check: &str, subject: &str, value: String, limit: String, ok: bool| {
        table.push(vec![
            check.into(),
            subject.into(),
            value,
            limit,
            ok.to_string(),
        ]);
        verdicts.push(Verdict::from(ok));
    };

    let oracle = oracle_rows(&corpus_up_to(10), &oracle_patterns())?;
    for r in &oracle {
        push(
            "hom-oracle",
            &format!("{} {}", r.graph, r.pattern),
            r.fast.to_string(),
            r.brute.to_string(),
            r.agree,
        );
    }

    let mut regular = corpus();
    regular.retain(|e| e.graph.regular_degree().is_ok_and(|d| d > 0));
    let traces = trace_rows(&regular, &[1, 2, 3, 4], &[1, 2, 3])?;
    for r in &traces {
        push(
            &format!("{}-walks", r.kind),
            &format!("{} k={}", r.graph, r.k),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.holds,
        );
    }

    let mut mixing = Vec::new();
    for e in &regular {
        let cert = certify_ndl(&e.graph)?;
        let m = mixing_trials(e, &cert, n, s)?;
        push(
            "mixing",
            &e.name,
            m.violations.to_string(),
            "0".into(),
            m.violations == 0,
        );
        mixing.push(m);
    }

    let cancel = cancel_identity_trials(n, s)?;
    let worst = cancel.iter().copied().fold(0.0, f64::max);
    push(
        "cancellation",
        &format!("{n} triples"),
        worst.to_string(),
        "1e-12".into(),
        worst <= 1e-12,
    );

    let q = q_brute_trials(n, s)?;
    let worst = q.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    push(
        "q-vs-brute",
        &format!("{n} instances"),
        worst.to_string(),
        "1e-12".into(),
        worst <= 1e-12,
    );

    let t = t_combination_trials(&paley(13)?, n, s)?;
    let min = t.iter().map(|r| r.value).fold(f64::INFINITY, f64::min);
    push(
        "t-combination",
        "paley 13",
        min.to_string(),
        "-1e-9".into(),
        min >= -1e-9,
    );

    let cover = cover_rows(&[1, 2]);
    for c in &cover {
        push(
            "cover",
            &format!("k={}", c.k),
            c.mismatches.to_string(),
            "0".into(),
            c.mismatches == 0,
        );
    }

    let failed = verdicts.iter().filter(|v| **v == Verdict::Fail).count();
    Ok(Outcome {
        summary: json!({ "checks": verdicts.len(), "failed": failed }),
        records: json!({
            "oracle": oracle,
            "traces": traces,
            "mixing": mixing,
            "q_vs_brute": q,
            "t_combination": t,
            "cover": cover,
        }),
        verdicts,
        table,
    })
}
