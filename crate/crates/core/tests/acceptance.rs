//! Acceptance suite. Runs every criterion, prints one line each and exits
//! nonzero if any fails.

use ndl_core::constructions::paley;
use ndl_core::experiments::*;
use ndl_core::regularize::{regularize, RegularizationParams, RegularizationResult};
use ndl_core::spectral::certify_ndl;
use ndl_core::{Graph, VertexSet};
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 20240601;

fn within(limit_secs: u64, start: Instant) -> (bool, Duration) {
    let spent = start.elapsed();
    (spent < Duration::from_secs(limit_secs), spent)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let rows = oracle_rows(&corpus_up_to(10), &oracle_patterns()).unwrap();
    let bad = rows.iter().filter(|r| !r.agree).count();
    let (fast, spent) = within(60, start);
    outcome(
        bad == 0 && fast,
        format!("{} comparisons, {bad} mismatches, {spent:.1?}", rows.len()),
    )
}

fn cancellation_identity() -> Outcome {
    let start = Instant::now();
    let diffs = cancel_identity_trials(500, SEED).unwrap();
    let worst = diffs.iter().copied().fold(0.0, f64::max);
    let (fast, spent) = within(120, start);
    outcome(
        worst <= 1e-12 && fast,
        format!(
            "{} triples, max |diff| = {worst:.2e}, {spent:.1?}",
            diffs.len()
        ),
    )
}

fn q_closed_form_vs_brute() -> Outcome {
    let start = Instant::now();
    let rows = q_brute_trials(200, SEED).unwrap();
    let worst = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    let (fast, spent) = within(60, start);
    outcome(
        worst <= 1e-12 && fast,
        format!(
            "{} instances, max |diff| = {worst:.2e}, {spent:.1?}",
            rows.len()
        ),
    )
}

fn certified_corpus() -> Vec<CorpusEntry> {
    let mut entries: Vec<CorpusEntry> = corpus()
        .into_iter()
        .filter(|e| e.graph.regular_degree().is_ok_and(|d| d > 0))
        .collect();
    entries.push(CorpusEntry {
        name: "paley101".into(),
        graph: paley(101).unwrap(),
    });
    entries
}

fn even_trace_bound() -> Outcome {
    let rows = trace_rows(&certified_corpus(), &[1, 2, 3, 4], &[]).unwrap();
    let bad = rows.iter().filter(|r| !r.holds).count();
    outcome(
        bad == 0,
        format!("{} (graph, k) pairs, {bad} violations", rows.len()),
    )
}

fn odd_trace_estimate() -> Outcome {
    let rows = trace_rows(&certified_corpus(), &[], &[1, 2, 3]).unwrap();
    let bad = rows.iter().filter(|r| !r.holds).count();
    outcome(
        bad == 0,
        format!("{} (graph, k) pairs, {bad} violations", rows.len()),
    )
}

fn mixing_inequality() -> Outcome {
    let mut pairs = 0;
    let mut bad = 0;
    let mut worst: f64 = 0.0;
    for e in certified_corpus() {
        let cert = certify_ndl(&e.graph).unwrap();
        let s = mixing_trials(&e, &cert, 1000, SEED).unwrap();
        pairs += s.pairs;
        bad += s.violations;
        worst = worst.max(s.worst_ratio);
    }
    outcome(
        bad == 0,
        format!("{pairs} weight pairs, {bad} violations, worst lhs/rhs = {worst:.3}"),
    )
}

fn random_colourings() -> Outcome {
    let start = Instant::now();
    let g = paley(101).unwrap();
    let cert = certify_ndl(&g).unwrap();
    let target = (cert.d as f64).powi(3) / 4.0;
    let trials = colouring_trials(&g, &cert, 1, 0.5, 100, SEED).unwrap();
    let totals: Vec<f64> = trials
        .iter()
        .map(|t| (t.report.n_g + t.report.n_complement) as f64)
        .collect();
    let min = totals.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = totals.iter().sum::<f64>() / totals.len() as f64;
    let rel = (mean - target).abs() / target;
    let (fast, spent) = within(600, start);
    outcome(
        min >= 0.5 * target && rel <= 0.15 && fast,
        format!(
            "ratio {:.4}, min {min:.0}, mean {mean:.1} vs {target:.0} ({:.1}% off), {spent:.1?}",
            cert.hypothesis_ratio(1).unwrap(),
            rel * 100.0
        ),
    )
}

fn bipartite_probe() -> Outcome {
    let g = paley(101).unwrap();
    let cert = certify_ndl(&g).unwrap();
    let target = 0.5 * (cert.d as f64).powi(3) / 4.0;
    let trials = bipartite_probe_trials(&g, &cert, 1, 50, SEED).unwrap();
    let red = trials.iter().map(|t| t.report.n_g).max().unwrap();
    let blue = trials.iter().map(|t| t.report.n_complement).min().unwrap();
    let cut = trials.iter().map(|t| t.g_edges as f64).sum::<f64>() / (50.0 * g.edge_count() as f64);
    outcome(
        red == 0 && blue as f64 >= target,
        format!("max red triangles {red}, min complement {blue} vs {target:.0}, mean cut fraction {cut:.3}"),
    )
}

fn is_cycle_in(g: &Graph, c: &[usize]) -> bool {
    let mut seen = c.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == c.len() && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn cycle_search() -> Outcome {
    let start = Instant::now();
    let g = paley(101).unwrap();
    let trials = cycle_search_trials(&g, 1, 0.05, 100, SEED).unwrap();
    let found = trials
        .iter()
        .filter(|t| {
            t.cycle
                .as_deref()
                .is_some_and(|c| c.len() == 3 && is_cycle_in(&g, c))
        })
        .count();
    let dense = trials
        .iter()
        .all(|t| t.g_edges as f64 >= 0.55 * t.host_edges as f64);
    let (fast, spent) = within(120, start);
    outcome(
        found == 100 && dense && fast,
        format!("triangle found and verified in {found}/100, {spent:.1?}"),
    )
}

fn t_combination() -> Outcome {
    let rows = t_combination_trials(&paley(13).unwrap(), 100, SEED).unwrap();
    let min = rows.iter().map(|r| r.value).fold(f64::INFINITY, f64::min);
    outcome(
        min >= -1e-9,
        format!("{} values, min {min:.3e}", rows.len()),
    )
}

fn derivative_cover() -> Outcome {
    let rows = cover_rows(&[1, 2]);
    let bad: usize = rows.iter().map(|r| r.mismatches).sum();
    let n: usize = rows.iter().map(|r| r.subsets).sum();
    outcome(
        bad == 0 && n == 3 + 15,
        format!("{n} subsets, {bad} mismatches"),
    )
}

/// Recomputes the three conditions with plain floating point and neighbour
/// scans.
fn recheck(
    host: &Graph,
    sub: &Graph,
    x: &VertexSet,
    params: &RegularizationParams,
) -> (bool, bool, bool, f64) {
    let n = host.n() as f64;
    let p = host.degree(0) as f64 / n;
    let size = x.len() as f64;
    let inside =
        |g: &Graph, v: usize| g.neighbors(v).iter().filter(|w| x.contains(**w)).count() as f64;
    let size_ok = size >= params.epsilon.sqrt() * n / 8.0;
    let g_ok = x
        .members()
        .iter()
        .all(|&v| inside(sub, v) >= (params.alpha - params.epsilon) * p * size);
    let devs: Vec<f64> = x
        .members()
        .iter()
        .map(|&v| (inside(host, v) - p * size).abs())
        .collect();
    let gamma_ok = devs.iter().all(|&d| d <= params.epsilon * p * size);
    let dev = devs.iter().copied().fold(0.0, f64::max) / (p * size);
    (size_ok, g_ok, gamma_ok, dev)
}

fn consistent(
    r: &RegularizationResult,
    host: &Graph,
    sub: &Graph,
    params: &RegularizationParams,
) -> bool {
    let (s, g, gamma, dev) = recheck(host, sub, &r.x, params);
    let flags = (
        r.checks.size_ok,
        r.checks.min_g_degree_ok,
        r.checks.gamma_degree_ok,
    ) == (s, g, gamma);
    let deleted: Vec<usize> = r
        .trace
        .iter()
        .flat_map(|d| d.members.iter().copied())
        .collect();
    let disjoint = deleted
        .iter()
        .all(|&v| !r.x.contains(v) && r.core.contains(v));
    let covered = r.x.len() + deleted.len() == r.core.len();
    flags && (r.checks.gamma_deviation - dev).abs() <= 1e-12 && disjoint && covered
}

fn regularization_soundness() -> Outcome {
    let instances = regularization_instances(50, SEED).unwrap();
    let (mut agree, mut failed) = (0, 0);
    for inst in &instances {
        match regularize(&inst.host, &inst.sub, &inst.params) {
            Ok(r) => agree += consistent(&r, &inst.host, &inst.sub, &inst.params) as usize,
            Err(ndl_core::Error::Extraction { trace, .. }) => {
                // the trace must partition the host's vertices
                let mut all: Vec<usize> = trace.into_iter().flatten().collect();
                all.sort_unstable();
                failed += (all == (0..inst.host.n()).collect::<Vec<_>>()) as usize;
            }
            Err(e) => return outcome(false, format!("{}: {e}", inst.name)),
        }
    }
    let host = paley(13).unwrap();
    let params = RegularizationParams::new(1.0, 0.1, 0.1, 0.01).unwrap();
    let r = regularize(&host, &host, &params).unwrap();
    let trivial = r.x == VertexSet::full(13)
        && r.checks.all_ok()
        && r.checks.gamma_deviation == 0.0
        && consistent(&r, &host, &host, &params);
    outcome(
        agree + failed == instances.len() && trivial,
        format!(
            "{} instances: {agree} results re-verified, {failed} extraction traces partition V, identity case X = V with zero deviation: {trivial}",
            instances.len(),
        ),
    )
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("oracle equivalence", oracle_equivalence),
        ("cancellation identity", cancellation_identity),
        ("Q closed form vs brute force", q_closed_form_vs_brute),
        ("even closed-walk bound", even_trace_bound),
        ("odd closed-walk estimate", odd_trace_estimate),
        ("weighted mixing inequality", mixing_inequality),
        ("random colourings of paley(101)", random_colourings),
        ("bipartite cut probe", bipartite_probe),
        ("triangle search at density 0.55", cycle_search),
        ("T-sequence combination", t_combination),
        ("derivative cover multiplicities", derivative_cover),
        ("regularization soundness", regularization_soundness),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failures += !o.pass as usize;
        println!(
            "[{}] {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
