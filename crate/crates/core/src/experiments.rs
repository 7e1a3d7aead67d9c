//! Built-in corpus and randomized trial runners shared by the CLI and the
//! acceptance suite.
//!
//! Every trial draws from its own stream `rng(seed, trial)`, so results do not
//! depend on thread scheduling.

use crate::commonality::{
    cancel_identity_check, cover_multiplicities, q_polynomial, q_polynomial_brute,
    signed_difference, t_combination, t_sequence, verify_commonality, CommonalityReport,
    EdgeFunction,
};
use crate::constructions::{complete, cycle, paley, random_regular, rng, standard, Standard};
use crate::counting::{brute_hom_count, find_cycle, hom_count, hom_count_cycle, Pattern};
use crate::error::{in_trial, input, Result};
use crate::exec::try_map_range;
use crate::graph::{Graph, VertexSet};
use crate::regularize::RegularizationParams;
use crate::spectral::{certify_ndl, expander_mixing_check, NdlCertificate};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// `f(0..count)` in parallel, tagging any error with its trial index.
fn run_trials<T, F>(count: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    try_map_range(count, |t| in_trial(t, f(t)))
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

fn entry(name: impl Into<String>, graph: Graph) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        graph,
    }
}

/// Small named graphs: complete graphs, cycles, Paley graphs, two random
/// regular graphs and two complete bipartite graphs.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push(entry(format!("K{n}"), complete(n)));
    }
    for n in 3..=8 {
        out.push(entry(format!("C{n}"), cycle(n)));
    }
    for q in [5, 13, 17] {
        out.push(entry(format!("paley{q}"), paley(q).expect("prime 1 mod 4")));
    }
    out.push(entry(
        "rr10_3_s1",
        random_regular(10, 3, 1).expect("10*3 even"),
    ));
    out.push(entry(
        "rr12_4_s2",
        random_regular(12, 4, 2).expect("12*4 even"),
    ));
    for a in [3, 4] {
        let g = standard(Standard::CompleteBipartite(a, a)).expect("positive parts");
        out.push(entry(format!("K{a},{a}"), g));
    }
    out
}

/// Entries of [`corpus`] with at most `max_n` vertices.
pub fn corpus_up_to(max_n: usize) -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| e.graph.n() <= max_n)
        .collect()
}

/// `C_2..C_7`, `P_0..P_6` and the figure-eight with two triangles.
pub fn oracle_patterns() -> Vec<Pattern> {
    let mut out: Vec<Pattern> = (2..=7).map(Pattern::Cycle).collect();
    out.extend((0..=6).map(Pattern::Path));
    out.push(Pattern::FigureEight { q: 1, r: 1 });
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleRow {
    pub graph: String,
    pub pattern: String,
    pub brute: u64,
    #[serde(serialize_with = "crate::counting::serialize_count")]
    pub fast: num_bigint::BigUint,
    pub agree: bool,
}

/// Brute-force homomorphism counts next to the walk-based counts.
pub fn oracle_rows(entries: &[CorpusEntry], patterns: &[Pattern]) -> Result<Vec<OracleRow>> {
    let pairs: Vec<(&CorpusEntry, Pattern)> = entries
        .iter()
        .flat_map(|e| patterns.iter().map(move |&p| (e, p)))
        .collect();
    try_map_range(pairs.len(), |i| {
        let (e, p) = pairs[i];
        let brute = brute_hom_count(&p.to_graph()?, &e.graph)?;
        let fast = hom_count(&e.graph, p);
        Ok(OracleRow {
            graph: e.name.clone(),
            pattern: p.to_string(),
            brute,
            agree: fast == brute.into(),
            fast,
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceRow {
    pub graph: String,
    pub k: u32,
    /// `even` for `h_{C_{2k}} ≤ d^{2k} + λ^{2k−2}dn`, `odd` for
    /// `|h_{C_{2k+1}} − d^{2k+1}| ≤ λ·h_{C_{2k}}`.
    pub kind: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Relative slack for the float comparison of exact counts with spectral
/// bounds.
const TRACE_TOLERANCE: f64 = 1e-9;

fn cycle_count(g: &Graph, m: usize) -> f64 {
    hom_count_cycle(g, m).to_f64().unwrap_or(f64::INFINITY)
}

/// Closed-walk bounds for every regular entry (`d > 0`).
pub fn trace_rows(
    entries: &[CorpusEntry],
    even_ks: &[u32],
    odd_ks: &[u32],
) -> Result<Vec<TraceRow>> {
    let mut rows = Vec::new();
    for e in entries {
        if e.graph.regular_degree().map_or(true, |d| d == 0) {
            continue;
        }
        let cert = certify_ndl(&e.graph)?;
        let d = cert.d as f64;
        for &k in even_ks {
            let lhs = cycle_count(&e.graph, 2 * k as usize);
            let rhs = cert.even_cycle_trace_bound(k);
            rows.push(TraceRow {
                graph: e.name.clone(),
                k,
                kind: "even",
                lhs,
                rhs,
                holds: lhs <= rhs * (1.0 + TRACE_TOLERANCE),
            });
        }
        for &k in odd_ks {
            let lhs = (cycle_count(&e.graph, 2 * k as usize + 1) - d.powi(2 * k as i32 + 1)).abs();
            let rhs = cert.lambda * cycle_count(&e.graph, 2 * k as usize);
            rows.push(TraceRow {
                graph: e.name.clone(),
                k,
                kind: "odd",
                lhs,
                rhs,
                holds: lhs <= rhs + TRACE_TOLERANCE * d.powi(2 * k as i32 + 1),
            });
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct MixingSummary {
    pub graph: String,
    pub pairs: usize,
    pub violations: usize,
    /// Largest `lhs / rhs` seen.
    pub worst_ratio: f64,
}

/// Random weight pairs in `[0,1]^n`; half are 0/1 indicator vectors.
pub fn mixing_trials(
    e: &CorpusEntry,
    cert: &NdlCertificate,
    pairs: usize,
    seed: u64,
) -> Result<MixingSummary> {
    let n = e.graph.n();
    let checks = run_trials(pairs, |t| {
        let mut r = rng(seed, t as u64);
        let draw = |r: &mut ChaCha8Rng| -> Vec<f64> {
            if t % 2 == 0 {
                (0..n).map(|_| r.gen::<f64>()).collect()
            } else {
                (0..n)
                    .map(|_| if r.gen_bool(0.5) { 1.0 } else { 0.0 })
                    .collect()
            }
        };
        let u = draw(&mut r);
        let v = draw(&mut r);
        expander_mixing_check(cert, &e.graph, &u, &v)
    })?;
    Ok(MixingSummary {
        graph: e.name.clone(),
        pairs,
        violations: checks.iter().filter(|c| !c.holds).count(),
        worst_ratio: checks
            .iter()
            .filter(|c| c.rhs > 0.0)
            .map(|c| c.lhs / c.rhs)
            .fold(0.0, f64::max),
    })
}

/// Each edge kept independently with probability `keep`.
pub fn random_subgraph(host: &Graph, keep: f64, r: &mut ChaCha8Rng) -> Graph {
    host.filter_edges(|_, _| r.gen_bool(keep))
}

/// Exactly `count` host edges chosen uniformly.
pub fn random_edge_subset(host: &Graph, count: usize, r: &mut ChaCha8Rng) -> Result<Graph> {
    if count > host.edge_count() {
        return Err(input(format!(
            "cannot pick {count} of {} edges",
            host.edge_count()
        )));
    }
    let mut edges = host.edges().to_vec();
    let (chosen, _) = edges.partial_shuffle(r, count);
    Graph::from_edge_list(host.n(), chosen)
}

/// Host edges crossing a uniformly random balanced bipartition.
pub fn random_cut(host: &Graph, r: &mut ChaCha8Rng) -> Graph {
    let mut order: Vec<usize> = (0..host.n()).collect();
    order.shuffle(r);
    let mut side = vec![false; host.n()];
    for &v in &order[..host.n() / 2] {
        side[v] = true;
    }
    host.filter_edges(|u, v| side[u] != side[v])
}

/// Random colouring `g ≤ γ` of `Γ[X]` on a random `X` with size in
/// `x_range`.
fn random_instance(
    host: &Graph,
    x_range: (usize, usize),
    r: &mut ChaCha8Rng,
) -> Result<(EdgeFunction, EdgeFunction)> {
    let size = r.gen_range(x_range.0..=x_range.1.min(host.n()));
    let mut vs: Vec<usize> = (0..host.n()).collect();
    let (chosen, _) = vs.partial_shuffle(r, size);
    let x = VertexSet::new(host.n(), chosen.iter().copied())?;
    let gamma = EdgeFunction::indicator(host, &x)?;
    let keep = r.gen_range(0.1..0.9);
    let g = EdgeFunction::indicator(&random_subgraph(host, keep, r), &x)?;
    Ok((gamma, g))
}

fn cancel_hosts() -> Vec<Graph> {
    let mut hosts: Vec<Graph> = (4..=8).map(complete).collect();
    hosts.push(paley(5).expect("prime"));
    hosts.push(paley(13).expect("prime"));
    hosts.push(random_regular(10, 3, 1).expect("10*3 even"));
    hosts
}

/// `max_abs_diff` of the cancellation identity over `count` random triples
/// with `H ∈ {C_3, C_5}`.
pub fn cancel_identity_trials(count: usize, seed: u64) -> Result<Vec<f64>> {
    let hosts = cancel_hosts();
    run_trials(count, |t| {
        let mut r = rng(seed, t as u64);
        let host = &hosts[r.gen_range(0..hosts.len())];
        let (gamma, g) = random_instance(host, (1, host.n()), &mut r)?;
        let pattern = if r.gen_bool(0.5) {
            Pattern::Cycle(3)
        } else {
            Pattern::Cycle(5)
        };
        Ok(cancel_identity_check(pattern, &gamma, &g)?.max_abs_diff)
    })
}

/// Patterns with at most seven edges used against the brute-force `Q`.
pub fn small_patterns() -> Vec<Pattern> {
    let mut out: Vec<Pattern> = (3..=7).map(Pattern::Cycle).collect();
    out.extend((1..=6).map(Pattern::Path));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct QComparison {
    pub pattern: String,
    pub x_size: usize,
    pub z: f64,
    pub closed_form: f64,
    pub brute: f64,
    pub abs_diff: f64,
}

/// Closed-form `Q` against vertex-map enumeration on `|X| ≤ 8`.
pub fn q_brute_trials(count: usize, seed: u64) -> Result<Vec<QComparison>> {
    let hosts = cancel_hosts();
    let patterns = small_patterns();
    run_trials(count, |t| {
        let mut r = rng(seed, t as u64);
        let host = &hosts[r.gen_range(0..hosts.len())];
        let (gamma, g) = random_instance(host, (2, 8), &mut r)?;
        let f = signed_difference(&gamma, &g)?;
        let pattern = patterns[r.gen_range(0..patterns.len())];
        let z = r.gen::<f64>();
        let closed_form = q_polynomial(pattern, &gamma, &f, z)?;
        let brute = q_polynomial_brute(pattern, &gamma, &f, z)?;
        Ok(QComparison {
            pattern: pattern.to_string(),
            x_size: gamma.size(),
            z,
            closed_form,
            brute,
            abs_diff: (closed_form - brute).abs(),
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TCombination {
    pub z: f64,
    pub ell: usize,
    pub value: f64,
}

/// `T_{2ℓ} + 2T_{2ℓ−1} + T_{2ℓ−2}` for `ℓ ∈ {1,2}` on `host` with `X = V`,
/// a random colouring and a random `z ∈ (0,1]`.
pub fn t_combination_trials(host: &Graph, count: usize, seed: u64) -> Result<Vec<TCombination>> {
    let cert = certify_ndl(host)?;
    let x = VertexSet::full(host.n());
    let gamma = EdgeFunction::indicator(host, &x)?;
    let per_trial: Vec<[TCombination; 2]> = run_trials(count, |t| {
        let mut r = rng(seed, t as u64);
        let keep = r.gen_range(0.05..0.95);
        let g = EdgeFunction::indicator(&random_subgraph(host, keep, &mut r), &x)?;
        let f = signed_difference(&gamma, &g)?;
        let z = 1.0 - r.gen::<f64>();
        let ts = t_sequence(2, &gamma, &f, z, cert.p)?;
        Ok([1, 2].map(|ell| TCombination {
            z,
            ell,
            value: t_combination(&ts, ell),
        }))
    })?;
    Ok(per_trial.into_iter().flatten().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverRow {
    pub k: usize,
    pub subsets: usize,
    pub mismatches: usize,
}

/// Exhaustive cover-multiplicity check for each `k`.
pub fn cover_rows(ks: &[usize]) -> Vec<CoverRow> {
    ks.iter()
        .map(|&k| {
            let m = cover_multiplicities(k);
            CoverRow {
                k,
                subsets: m.len(),
                mismatches: m.values().filter(|(got, want)| got != want).count(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ColouringTrial {
    pub trial: usize,
    pub g_edges: usize,
    pub report: CommonalityReport,
}

/// Monochromatic `C_{2k+1}` counts for random colourings of the whole host,
/// each edge coloured red with probability `keep`.
pub fn colouring_trials(
    host: &Graph,
    cert: &NdlCertificate,
    k: usize,
    keep: f64,
    trials: usize,
    seed: u64,
) -> Result<Vec<ColouringTrial>> {
    let x = VertexSet::full(host.n());
    run_trials(trials, |t| {
        let g = random_subgraph(host, keep, &mut rng(seed, t as u64));
        Ok(ColouringTrial {
            trial: t,
            g_edges: g.edge_count(),
            report: verify_commonality(host, cert, &x, &g, k)?,
        })
    })
}

/// Monochromatic counts when the red class is a random balanced cut.
pub fn bipartite_probe_trials(
    host: &Graph,
    cert: &NdlCertificate,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<ColouringTrial>> {
    let x = VertexSet::full(host.n());
    run_trials(trials, |t| {
        let g = random_cut(host, &mut rng(seed, t as u64));
        Ok(ColouringTrial {
            trial: t,
            g_edges: g.edge_count(),
            report: verify_commonality(host, cert, &x, &g, k)?,
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleSearchTrial {
    pub trial: usize,
    pub g_edges: usize,
    pub host_edges: usize,
    pub cycle: Option<Vec<usize>>,
}

/// Searches for `C_{2k+1}` in `⌈(½+δ)e(Γ)⌉` uniformly chosen host edges.
pub fn cycle_search_trials(
    host: &Graph,
    k: usize,
    delta: f64,
    trials: usize,
    seed: u64,
) -> Result<Vec<CycleSearchTrial>> {
    if k == 0 || !(0.0..=0.5).contains(&delta) {
        return Err(input("need k >= 1 and 0 <= delta <= 1/2"));
    }
    let count = ((0.5 + delta) * host.edge_count() as f64).ceil() as usize;
    run_trials(trials, |t| {
        let g = random_edge_subset(host, count.min(host.edge_count()), &mut rng(seed, t as u64))?;
        Ok(CycleSearchTrial {
            trial: t,
            g_edges: g.edge_count(),
            host_edges: host.edge_count(),
            cycle: find_cycle(&g, 2 * k + 1)?,
        })
    })
}

#[derive(Clone, Debug)]
pub struct RegularizationInstance {
    pub name: String,
    pub host: Graph,
    pub sub: Graph,
    pub params: RegularizationParams,
}

/// Random hosts with random dense subgraphs and parameters meeting the
/// density precondition.
pub fn regularization_instances(count: usize, seed: u64) -> Result<Vec<RegularizationInstance>> {
    run_trials(count, |t| {
        let mut r = rng(seed, t as u64);
        let (name, host) = match t % 4 {
            0 => ("paley13".to_string(), paley(13)?),
            1 => ("paley17".to_string(), paley(17)?),
            2 => {
                let n = 2 * r.gen_range(6..=12);
                (format!("rr{n}_4"), random_regular(n, 4, r.gen())?)
            }
            _ => {
                let n = r.gen_range(5..=12);
                (format!("K{n}"), complete(n))
            }
        };
        let keep = r.gen_range(0.4..1.0);
        let mut sub = random_subgraph(&host, keep, &mut r);
        if sub.edge_count() == 0 {
            sub = host.clone();
        }
        let ratio = sub.edge_count() as f64 / host.edge_count() as f64;
        let alpha = (ratio * r.gen_range(0.3..0.8)).max(1e-3);
        let epsilon = alpha * r.gen_range(0.5..0.95);
        let rho = r.gen_range(0.05..1.0);
        let eta = r.gen_range(1e-4..0.5);
        Ok(RegularizationInstance {
            name,
            host,
            sub,
            params: RegularizationParams::new(alpha, epsilon, rho, eta)?,
        })
    })
}
