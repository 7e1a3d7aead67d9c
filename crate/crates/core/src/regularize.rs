//! Extraction of a vertex set `X` on which the host is almost regular and a
//! subgraph `G` stays dense.
//!
//! The process has two stages. [`dense_core`] peels vertices of low
//! `G`-degree until every survivor of `Y` has `deg_{G[Y]} ≥ (α−ε₁)p|Y|`.
//! [`cascade`] then deletes `Y₀ = Y₋ ∪ Y₊` (host-degree outliers in `Y`)
//! followed by the sets
//! `Y_{i+1} = {y ∉ Y₀ ∪ … ∪ Y_i : e_{G[Y]}(y, Y_i) ≥ ε₁p|Y|/2^{i+2}}`.
//!
//! All threshold comparisons are exact: `p = d/n` is rational and the float
//! parameters are converted to the rationals they represent.

use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegularizationParams {
    pub alpha: f64,
    pub epsilon: f64,
    pub rho: f64,
    pub eta: f64,
    /// `ε/4`.
    pub epsilon1: f64,
    /// `max(1/(2ϱ) − 2, 0)`.
    pub k: f64,
}

impl RegularizationParams {
    pub fn new(alpha: f64, epsilon: f64, rho: f64, eta: f64) -> Result<Self> {
        let finite = [alpha, epsilon, rho, eta].iter().all(|v| v.is_finite());
        if !finite || !(0.0 < epsilon && epsilon < alpha && alpha <= 1.0) {
            return Err(input(format!(
                "need 0 < epsilon < alpha <= 1, got epsilon={epsilon}, alpha={alpha}"
            )));
        }
        if rho <= 0.0 || eta <= 0.0 {
            return Err(input("rho and eta must be positive"));
        }
        Ok(Self {
            alpha,
            epsilon,
            rho,
            eta,
            epsilon1: epsilon / 4.0,
            k: (1.0 / (2.0 * rho) - 2.0).max(0.0),
        })
    }

    /// Largest cascade index: `⌈K⌉`.
    pub fn iteration_cap(&self) -> usize {
        self.k.ceil() as usize
    }

    /// Which of the constraints on `η` used by the size argument hold.
    pub fn eta_constraints(&self) -> EtaConstraints {
        let e1 = self.epsilon1;
        let cubic = e1.powi(3) / 2f64.powf(3.0 + 1.0 / self.rho);
        let (inverse_k, ratio) = if self.k > 0.0 {
            (1.0 / (2.0 * self.k), e1 / (self.k * (1.0 + 2.0 * e1)))
        } else {
            (f64::INFINITY, f64::INFINITY)
        };
        EtaConstraints {
            cubic: Limit::new(self.eta, cubic),
            inverse_k: Limit::new(self.eta, inverse_k),
            ratio: Limit::new(self.eta, ratio),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Limit {
    /// `None` when the constraint is void (`K = 0`).
    pub limit: Option<f64>,
    pub satisfied: bool,
}

impl Limit {
    fn new(eta: f64, limit: f64) -> Self {
        Self {
            limit: limit.is_finite().then_some(limit),
            satisfied: eta <= limit,
        }
    }
}

/// `η ≤ ε₁³/2^{3+1/ϱ}`, `η ≤ 1/(2K)` and `η ≤ ε₁/(K(1+2ε₁))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EtaConstraints {
    pub cubic: Limit,
    pub inverse_k: Limit,
    pub ratio: Limit,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeletedSet {
    /// `Y-`, `Y+`, `Y1`, `Y2`, ...
    pub label: String,
    pub members: Vec<usize>,
}

/// Conditions measured on the final `X`, with signed margins (nonnegative iff
/// the condition holds).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Checks {
    /// `|X| ≥ √ε·n/8`.
    pub size_ok: bool,
    pub size_margin: f64,
    /// `deg_{G[X]}(x) ≥ (α−ε)p|X|` for all `x ∈ X`.
    pub min_g_degree_ok: bool,
    pub min_g_degree_margin: f64,
    /// `(1−ε)p|X| ≤ deg_{Γ[X]}(x) ≤ (1+ε)p|X|` for all `x ∈ X`.
    pub gamma_degree_ok: bool,
    /// `max_x |deg_{Γ[X]}(x)/(p|X|) − 1|`.
    pub gamma_deviation: f64,
}

impl Checks {
    pub fn all_ok(&self) -> bool {
        self.size_ok && self.min_g_degree_ok && self.gamma_degree_ok
    }
}

/// Sizes of the cascade sets against `η^{i+1}p^{2(i+1)ϱ}|Y|`. Recorded, not
/// enforced.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimMonitor {
    /// `|Y₀|, |Y₁|, ...`
    pub sizes: Vec<usize>,
    pub limits: Vec<f64>,
    pub within_limits: Vec<bool>,
    /// Set when `|Y₁|, |Y₂|, ...` is not nonincreasing.
    pub outside_claim_regime: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularizationResult {
    pub params: RegularizationParams,
    pub n: usize,
    pub d: usize,
    pub p: f64,
    /// Output of [`dense_core`].
    pub core: VertexSet,
    /// Peeling rounds that produced `core`.
    pub peel_trace: Vec<Vec<usize>>,
    /// Deleted sets in order: `Y-`, `Y+`, `Y1`, ...
    pub trace: Vec<DeletedSet>,
    pub x: VertexSet,
    pub checks: Checks,
    pub claim: ClaimMonitor,
    pub eta: EtaConstraints,
}

fn exact(v: f64) -> BigRational {
    BigRational::from_float(v).expect("parameters are validated finite")
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// `p = d/n` of a regular host, exactly.
fn density(host: &Graph) -> Result<(usize, BigRational)> {
    if host.n() == 0 {
        return Err(input("host has no vertices"));
    }
    let d = host.regular_degree()?;
    Ok((d, BigRational::new(BigInt::from(d), BigInt::from(host.n()))))
}

fn check_inputs(host: &Graph, g_sub: &Graph, params: &RegularizationParams) -> Result<()> {
    host.check_contains(g_sub)?;
    if int(g_sub.edge_count()) < exact(params.alpha) * int(host.edge_count()) {
        return Err(Error::Domain(format!(
            "subgraph has {} edges, fewer than alpha * {} host edges",
            g_sub.edge_count(),
            host.edge_count()
        )));
    }
    Ok(())
}

/// Core `Y` found by peeling, together with the removed rounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseCore {
    pub y: VertexSet,
    pub rounds: Vec<Vec<usize>>,
}

/// Repeatedly removes every vertex with `deg_{G[Y]} < (α−ε₁)p|Y|`, measured
/// against the current `Y`, until none remains.
pub fn dense_core(host: &Graph, g_sub: &Graph, params: &RegularizationParams) -> Result<DenseCore> {
    let (_, p) = density(host)?;
    check_inputs(host, g_sub, params)?;
    let scale = (exact(params.alpha) - exact(params.epsilon1)) * p;
    let mut mask = vec![true; host.n()];
    let mut size = host.n();
    let mut rounds = Vec::new();
    while size > 0 {
        let threshold = &scale * int(size);
        let low: Vec<usize> = (0..host.n())
            .filter(|&v| mask[v] && int(g_sub.degree_into(v, &mask)) < threshold)
            .collect();
        if low.is_empty() {
            break;
        }
        for &v in &low {
            mask[v] = false;
        }
        size -= low.len();
        rounds.push(low);
    }
    if size == 0 {
        return Err(Error::Extraction {
            reason: "peeling removed every vertex".into(),
            trace: rounds,
        });
    }
    Ok(DenseCore {
        y: VertexSet::from_mask(&mask),
        rounds,
    })
}

/// Vertices of `Y` whose host degree inside `Y` is below `(1−ε₁)p|Y|`,
/// respectively above `(1+ε₁)p|Y|`, with `p = d/n` taken from the regular
/// host.
pub fn deviation_sets(
    host: &Graph,
    y: &VertexSet,
    epsilon1: f64,
) -> Result<(VertexSet, VertexSet)> {
    let (_, p) = density(host)?;
    if y.is_empty() {
        return Err(input("Y must be nonempty"));
    }
    if y.host_n() != host.n() || !epsilon1.is_finite() {
        return Err(input(
            "Y does not belong to the host, or epsilon1 is not finite",
        ));
    }
    let mask = y.mask();
    let center = p * int(y.len());
    let e1 = exact(epsilon1);
    let low = (BigRational::from_integer(1.into()) - &e1) * &center;
    let high = (BigRational::from_integer(1.into()) + &e1) * &center;
    let (mut minus, mut plus) = (Vec::new(), Vec::new());
    for &v in y.members() {
        let deg = int(host.degree_into(v, &mask));
        if deg < low {
            minus.push(v);
        } else if deg > high {
            plus.push(v);
        }
    }
    Ok((
        VertexSet::new(host.n(), minus)?,
        VertexSet::new(host.n(), plus)?,
    ))
}

/// Runs the deletion cascade on `Y` and measures the result.
pub fn cascade(
    host: &Graph,
    g_sub: &Graph,
    core: DenseCore,
    params: &RegularizationParams,
) -> Result<RegularizationResult> {
    let (d, p) = density(host)?;
    check_inputs(host, g_sub, params)?;
    let y = &core.y;
    let (minus, plus) = deviation_sets(host, y, params.epsilon1)?;
    let y_mask = y.mask();
    let mut removed = vec![false; host.n()];
    for &v in minus.members().iter().chain(plus.members()) {
        removed[v] = true;
    }
    let mut trace = vec![
        DeletedSet {
            label: "Y-".into(),
            members: minus.members().to_vec(),
        },
        DeletedSet {
            label: "Y+".into(),
            members: plus.members().to_vec(),
        },
    ];
    let mut sizes = vec![minus.len() + plus.len()];
    let mut current: Vec<bool> = removed.clone();
    let base = exact(params.epsilon1) * &p * int(y.len());
    for i in 0..params.iteration_cap() {
        if !current.iter().any(|&b| b) {
            break;
        }
        let threshold = &base / int(1usize << (i + 2).min(63));
        let next: Vec<usize> = y
            .members()
            .iter()
            .copied()
            .filter(|&v| !removed[v] && int(g_sub.degree_into(v, &current)) >= threshold)
            .collect();
        if next.is_empty() {
            break;
        }
        current = vec![false; host.n()];
        for &v in &next {
            removed[v] = true;
            current[v] = true;
        }
        sizes.push(next.len());
        trace.push(DeletedSet {
            label: format!("Y{}", i + 1),
            members: next,
        });
    }

    let x_mask: Vec<bool> = (0..host.n()).map(|v| y_mask[v] && !removed[v]).collect();
    let x = VertexSet::from_mask(&x_mask);
    if x.is_empty() {
        let mut sets = core.rounds.clone();
        sets.extend(trace.into_iter().map(|s| s.members));
        return Err(Error::Extraction {
            reason: "cascade removed every vertex of Y".into(),
            trace: sets,
        });
    }
    let checks = measure_checks(host, g_sub, &x, params)?;

    let p_f = d as f64 / host.n() as f64;
    let limits: Vec<f64> = (0..sizes.len())
        .map(|i| {
            let e = (i + 1) as i32;
            params.eta.powi(e) * p_f.powf(2.0 * e as f64 * params.rho) * y.len() as f64
        })
        .collect();
    let within_limits = sizes
        .iter()
        .zip(&limits)
        .map(|(&s, &l)| s as f64 <= l)
        .collect();
    let outside_claim_regime = sizes
        .iter()
        .skip(1)
        .zip(sizes.iter().skip(2))
        .any(|(a, b)| b > a);

    Ok(RegularizationResult {
        params: *params,
        n: host.n(),
        d,
        p: p_f,
        core: core.y.clone(),
        peel_trace: core.rounds,
        trace,
        x,
        checks,
        claim: ClaimMonitor {
            sizes,
            limits,
            within_limits,
            outside_claim_regime,
        },
        eta: params.eta_constraints(),
    })
}

/// [`dense_core`] followed by [`cascade`].
pub fn regularize(
    host: &Graph,
    g_sub: &Graph,
    params: &RegularizationParams,
) -> Result<RegularizationResult> {
    let core = dense_core(host, g_sub, params)?;
    cascade(host, g_sub, core, params)
}

/// Evaluates the three conditions on `X` from scratch.
pub fn measure_checks(
    host: &Graph,
    g_sub: &Graph,
    x: &VertexSet,
    params: &RegularizationParams,
) -> Result<Checks> {
    let (_, p) = density(host)?;
    if x.is_empty() {
        return Err(input("X must be nonempty"));
    }
    let n = host.n();
    let eps = exact(params.epsilon);
    let size = int(x.len());

    // |X| ≥ √ε n/8  ⇔  64|X|² ≥ ε n²
    let size_ok = int(64) * &size * &size >= &eps * int(n) * int(n);
    let size_margin = x.len() as f64 - params.epsilon.sqrt() * n as f64 / 8.0;

    let mask = x.mask();
    let center = &p * &size;
    let g_floor = (exact(params.alpha) - &eps) * &center;
    let min_g = x
        .members()
        .iter()
        .map(|&v| g_sub.degree_into(v, &mask))
        .min()
        .unwrap_or(0);
    let min_g = int(min_g);
    let min_g_degree_ok = min_g >= g_floor;
    let min_g_degree_margin = to_f64(&(min_g - g_floor));

    let max_dev = x
        .members()
        .iter()
        .map(|&v| {
            let diff = int(host.degree_into(v, &mask)) - &center;
            if diff < BigRational::zero() {
                -diff
            } else {
                diff
            }
        })
        .max()
        .unwrap_or_else(BigRational::zero);
    let gamma_degree_ok = max_dev <= &eps * &center;
    let gamma_deviation = if center.is_zero() {
        if max_dev.is_zero() {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        to_f64(&(max_dev / center))
    };

    Ok(Checks {
        size_ok,
        size_margin,
        min_g_degree_ok,
        min_g_degree_margin,
        gamma_degree_ok,
        gamma_deviation,
    })
}
