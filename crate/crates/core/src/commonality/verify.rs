//! Commonality bounds for odd cycles inside a host graph and the checks
//! supporting them.

use super::density::{
    eval_poly_derivative, q_coefficients_by_interpolation, q_derivative_central, q_polynomial,
};
use super::edge_function::EdgeFunction;
use super::tseq::measured_delta;
use crate::counting::{hom_count_cycle, injective_count_cycle, Pattern};
use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::NdlCertificate;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeMap;

/// `(p|X|)^{2k+1}(1 − 2^{8k}δ) / 2^{2k}`; nonpositive once `2^{8k}δ ≥ 1`.
pub fn commonality_bound(cert: &NdlCertificate, x_size: usize, delta: f64, k: usize) -> f64 {
    let k = k as i32;
    (cert.p * x_size as f64).powi(2 * k + 1) * (1.0 - 2f64.powi(8 * k) * delta) / 2f64.powi(2 * k)
}

/// `p^{2k+1}(1 − 2^{7k}(δ + λ/(μ^{2k}d) + λ^{2k−1}n/(μ^{2k}d^{2k}))) / 2^{2k}`:
/// the homomorphism-density form of the same bound.
pub fn hom_density_bound(cert: &NdlCertificate, x_size: usize, delta: f64, k: usize) -> f64 {
    let ki = k as i32;
    let (n, d, l) = (cert.n as f64, cert.d as f64, cert.lambda);
    let mu = x_size as f64 / n;
    let slack = delta
        + l / (mu.powi(2 * ki) * d)
        + l.powi(2 * ki - 1) * n / (mu.powi(2 * ki) * d.powi(2 * ki));
    cert.p.powi(2 * ki + 1) * (1.0 - 2f64.powi(7 * ki) * slack) / 2f64.powi(2 * ki)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    /// The bound is nonpositive, so the inequality carries no content.
    Vacuous,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommonalityReport {
    pub k: usize,
    pub x_size: usize,
    pub p: f64,
    /// Measured `max_x |deg_{Γ[X]}(x)/(p|X|) − 1|`.
    pub delta: f64,
    pub hypothesis_ratio: f64,
    /// Labelled `C_{2k+1}` copies in `G[X]`.
    pub n_g: u64,
    /// Labelled copies in `Γ[X] \ G`.
    pub n_complement: u64,
    pub bound: f64,
    pub holds: bool,
    pub verdict: Verdict,
    /// Smallest `c` with `N_G + N_Ḡ ≥ (p|X|)^{2k+1}(1 − cδ)/2^{2k}`, when `δ > 0`.
    pub empirical_constant: Option<f64>,
    /// `t_{C_{2k+1}}(g) + t_{C_{2k+1}}(γ − g)` over `X`.
    pub hom_density_sum: f64,
    pub hom_density_bound: f64,
}

/// Counts monochromatic labelled `C_{2k+1}` copies for the two-colouring
/// `(G, Γ[X] \ G)` of `Γ[X]` and compares with [`commonality_bound`].
///
/// `g_sub` is given on the host's labels and must lie inside `host[X]`.
pub fn verify_commonality(
    host: &Graph,
    cert: &NdlCertificate,
    x: &VertexSet,
    g_sub: &Graph,
    k: usize,
) -> Result<CommonalityReport> {
    if k == 0 {
        return Err(input("k must be at least 1"));
    }
    if x.is_empty() {
        return Err(input("X must be nonempty"));
    }
    if host.n() != cert.n {
        return Err(input("certificate belongs to a different graph"));
    }
    host.check_contains(g_sub)?;
    if let Some(&(u, v)) = g_sub
        .edges()
        .iter()
        .find(|&&(u, v)| !x.contains(u) || !x.contains(v))
    {
        return Err(input(format!("subgraph edge ({u}, {v}) leaves X")));
    }
    let (gamma_x, _) = host.induced_subgraph(x)?;
    let (g_x, _) = g_sub.induced_subgraph(x)?;
    let rest = gamma_x.complement_within(&g_x)?;

    let m = 2 * k + 1;
    let delta = measured_delta(&EdgeFunction::indicator(host, x)?, cert.p);
    let n_g = injective_count_cycle(&g_x, m)?;
    let n_complement = injective_count_cycle(&rest, m)?;
    let total = (n_g + n_complement) as f64;
    let bound = commonality_bound(cert, x.len(), delta, k);
    let holds = total >= bound;
    let verdict = if bound <= 0.0 {
        Verdict::Vacuous
    } else if holds {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    let base = (cert.p * x.len() as f64).powi(m as i32) / 2f64.powi(2 * k as i32);
    let empirical_constant = (delta > 0.0).then(|| (1.0 - total / base) / delta);

    let hom = |g: &Graph| hom_count_cycle(g, m).to_f64().unwrap_or(f64::INFINITY);
    let hom_density_sum = (hom(&g_x) + hom(&rest)) / (x.len() as f64).powi(m as i32);

    Ok(CommonalityReport {
        k,
        x_size: x.len(),
        p: cert.p,
        delta,
        hypothesis_ratio: cert.hypothesis_ratio(k as u32).unwrap_or(f64::INFINITY),
        n_g,
        n_complement,
        bound,
        holds,
        verdict,
        empirical_constant,
        hom_density_sum,
        hom_density_bound: hom_density_bound(cert, x.len(), delta, k),
    })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DerivativeCheck {
    pub z: f64,
    /// `dQ_{C_{2k+1}}/dz` by central difference.
    pub derivative_central: f64,
    /// The same derivative from interpolated coefficients.
    pub derivative_interpolated: f64,
    /// `p(2k+1)·Q_{P_{2k}}(z; f)`.
    pub path_term: f64,
    pub residual: f64,
    /// `(2k+1)p^{2k+1}(λ/(μ^{2k+1}d) + λ^{2k−1}n/(μ^{2k+1}d^{2k}))`, `μ = |X|/n`.
    pub bound: f64,
    pub holds: bool,
}

/// Step for the central difference of `Q`.
pub const DERIVATIVE_STEP: f64 = 1e-4;

/// Compares `dQ_{C_{2k+1}}/dz` with `p(2k+1)Q_{P_{2k}}` at `z`.
pub fn derivative_check(
    cert: &NdlCertificate,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    k: usize,
    z: f64,
) -> Result<DerivativeCheck> {
    if k == 0 {
        return Err(input("k must be at least 1"));
    }
    let cycle = Pattern::Cycle(2 * k + 1);
    let derivative_central = q_derivative_central(cycle, gamma, f, z, DERIVATIVE_STEP)?;
    let coeffs = q_coefficients_by_interpolation(cycle, gamma, f)?;
    let derivative_interpolated = eval_poly_derivative(&coeffs, z);
    let m = (2 * k + 1) as f64;
    let path_term = cert.p * m * q_polynomial(Pattern::Path(2 * k), gamma, f, z)?;
    let residual = derivative_central - path_term;

    let ki = k as i32;
    let (n, d, l) = (cert.n as f64, cert.d as f64, cert.lambda);
    let mu = gamma.size() as f64 / n;
    let bound = m
        * cert.p.powi(2 * ki + 1)
        * (l / (mu.powi(2 * ki + 1) * d)
            + l.powi(2 * ki - 1) * n / (mu.powi(2 * ki + 1) * d.powi(2 * ki)));
    Ok(DerivativeCheck {
        z,
        derivative_central,
        derivative_interpolated,
        path_term,
        residual,
        bound,
        holds: residual.abs() <= bound + 1e-6,
    })
}

/// For `C_{2k+1}`, how many of the families `E_+(C_{2k+1} − e)` contain each
/// `J ∈ E_+(C_{2k+1})`, next to the expected `2k+1−|J|`. Keys are edge
/// bitmasks.
pub fn cover_multiplicities(k: usize) -> BTreeMap<u64, (usize, usize)> {
    let m = 2 * k + 1;
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    for removed in 0..m {
        let kept: Vec<usize> = (0..m).filter(|&e| e != removed).collect();
        for sel in 1u64..1 << kept.len() {
            if sel.count_ones() % 2 == 1 {
                continue;
            }
            let mask = kept
                .iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .fold(0u64, |acc, (_, &e)| acc | 1 << e);
            *seen.entry(mask).or_default() += 1;
        }
    }
    (1u64..1 << m)
        .filter(|j| j.count_ones() % 2 == 0)
        .map(|j| {
            (
                j,
                (
                    seen.get(&j).copied().unwrap_or(0),
                    m - j.count_ones() as usize,
                ),
            )
        })
        .collect()
}
