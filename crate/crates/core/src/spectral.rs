//! Adjacency spectra, (n,d,λ) certificates and the spectral inequalities
//! built on them.

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use nalgebra::DMatrix;
use serde::Serialize;

/// Largest vertex count accepted by [`spectrum`].
pub const MAX_SPECTRUM_N: usize = 4096;

const EIGEN_EPS: f64 = 1e-14;
const EIGEN_MAX_ITER: usize = 10_000;

/// Full adjacency spectrum, sorted descending.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    /// `max_i ‖A v_i − λ_i v_i‖∞` measured after the decomposition.
    residual: f64,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// `Σ λ_i^k`, which equals the number of closed `k`-walks.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k as i32)).sum()
    }

    /// `Σ |λ_i|^k`; the natural scale for comparing against [`power_sum`](Self::power_sum).
    pub fn abs_power_sum(&self, k: u32) -> f64 {
        self.eigenvalues
            .iter()
            .map(|l| l.abs().powi(k as i32))
            .sum()
    }
}

/// Eigenvalues of the adjacency matrix, descending.
///
/// Every eigenpair is checked against `‖A v − λ v‖∞ ≤ 1e-9·n`; a larger
/// residual is reported as a numeric error.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    if n == 0 {
        return Err(input("spectrum of the empty vertex set"));
    }
    if n > MAX_SPECTRUM_N {
        return Err(Error::Resource(format!(
            "dense spectrum limited to n <= {MAX_SPECTRUM_N}, got {n}"
        )));
    }
    let a = DMatrix::from_row_slice(n, n, &g.adjacency_matrix());
    let eig = a
        .try_symmetric_eigen(EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::Numeric(format!("no convergence after {EIGEN_MAX_ITER} sweeps")))?;

    let mut residual: f64 = 0.0;
    for (i, &lambda) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(i);
        for x in 0..n {
            let av: f64 = g.neighbors(x).iter().map(|&y| v[y]).sum();
            residual = residual.max((av - lambda * v[x]).abs());
        }
    }
    let limit = 1e-9 * n as f64;
    if residual > limit {
        return Err(Error::Numeric(format!(
            "eigenpair residual {residual:e} exceeds {limit:e}"
        )));
    }

    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum {
        eigenvalues,
        residual,
    })
}

/// Certified parameters of a `d`-regular graph.
#[derive(Clone, Debug, Serialize)]
pub struct NdlCertificate {
    pub n: usize,
    pub d: usize,
    /// `max(|λ_2|, |λ_n|)`; zero for a single vertex.
    pub lambda: f64,
    /// Edge density `d / n`.
    pub p: f64,
    #[serde(skip)]
    pub spectrum: Spectrum,
}

/// Computes the spectrum of a regular graph and extracts the smallest valid λ.
pub fn certify_ndl(g: &Graph) -> Result<NdlCertificate> {
    let d = g.regular_degree()?;
    let spectrum = spectrum(g)?;
    let ev = spectrum.eigenvalues();
    let n = g.n();
    let tol = 1e-9 * n as f64;
    if (ev[0] - d as f64).abs() > tol {
        return Err(Error::Numeric(format!(
            "top eigenvalue {} differs from the degree {d}",
            ev[0]
        )));
    }
    let lambda = if n >= 2 {
        ev[1].abs().max(ev[n - 1].abs()).min(d as f64)
    } else {
        0.0
    };
    Ok(NdlCertificate {
        n,
        d,
        lambda,
        p: d as f64 / n as f64,
        spectrum,
    })
}

impl NdlCertificate {
    /// `λ^{2k−1}·n / d^{2k}`; the odd-cycle results need this to be small.
    pub fn hypothesis_ratio(&self, k: u32) -> Result<f64> {
        if k == 0 {
            return Err(input("hypothesis_ratio needs k >= 1"));
        }
        if self.d == 0 {
            return Err(Error::Domain(
                "hypothesis_ratio is undefined for d = 0".into(),
            ));
        }
        let d = self.d as f64;
        Ok(self.lambda.powi(2 * k as i32 - 1) * self.n as f64 / d.powi(2 * k as i32))
    }

    /// Upper bound `d^{2k} + λ^{2k−2}·d·n` on closed `2k`-walks, with
    /// `λ^0 = 1` also when `λ = 0`.
    pub fn even_cycle_trace_bound(&self, k: u32) -> f64 {
        let d = self.d as f64;
        d.powi(2 * k as i32) + self.lambda.powi(2 * k as i32 - 2) * d * self.n as f64
    }

    /// Upper bound on homomorphisms of `C_{2q}` and `C_{2r+1}` glued at one
    /// vertex: `d^{2(q+r)+1}/n + λ^{2q−2}d^{2r+2} + λd^{2(q+r)} + λ^{2(q+r)−1}dn`.
    pub fn figure_eight_bound(&self, q: u32, r: u32) -> f64 {
        let (n, d, l) = (self.n as f64, self.d as f64, self.lambda);
        let s = (q + r) as i32;
        d.powi(2 * s + 1) / n
            + l.powi(2 * q as i32 - 2) * d.powi(2 * r as i32 + 2)
            + l * d.powi(2 * s)
            + l.powi(2 * s - 1) * d * n
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MixingCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluates both sides of the weighted expander mixing inequality
/// `|Σ u(x)1(x,y)v(y) − p·Σu·Σv| ≤ λ·sqrt(Σu²·Σv²)`.
pub fn expander_mixing_check(
    cert: &NdlCertificate,
    g: &Graph,
    u: &[f64],
    v: &[f64],
) -> Result<MixingCheck> {
    let n = g.n();
    if n != cert.n || g.regular_degree()? != cert.d {
        return Err(input("graph does not match the certificate"));
    }
    if u.len() != n || v.len() != n {
        return Err(input(format!("weight vectors must have length {n}")));
    }
    if let Some(w) = u.iter().chain(v).find(|w| !(0.0..=1.0).contains(*w)) {
        return Err(input(format!("weight {w} outside [0, 1]")));
    }
    let bilinear: f64 = g
        .edges()
        .iter()
        .map(|&(x, y)| u[x] * v[y] + u[y] * v[x])
        .sum();
    let (su, sv): (f64, f64) = (u.iter().sum(), v.iter().sum());
    let (su2, sv2): (f64, f64) = (u.iter().map(|a| a * a).sum(), v.iter().map(|a| a * a).sum());
    let lhs = (bilinear - cert.p * su * sv).abs();
    let rhs = cert.lambda * (su2 * sv2).sqrt();
    Ok(MixingCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + 1e-9 * (n * n) as f64,
    })
}
