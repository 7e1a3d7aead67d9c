//! Weighted homomorphism densities over a vertex subset, evaluated with
//! transfer matrices, and the even-subset polynomial `Q_H(z; f)` built from
//! them.

use super::edge_function::{signed_difference, EdgeFunction};
use crate::counting::Pattern;
use crate::error::{input, Error, Result};
use crate::exec;
use nalgebra::{DMatrix, DVector};
use serde::Serialize;

/// Largest edge count for which per-subset sums are enumerated.
pub const SUBSET_MAX_EDGES: usize = 20;

/// Paths and cycles reduced to what the transfer matrices need. `C_2` is a
/// single open edge.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Shape {
    pub closed: bool,
    pub edges: usize,
    pub vertices: usize,
}

pub(crate) fn shape(p: Pattern) -> Result<Shape> {
    p.validate()?;
    match p {
        Pattern::Cycle(2) => Ok(Shape {
            closed: false,
            edges: 1,
            vertices: 2,
        }),
        Pattern::Cycle(m) => Ok(Shape {
            closed: true,
            edges: m,
            vertices: m,
        }),
        Pattern::Path(m) => Ok(Shape {
            closed: false,
            edges: m,
            vertices: m + 1,
        }),
        Pattern::FigureEight { .. } => {
            Err(input("weighted densities support cycles and paths only"))
        }
    }
}

/// `v ↦ vᵀM` for a symmetric `s×s` row-major matrix.
fn push(m: &[f64], s: usize, v: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; s];
    for (x, &vx) in v.iter().enumerate() {
        if vx == 0.0 {
            continue;
        }
        let row = &m[x * s..(x + 1) * s];
        for (o, &w) in out.iter_mut().zip(row) {
            *o += vx * w;
        }
    }
    out
}

/// Sum over all vertex sequences of the product of `mats[i]` along the
/// `i`-th step: `1ᵀ M_1 ⋯ M_e 1`, or the trace of the product when `closed`.
/// Not normalized.
pub(crate) fn chain(mats: &[&[f64]], s: usize, closed: bool) -> f64 {
    if closed {
        exec::map_range(s, |x| {
            let mut v = vec![0.0; s];
            v[x] = 1.0;
            for m in mats {
                v = push(m, s, &v);
            }
            v[x]
        })
        .into_iter()
        .sum()
    } else {
        let mut v = vec![1.0; s];
        for m in mats {
            v = push(m, s, &v);
        }
        v.iter().sum()
    }
}

fn normalizer(s: usize, sh: Shape) -> f64 {
    (s as f64).powi(sh.vertices as i32)
}

fn nonempty(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::Domain(
            "densities over an empty vertex set are undefined".into(),
        ))
    } else {
        Ok(())
    }
}

/// `t_H(M)` for a raw matrix over `|X| = s`.
pub(crate) fn t_raw(sh: Shape, m: &[f64], s: usize) -> f64 {
    let mats = vec![m; sh.edges];
    chain(&mats, s, sh.closed) / normalizer(s, sh)
}

/// `t_H(f) = E[Π_{ij ∈ E(H)} f(x_i, x_j)]` with independent uniform `x_i ∈ X`.
pub fn t_weighted(pattern: Pattern, f: &EdgeFunction) -> Result<f64> {
    let sh = shape(pattern)?;
    nonempty(f.size())?;
    Ok(t_raw(sh, f.values(), f.size()))
}

/// `E[⟨f, h⟩^J_H]`: edges whose bit is set in `mask` carry `f`, the rest `h`.
/// Edges are numbered along the path or around the cycle.
pub(crate) fn mixed_raw(sh: Shape, mask: u64, f: &[f64], h: &[f64], s: usize) -> f64 {
    let mats: Vec<&[f64]> = (0..sh.edges)
        .map(|e| if mask >> e & 1 == 1 { f } else { h })
        .collect();
    chain(&mats, s, sh.closed) / normalizer(s, sh)
}

pub fn mixed_expectation(
    pattern: Pattern,
    mask: u64,
    f: &EdgeFunction,
    h: &EdgeFunction,
) -> Result<f64> {
    let sh = shape(pattern)?;
    nonempty(f.size())?;
    if f.domain() != h.domain() {
        return Err(input("edge functions live on different vertex sets"));
    }
    Ok(mixed_raw(sh, mask, f.values(), h.values(), f.size()))
}

fn check_q_inputs(pattern: Pattern, gamma: &EdgeFunction, f: &EdgeFunction) -> Result<Shape> {
    let sh = shape(pattern)?;
    if sh.edges == 0 {
        return Err(input("Q needs a pattern with at least one edge"));
    }
    nonempty(gamma.size())?;
    f.check_dominated_by(gamma)?;
    Ok(sh)
}

/// Closed form `½[t(zγ+f) + t(zγ−f)] − z^{e(H)}·t(γ)`: the odd-`|J|` terms
/// cancel in the average and the `J = ∅` term is removed explicitly.
pub(crate) fn q_closed_unchecked(sh: Shape, gamma: &EdgeFunction, f: &EdgeFunction, z: f64) -> f64 {
    let s = gamma.size();
    let plus = gamma.combine(z, f, 1.0);
    let minus = gamma.combine(z, f, -1.0);
    0.5 * (t_raw(sh, &plus, s) + t_raw(sh, &minus, s))
        - z.powi(sh.edges as i32) * t_raw(sh, gamma.values(), s)
}

/// `Q_H(z; f) = Σ_{J even, nonempty} E[⟨f, γ⟩^J_H]·z^{e(H)−|J|}`.
pub fn q_polynomial(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
) -> Result<f64> {
    let sh = check_q_inputs(pattern, gamma, f)?;
    if !(0.0..=1.0).contains(&z) {
        return Err(input(format!("z = {z} outside [0, 1]")));
    }
    Ok(q_closed_unchecked(sh, gamma, f, z))
}

/// Even nonempty subsets of `0..e` as bitmasks, in increasing order.
pub fn even_nonempty_subsets(e: usize) -> impl Iterator<Item = u64> {
    (1u64..1 << e).filter(|m| m.count_ones() % 2 == 0)
}

fn check_subset_budget(sh: Shape) -> Result<()> {
    if sh.edges > SUBSET_MAX_EDGES {
        return Err(Error::Resource(format!(
            "subset enumeration limited to {SUBSET_MAX_EDGES} edges, got {}",
            sh.edges
        )));
    }
    Ok(())
}

/// Coefficients `c_j = Σ_{|J| = e−j} E[⟨f, γ⟩^J]` of `Q_H(z; f) = Σ_j c_j z^j`,
/// one transfer-matrix product per even subset.
pub fn q_coefficients_by_subsets(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
) -> Result<Vec<f64>> {
    let sh = check_q_inputs(pattern, gamma, f)?;
    check_subset_budget(sh)?;
    let mut coeffs = vec![0.0; sh.edges + 1];
    for mask in even_nonempty_subsets(sh.edges) {
        let j = sh.edges - mask.count_ones() as usize;
        coeffs[j] += mixed_raw(sh, mask, f.values(), gamma.values(), gamma.size());
    }
    Ok(coeffs)
}

pub fn eval_poly(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

pub fn eval_poly_derivative(coeffs: &[f64], z: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(0.0, |acc, (j, c)| acc * z + j as f64 * c)
}

/// `Q_H` summed subset by subset; an independent route to [`q_polynomial`].
pub fn q_polynomial_by_subsets(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
) -> Result<f64> {
    Ok(eval_poly(&q_coefficients_by_subsets(pattern, gamma, f)?, z))
}

/// Coefficients of `Q_H(z; f)` recovered by interpolating the closed form at
/// the `e(H)+1` nodes `z = i/e(H)`.
pub fn q_coefficients_by_interpolation(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
) -> Result<Vec<f64>> {
    let sh = check_q_inputs(pattern, gamma, f)?;
    let e = sh.edges;
    let nodes: Vec<f64> = (0..=e).map(|i| i as f64 / e as f64).collect();
    let vander = DMatrix::from_fn(e + 1, e + 1, |i, j| nodes[i].powi(j as i32));
    let rhs = DVector::from_iterator(
        e + 1,
        nodes.iter().map(|&z| q_closed_unchecked(sh, gamma, f, z)),
    );
    let sol = vander
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Numeric("singular interpolation system".into()))?;
    Ok(sol.iter().copied().collect())
}

/// `dQ/dz` by a central difference of the closed form with step `h`.
pub fn q_derivative_central(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
    h: f64,
) -> Result<f64> {
    let sh = check_q_inputs(pattern, gamma, f)?;
    Ok(
        (q_closed_unchecked(sh, gamma, f, z + h) - q_closed_unchecked(sh, gamma, f, z - h))
            / (2.0 * h),
    )
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CancelCheck {
    /// `t_H(g) + t_H(γ − g)`.
    pub lhs: f64,
    /// `(½)^{e(H)−1}·(t_H(γ) + Σ_{J ∈ E_+} E[⟨f, γ⟩^J])`.
    pub rhs: f64,
    pub max_abs_diff: f64,
}

/// Both sides of the two-colour cancellation identity. The right side sums
/// the even subsets one at a time, so it shares no arithmetic with the left.
pub fn cancel_identity_check(
    pattern: Pattern,
    gamma: &EdgeFunction,
    g: &EdgeFunction,
) -> Result<CancelCheck> {
    let f = signed_difference(gamma, g)?;
    let sh = check_q_inputs(pattern, gamma, &f)?;
    nonempty(gamma.size())?;
    let s = gamma.size();
    let rest = gamma.combine(1.0, g, -1.0);
    let lhs = t_raw(sh, g.values(), s) + t_raw(sh, &rest, s);
    let q1 = q_polynomial_by_subsets(pattern, gamma, &f, 1.0)?;
    let rhs = 0.5f64.powi(sh.edges as i32 - 1) * (t_raw(sh, gamma.values(), s) + q1);
    Ok(CancelCheck {
        lhs,
        rhs,
        max_abs_diff: (lhs - rhs).abs(),
    })
}
