use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};

/// Symmetric function on ordered pairs of a vertex subset `X`.
///
/// Values are stored densely over the local indices `0..|X|` (the sorted
/// members of `X`), vanish on the diagonal and lie in `[-1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFunction {
    domain: VertexSet,
    values: Vec<f64>,
}

impl EdgeFunction {
    pub fn new(domain: VertexSet, values: Vec<f64>) -> Result<Self> {
        let s = domain.len();
        if values.len() != s * s {
            return Err(input(format!("expected {} values for |X| = {s}", s * s)));
        }
        for i in 0..s {
            if values[i * s + i] != 0.0 {
                return Err(input(format!("nonzero diagonal at local index {i}")));
            }
            for j in 0..s {
                let v = values[i * s + j];
                if !v.is_finite() || v.abs() > 1.0 {
                    return Err(input(format!("value {v} at ({i}, {j}) outside [-1, 1]")));
                }
                if v != values[j * s + i] {
                    return Err(input(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(EdgeFunction { domain, values })
    }

    /// Indicator of the edges of `g` inside `x` (`γ_X` when `g` is the host).
    pub fn indicator(g: &Graph, x: &VertexSet) -> Result<Self> {
        let (sub, _) = g.induced_subgraph(x)?;
        let s = x.len();
        let mut values = vec![0.0; s * s];
        for &(u, v) in sub.edges() {
            values[u * s + v] = 1.0;
            values[v * s + u] = 1.0;
        }
        Ok(EdgeFunction {
            domain: x.clone(),
            values,
        })
    }

    pub fn zero(domain: VertexSet) -> Self {
        let s = domain.len();
        EdgeFunction {
            domain,
            values: vec![0.0; s * s],
        }
    }

    pub fn domain(&self) -> &VertexSet {
        &self.domain
    }

    /// `|X|`.
    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at local indices.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.size() + j]
    }

    pub fn is_indicator(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// `a·self + b·other` as a raw matrix; the result may leave `[-1, 1]`.
    pub(crate) fn combine(&self, a: f64, other: &EdgeFunction, b: f64) -> Vec<f64> {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| a * x + b * y)
            .collect()
    }

    /// Checks `|self| ≤ gamma` pointwise on a shared domain.
    pub fn check_dominated_by(&self, gamma: &EdgeFunction) -> Result<()> {
        if self.domain != gamma.domain {
            return Err(input("edge functions live on different vertex sets"));
        }
        match self
            .values
            .iter()
            .zip(&gamma.values)
            .position(|(f, g)| f.abs() > *g)
        {
            Some(i) => {
                let s = self.size();
                Err(input(format!(
                    "|f| exceeds gamma at local pair ({}, {})",
                    i / s,
                    i % s
                )))
            }
            None => Ok(()),
        }
    }
}

/// `f = 2g − γ` for indicator functions `g ≤ γ`; satisfies `|f| ≤ γ`.
pub fn signed_difference(gamma: &EdgeFunction, g: &EdgeFunction) -> Result<EdgeFunction> {
    if gamma.domain != g.domain {
        return Err(input("gamma and g live on different vertex sets"));
    }
    if !gamma.is_indicator() || !g.is_indicator() {
        return Err(input("gamma and g must be {0,1}-valued"));
    }
    if g.values.iter().zip(&gamma.values).any(|(a, b)| a > b) {
        return Err(input("g is not contained in gamma"));
    }
    Ok(EdgeFunction {
        domain: gamma.domain.clone(),
        values: g.combine(2.0, gamma, -1.0),
    })
}
