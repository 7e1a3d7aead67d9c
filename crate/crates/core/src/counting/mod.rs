//! Exact homomorphism and labelled-copy counts for cycles, paths and
//! figure-eights.
//!
//! Walk-based counts run in `u64` with checked arithmetic and transparently
//! redo the computation over `BigUint` when a word overflows.

mod brute;
mod injective;
mod pattern;
mod walks;

pub use brute::{brute_hom_count, BRUTE_MAX_HOST, BRUTE_MAX_PATTERN};
pub use injective::{
    find_cycle, injective_count_cycle, injective_count_cycle_with_budget, DFS_BUDGET,
};
pub use pattern::Pattern;
pub use walks::{
    closed_walks_at, figure_eight_hom_count, hom_count_cycle, hom_count_path,
    rooted_odd_cycle_counts, walk_table, WalkTable,
};

use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::NdlCertificate;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Homomorphism count of `pattern` into `g` via walk matrices.
pub fn hom_count(g: &Graph, pattern: Pattern) -> BigUint {
    match pattern {
        Pattern::Cycle(m) => hom_count_cycle(g, m),
        Pattern::Path(m) => hom_count_path(g, m),
        Pattern::FigureEight { q, r } => figure_eight_hom_count(g, q, r),
    }
}

/// Serializes as a JSON number when it fits in `u64`, else as a decimal string.
pub fn serialize_count<S: Serializer>(c: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&c.to_string()),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub graph_id: String,
    pub pattern: String,
    #[serde(serialize_with = "serialize_count")]
    pub hom_count: BigUint,
    /// Labelled copies; only computed for cycles of length at least 3.
    pub injective_count: Option<u64>,
    /// `hom_count / n^{|V(H)|}`.
    pub density: f64,
}

pub fn count_report(graph_id: &str, g: &Graph, pattern: Pattern) -> Result<CountReport> {
    let hom = hom_count(g, pattern);
    let injective_count = match pattern {
        Pattern::Cycle(m) if m >= 3 => Some(injective_count_cycle(g, m)?),
        _ => None,
    };
    let n = g.n() as f64;
    let density = if g.n() == 0 {
        0.0
    } else {
        hom.to_f64().unwrap_or(f64::INFINITY) / n.powi(pattern.vertex_count() as i32)
    };
    Ok(CountReport {
        graph_id: graph_id.to_string(),
        pattern: pattern.to_string(),
        hom_count: hom,
        injective_count,
        density,
    })
}

/// Exact figure-eight count next to its spectral upper bound.
#[derive(Clone, Debug, Serialize)]
pub struct FigureEightCheck {
    #[serde(serialize_with = "serialize_count")]
    pub count: BigUint,
    pub bound: f64,
    pub holds: bool,
}

pub fn figure_eight_bound_check(
    g: &Graph,
    cert: &NdlCertificate,
    q: usize,
    r: usize,
) -> Result<FigureEightCheck> {
    g.regular_degree()?;
    let count = figure_eight_hom_count(g, q, r);
    let bound = cert.figure_eight_bound(q as u32, r as u32);
    let holds = count.to_f64().unwrap_or(f64::INFINITY) <= bound * (1.0 + 1e-9);
    Ok(FigureEightCheck {
        count,
        bound,
        holds,
    })
}
