//! Exhaustive homomorphism counting: the ground truth the walk-based counts
//! are checked against.

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

pub const BRUTE_MAX_PATTERN: usize = 8;
pub const BRUTE_MAX_HOST: usize = 12;

/// Counts vertex maps `V(H) → V(G)` that send every edge to an edge.
///
/// Maps are built one pattern vertex at a time; a partial map with a broken
/// edge is abandoned, since none of its completions can be homomorphisms.
pub fn brute_hom_count(h: &Graph, g: &Graph) -> Result<u64> {
    if h.n() > BRUTE_MAX_PATTERN || g.n() > BRUTE_MAX_HOST {
        return Err(Error::Resource(format!(
            "brute force limited to |V(H)| <= {BRUTE_MAX_PATTERN}, |V(G)| <= {BRUTE_MAX_HOST} \
             (got {} and {})",
            h.n(),
            g.n()
        )));
    }
    if h.n() == 0 {
        return Ok(1);
    }
    // Earlier pattern neighbours of each pattern vertex.
    let back: Vec<Vec<usize>> = (0..h.n())
        .map(|i| h.neighbors(i).iter().copied().filter(|&j| j < i).collect())
        .collect();

    fn extend(back: &[Vec<usize>], g: &Graph, phi: &mut Vec<usize>) -> u64 {
        let i = phi.len();
        if i == back.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if back[i].iter().all(|&j| g.has_edge(phi[j], v)) {
                phi.push(v);
                total += extend(back, g, phi);
                phi.pop();
            }
        }
        total
    }

    let per_root = exec::map_range(g.n(), |v| {
        let mut phi = Vec::with_capacity(h.n());
        phi.push(v);
        extend(&back, g, &mut phi)
    });
    Ok(per_root.into_iter().sum())
}
