//! Vertex-map enumeration oracles for the weighted densities and `Q_H`.

use super::density::{shape, Shape};
use super::edge_function::EdgeFunction;
use crate::counting::Pattern;
use crate::error::{Error, Result};
use crate::exec;

pub const BRUTE_MAX_EDGES: usize = 7;
pub const BRUTE_MAX_DOMAIN: usize = 12;

/// `E[⟨f, γ⟩^J_H]` for every `J ⊆ E(H)`, indexed by bitmask, computed by
/// walking all maps `V(H) → X`.
///
/// Maps sending some edge outside the support of `γ` are skipped: with
/// `|f| ≤ γ` every product over such a map vanishes.
pub fn subset_expectations_brute(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
) -> Result<Vec<f64>> {
    let sh = shape(pattern)?;
    let s = gamma.size();
    if sh.edges > BRUTE_MAX_EDGES || s > BRUTE_MAX_DOMAIN {
        return Err(Error::Resource(format!(
            "brute force limited to e(H) <= {BRUTE_MAX_EDGES} and |X| <= {BRUTE_MAX_DOMAIN} \
             (got {} and {s})",
            sh.edges
        )));
    }
    if s == 0 {
        return Err(Error::Domain("empty vertex set".into()));
    }
    f.check_dominated_by(gamma)?;

    let per_root = exec::map_range(s, |x0| {
        let mut acc = vec![0.0; 1 << sh.edges];
        let mut seq = vec![x0];
        walk(sh, gamma, f, &mut seq, &mut acc);
        acc
    });
    let total = (s as f64).powi(sh.vertices as i32);
    let mut out = vec![0.0; 1 << sh.edges];
    for acc in per_root {
        for (o, a) in out.iter_mut().zip(acc) {
            *o += a;
        }
    }
    out.iter_mut().for_each(|v| *v /= total);
    Ok(out)
}

fn walk(sh: Shape, gamma: &EdgeFunction, f: &EdgeFunction, seq: &mut Vec<usize>, acc: &mut [f64]) {
    if seq.len() == sh.vertices {
        if sh.closed && gamma.get(seq[sh.vertices - 1], seq[0]) == 0.0 {
            return;
        }
        let edge = |e: usize| (seq[e], seq[(e + 1) % sh.vertices]);
        // products for every subset, built up one edge at a time
        let mut prods = vec![1.0; 1 << sh.edges];
        for e in 0..sh.edges {
            let (a, b) = edge(e);
            let (fv, gv) = (f.get(a, b), gamma.get(a, b));
            let bit = 1usize << e;
            for mask in (0..bit).rev() {
                prods[mask | bit] = prods[mask] * fv;
                prods[mask] *= gv;
            }
        }
        for (a, p) in acc.iter_mut().zip(prods) {
            *a += p;
        }
        return;
    }
    let last = *seq.last().expect("sequence starts with a root");
    for y in 0..gamma.size() {
        if gamma.get(last, y) != 0.0 {
            seq.push(y);
            walk(sh, gamma, f, seq, acc);
            seq.pop();
        }
    }
}

/// `Q_H(z; f)` summed directly over even nonempty `J` from enumerated
/// expectations.
pub fn q_polynomial_brute(
    pattern: Pattern,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
) -> Result<f64> {
    let e = shape(pattern)?.edges;
    let per_subset = subset_expectations_brute(pattern, gamma, f)?;
    Ok(super::density::even_nonempty_subsets(e)
        .map(|mask| per_subset[mask as usize] * z.powi(e as i32 - mask.count_ones() as i32))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commonality::density::{q_polynomial, t_weighted};
    use crate::commonality::signed_difference;
    use crate::constructions::complete;
    use crate::graph::{Graph, VertexSet};

    #[test]
    fn full_subset_is_the_density() {
        let k4 = complete(4);
        let x = VertexSet::full(4);
        let gamma = EdgeFunction::indicator(&k4, &x).unwrap();
        for p in [
            Pattern::Cycle(3),
            Pattern::Cycle(4),
            Pattern::Path(3),
            Pattern::Cycle(2),
        ] {
            let e = shape(p).unwrap().edges;
            let all = subset_expectations_brute(p, &gamma, &gamma).unwrap();
            let t = t_weighted(p, &gamma).unwrap();
            assert!((all[(1 << e) - 1] - t).abs() < 1e-15);
            assert!((all[0] - t).abs() < 1e-15);
        }
        let all = subset_expectations_brute(Pattern::Cycle(3), &gamma, &gamma).unwrap();
        assert!((all[7] - 24.0 / 64.0).abs() < 1e-15);
    }

    #[test]
    fn k3_one_edge_at_half() {
        let k3 = complete(3);
        let x = VertexSet::full(3);
        let gamma = EdgeFunction::indicator(&k3, &x).unwrap();
        let g = EdgeFunction::indicator(&Graph::from_edge_list(3, &[(0, 1)]).unwrap(), &x).unwrap();
        let f = signed_difference(&gamma, &g).unwrap();
        let brute = q_polynomial_brute(Pattern::Cycle(3), &gamma, &f, 0.5).unwrap();
        let closed = q_polynomial(Pattern::Cycle(3), &gamma, &f, 0.5).unwrap();
        assert!((brute - closed).abs() < 1e-12);
        // f = γ, z = 0 on C_3: every even J has |J| = 2 and keeps a factor z
        assert_eq!(
            q_polynomial_brute(Pattern::Cycle(3), &gamma, &gamma, 0.0).unwrap(),
            0.0
        );
        assert_eq!(
            q_polynomial_brute(Pattern::Cycle(2), &gamma, &f, 0.3).unwrap(),
            0.0
        );
    }

    #[test]
    fn limits() {
        let g = complete(13);
        let gamma = EdgeFunction::indicator(&g, &VertexSet::full(13)).unwrap();
        assert!(matches!(
            q_polynomial_brute(Pattern::Cycle(3), &gamma, &gamma, 0.5),
            Err(Error::Resource(_))
        ));
        let g = complete(4);
        let gamma = EdgeFunction::indicator(&g, &VertexSet::full(4)).unwrap();
        assert!(matches!(
            q_polynomial_brute(Pattern::Cycle(8), &gamma, &gamma, 0.5),
            Err(Error::Resource(_))
        ));
    }
}
