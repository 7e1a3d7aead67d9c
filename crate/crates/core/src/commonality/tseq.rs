//! Span-indexed path sums `T_m` and the lower-bound checks on even-subset
//! path sums.

use super::density::{mixed_raw, q_polynomial, Shape};
use super::edge_function::EdgeFunction;
use crate::counting::Pattern;
use crate::error::{input, Error, Result};
use serde::Serialize;

/// Longest span enumerated by [`t_sequence`].
pub const T_MAX_SPAN: usize = 12;

/// `T_0, …, T_{2k}`.
///
/// For `m ≥ 2`, `T_m = (pz)^{2k−m} Σ_J E[⟨f, zγ⟩^J_{P_m}]` over even `J`
/// containing both the first and the last edge of the `m`-edge path.
/// `T_0 = T_1 = 0`.
pub fn t_sequence(
    k: usize,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
    p: f64,
) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(input("t_sequence needs k >= 1"));
    }
    if !(z > 0.0 && z <= 1.0) {
        return Err(input(format!("z = {z} outside (0, 1]")));
    }
    if 2 * k > T_MAX_SPAN {
        return Err(Error::Resource(format!(
            "spans are limited to {T_MAX_SPAN} edges, k = {k} needs {}",
            2 * k
        )));
    }
    if gamma.size() == 0 {
        return Err(Error::Domain("empty vertex set".into()));
    }
    f.check_dominated_by(gamma)?;
    let s = gamma.size();
    let h: Vec<f64> = gamma.values().iter().map(|v| z * v).collect();

    let mut out = vec![0.0; 2 * k + 1];
    for (m, slot) in out.iter_mut().enumerate().skip(2) {
        let sh = Shape {
            closed: false,
            edges: m,
            vertices: m + 1,
        };
        let ends = 1u64 | 1 << (m - 1);
        // interior edges 1..m-1 chosen freely, parity fixed by the ends
        let sum: f64 = (0u64..1 << (m - 2))
            .map(|inner| ends | inner << 1)
            .filter(|mask| mask.count_ones() % 2 == 0)
            .map(|mask| mixed_raw(sh, mask, f.values(), &h, s))
            .sum();
        *slot = (p * z).powi((2 * k - m) as i32) * sum;
    }
    Ok(out)
}

/// `T_{2ℓ} + 2T_{2ℓ−1} + T_{2ℓ−2}` for `ℓ ≥ 1`.
pub fn t_combination(ts: &[f64], ell: usize) -> f64 {
    assert!(ell >= 1 && 2 * ell < ts.len(), "ell out of range");
    ts[2 * ell] + 2.0 * ts[2 * ell - 1] + ts[2 * ell - 2]
}

/// `Σ_{i=1}^{2k} (2k+1−i) T_i`: the value of the even-subset path sum when
/// every vertex of `X` has exactly `p|X|` neighbours in `X`.
pub fn weighted_t_sum(ts: &[f64]) -> f64 {
    let two_k = ts.len() - 1;
    (1..=two_k).map(|i| (two_k + 1 - i) as f64 * ts[i]).sum()
}

/// `max_x |deg_{Γ[X]}(x) / (p|X|) − 1|` read off the indicator `γ_X`.
pub fn measured_delta(gamma: &EdgeFunction, p: f64) -> f64 {
    let s = gamma.size();
    let target = p * s as f64;
    (0..s)
        .map(|i| {
            let deg: f64 = (0..s).map(|j| gamma.get(i, j)).sum();
            (deg / target - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PathSumCheck {
    /// `Σ_{J ∈ E_+(P_{2k})} E[⟨f, zγ⟩^J]`, i.e. `Q_{P_{2k}}(z; f)`.
    pub value: f64,
    /// `−p^{2k}·2^{5k}·δ`.
    pub bound: f64,
    pub delta: f64,
    pub holds: bool,
}

/// Lower bound `Q_{P_{2k}}(z; f) ≥ −p^{2k} 2^{5k} δ` with the measured `δ`.
pub fn path_sum_check(
    k: usize,
    gamma: &EdgeFunction,
    f: &EdgeFunction,
    z: f64,
    p: f64,
) -> Result<PathSumCheck> {
    let value = q_polynomial(Pattern::Path(2 * k), gamma, f, z)?;
    let delta = measured_delta(gamma, p);
    let bound = -p.powi(2 * k as i32) * 2f64.powi(5 * k as i32) * delta;
    Ok(PathSumCheck {
        value,
        bound,
        delta,
        holds: value >= bound - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commonality::signed_difference;
    use crate::constructions::paley;
    use crate::graph::{Graph, VertexSet};

    fn paley13() -> (EdgeFunction, f64) {
        let g = paley(13).unwrap();
        (
            EdgeFunction::indicator(&g, &VertexSet::full(13)).unwrap(),
            6.0 / 13.0,
        )
    }

    #[test]
    fn zero_f_gives_zero_sequence() {
        let (gamma, p) = paley13();
        let zero = EdgeFunction::zero(VertexSet::full(13));
        let ts = t_sequence(2, &gamma, &zero, 0.5, p).unwrap();
        assert!(ts.iter().all(|&t| t == 0.0));
    }

    #[test]
    fn t2_with_f_equal_gamma() {
        // T_2 = (pz)^{2k-2} t_{P_2}(γ), and t_{P_2}(γ) = d²n / n³ on a d-regular graph
        let (gamma, p) = paley13();
        for (k, z) in [(1, 0.5), (2, 0.8), (3, 1.0)] {
            let ts = t_sequence(k, &gamma, &gamma, z, p).unwrap();
            let expect = (p * z).powi(2 * k as i32 - 2) * 36.0 * 13.0 / 13f64.powi(3);
            assert!((ts[2] - expect).abs() < 1e-14);
            assert_eq!((ts[0], ts[1]), (0.0, 0.0));
        }
    }

    #[test]
    fn input_validation() {
        let (gamma, p) = paley13();
        assert!(t_sequence(0, &gamma, &gamma, 0.5, p).is_err());
        assert!(t_sequence(1, &gamma, &gamma, 0.0, p).is_err());
        assert!(matches!(
            t_sequence(7, &gamma, &gamma, 0.5, p),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn regular_sets_reassemble_the_path_sum() {
        let g = paley(13).unwrap();
        let x = VertexSet::full(13);
        let gamma = EdgeFunction::indicator(&g, &x).unwrap();
        let sub = g.filter_edges(|u, v| (u * 7 + v * 3) % 5 < 2);
        let f = signed_difference(&gamma, &EdgeFunction::indicator(&sub, &x).unwrap()).unwrap();
        let p = 6.0 / 13.0;
        for k in 1..=3 {
            for z in [0.25, 0.6, 1.0] {
                let ts = t_sequence(k, &gamma, &f, z, p).unwrap();
                let q = q_polynomial(Pattern::Path(2 * k), &gamma, &f, z).unwrap();
                assert!((weighted_t_sum(&ts) - q).abs() < 1e-13, "k={k} z={z}");
                let regrouped: f64 = (1..=k)
                    .map(|i| (k + 1 - i) as f64 * t_combination(&ts, i))
                    .sum();
                assert!((regrouped - weighted_t_sum(&ts)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn delta_of_regular_and_irregular_sets() {
        let (gamma, p) = paley13();
        assert_eq!(measured_delta(&gamma, p), 0.0);
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let gp = EdgeFunction::indicator(&path, &VertexSet::full(3)).unwrap();
        // degrees 1,2,1 against p|X| = 1.5
        assert!((measured_delta(&gp, 0.5) - 1.0 / 3.0).abs() < 1e-15);
    }
}
