use ndl_core::commonality::*;
use ndl_core::constructions::{paley, random_regular, rng};
use ndl_core::counting::Pattern;
use ndl_core::spectral::certify_ndl;
use ndl_core::{Graph, VertexSet};
use proptest::prelude::*;
use rand::Rng;

fn colouring(host: &Graph, x: &VertexSet, keep: f64, seed: u64) -> (EdgeFunction, EdgeFunction) {
    let mut r = rng(seed, 0);
    let sub = host.filter_edges(|_, _| r.gen_bool(keep));
    let gamma = EdgeFunction::indicator(host, x).unwrap();
    let g = EdgeFunction::indicator(&sub, x).unwrap();
    (gamma, g)
}

fn subset(n: usize, seed: u64, size: usize) -> VertexSet {
    let mut r = rng(seed, 1);
    let mut members: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = r.gen_range(i..n);
        members.swap(i, j);
    }
    VertexSet::new(n, members[..size].iter().copied()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_routes_to_q_agree(seed in any::<u64>(), keep in 0.0f64..1.0, size in 2usize..8, m in 3usize..6, z in 0.0f64..1.0) {
        let host = paley(13).unwrap();
        let x = subset(13, seed, size);
        let (gamma, g) = colouring(&host, &x, keep, seed);
        let f = signed_difference(&gamma, &g).unwrap();
        let pattern = Pattern::Cycle(m);
        let closed = q_polynomial(pattern, &gamma, &f, z).unwrap();
        let subsets = q_polynomial_by_subsets(pattern, &gamma, &f, z).unwrap();
        let brute = q_polynomial_brute(pattern, &gamma, &f, z).unwrap();
        prop_assert!((closed - subsets).abs() < 1e-12);
        prop_assert!((closed - brute).abs() < 1e-12);
        let coeffs = q_coefficients_by_interpolation(pattern, &gamma, &f).unwrap();
        prop_assert!((eval_poly(&coeffs, z) - closed).abs() < 1e-9);
    }

    #[test]
    fn swapping_colours_leaves_q_unchanged(seed in any::<u64>(), keep in 0.0f64..1.0, z in 0.0f64..1.0) {
        let host = random_regular(10, 3, 1).unwrap();
        let x = VertexSet::full(10);
        let (gamma, g) = colouring(&host, &x, keep, seed);
        let f = signed_difference(&gamma, &g).unwrap();
        let flipped = EdgeFunction::new(x, f.values().iter().map(|v| -v).collect()).unwrap();
        for pattern in [Pattern::Cycle(3), Pattern::Cycle(5), Pattern::Path(4)] {
            let a = q_polynomial(pattern, &gamma, &f, z).unwrap();
            let b = q_polynomial(pattern, &gamma, &flipped, z).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn regular_host_path_sums_are_nonnegative(seed in any::<u64>(), keep in 0.0f64..1.0, z in 0.01f64..1.0, k in 1usize..3) {
        let host = paley(13).unwrap();
        let cert = certify_ndl(&host).unwrap();
        let (gamma, g) = colouring(&host, &VertexSet::full(13), keep, seed);
        let f = signed_difference(&gamma, &g).unwrap();
        let c = path_sum_check(k, &gamma, &f, z, cert.p).unwrap();
        prop_assert_eq!(c.delta, 0.0);
        prop_assert!(c.holds, "value {}", c.value);
    }

    #[test]
    fn derivative_residual_within_bound(seed in any::<u64>(), keep in 0.0f64..1.0, z in 0.05f64..0.95, k in 1usize..3) {
        let host = paley(17).unwrap();
        let cert = certify_ndl(&host).unwrap();
        let (gamma, g) = colouring(&host, &VertexSet::full(17), keep, seed);
        let f = signed_difference(&gamma, &g).unwrap();
        let c = derivative_check(&cert, &gamma, &f, k, z).unwrap();
        prop_assert!((c.derivative_central - c.derivative_interpolated).abs() < 1e-6);
        prop_assert!(c.holds, "residual {} bound {}", c.residual, c.bound);
    }
}

#[test]
fn monochromatic_counts_split_the_host() {
    let host = paley(13).unwrap();
    let cert = certify_ndl(&host).unwrap();
    let x = VertexSet::full(13);
    for seed in 0..10 {
        let mut r = rng(seed, 0);
        let sub = host.filter_edges(|_, _| r.gen_bool(0.5));
        let a = verify_commonality(&host, &cert, &x, &sub, 1).unwrap();
        let rest = host.complement_within(&sub).unwrap();
        let b = verify_commonality(&host, &cert, &x, &rest, 1).unwrap();
        assert_eq!((a.n_g, a.n_complement), (b.n_complement, b.n_g));
        // t(g) + t(γ − g) equals the normalized monochromatic homomorphism total
        let gamma = EdgeFunction::indicator(&host, &x).unwrap();
        let g = EdgeFunction::indicator(&sub, &x).unwrap();
        let c = cancel_identity_check(Pattern::Cycle(3), &gamma, &g).unwrap();
        assert!((c.lhs - a.hom_density_sum).abs() < 1e-12);
    }
}
