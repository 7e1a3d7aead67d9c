//! Two-colour odd-cycle counts inside a vertex subset `X` of the host.
//!
//! `γ` is the indicator of `Γ[X]`, `g ≤ γ` the indicator of one colour
//! class and `f = 2g − γ`. Densities are normalized by `|X|^{|V(H)|}`.

mod brute;
mod density;
mod edge_function;
mod tseq;
mod verify;

pub use brute::{q_polynomial_brute, subset_expectations_brute, BRUTE_MAX_DOMAIN, BRUTE_MAX_EDGES};
pub use density::{
    cancel_identity_check, eval_poly, eval_poly_derivative, even_nonempty_subsets,
    mixed_expectation, q_coefficients_by_interpolation, q_coefficients_by_subsets,
    q_derivative_central, q_polynomial, q_polynomial_by_subsets, t_weighted, CancelCheck,
    SUBSET_MAX_EDGES,
};
pub use edge_function::{signed_difference, EdgeFunction};
pub use tseq::{
    measured_delta, path_sum_check, t_combination, t_sequence, weighted_t_sum, PathSumCheck,
    T_MAX_SPAN,
};
pub use verify::{
    commonality_bound, cover_multiplicities, derivative_check, hom_density_bound,
    verify_commonality, CommonalityReport, DerivativeCheck, Verdict, DERIVATIVE_STEP,
};
