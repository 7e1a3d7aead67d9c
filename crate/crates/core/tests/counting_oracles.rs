use ndl_core::constructions::{paley, random_regular, rng};
use ndl_core::counting::*;
use ndl_core::experiments::corpus;
use ndl_core::spectral::{certify_ndl, spectrum};
use ndl_core::Graph;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed, 0);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| r.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Labelled `m`-cycles by trying every injective vertex sequence.
fn labelled_cycles(g: &Graph, m: usize) -> u64 {
    fn extend(g: &Graph, m: usize, seq: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        if seq.len() == m {
            return g.has_edge(seq[m - 1], seq[0]) as u64;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if !used[v] && g.has_edge(*seq.last().unwrap(), v) {
                used[v] = true;
                seq.push(v);
                total += extend(g, m, seq, used);
                seq.pop();
                used[v] = false;
            }
        }
        total
    }
    (0..g.n())
        .map(|s| {
            let mut used = vec![false; g.n()];
            used[s] = true;
            extend(g, m, &mut vec![s], &mut used)
        })
        .sum()
}

#[test]
fn closed_walks_match_eigenvalue_power_sums() {
    for e in corpus() {
        let s = spectrum(&e.graph).unwrap();
        for m in 2..=9u32 {
            let exact = hom_count_cycle(&e.graph, m as usize).to_f64().unwrap();
            let spectral = s.power_sum(m);
            assert!(
                (exact - spectral).abs() <= 1e-8 * exact.max(1.0),
                "{} m={m}",
                e.name
            );
        }
    }
}

#[test]
fn figure_eight_counts_respect_their_bound() {
    for g in [
        paley(13).unwrap(),
        paley(17).unwrap(),
        paley(101).unwrap(),
        random_regular(12, 4, 2).unwrap(),
    ] {
        let cert = certify_ndl(&g).unwrap();
        for (q, r) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let c = figure_eight_bound_check(&g, &cert, q, r).unwrap();
            assert!(c.holds, "q={q} r={r}: {} > {}", c.count, c.bound);
        }
    }
}

#[test]
fn labelled_cycles_on_named_graphs() {
    let p13 = paley(13).unwrap();
    assert_eq!(injective_count_cycle(&p13, 3).unwrap(), 156);
    assert_eq!(
        injective_count_cycle(&p13, 4).unwrap(),
        labelled_cycles(&p13, 4)
    );
    assert_eq!(
        injective_count_cycle(&p13, 5).unwrap(),
        labelled_cycles(&p13, 5)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brute_force_agrees_with_walk_counts(n in 1usize..8, p in 0.0f64..1.0, seed in any::<u64>(), pick in 0usize..14) {
        let g = random_graph(n, p, seed);
        let patterns = ndl_core::experiments::oracle_patterns();
        let pattern = patterns[pick % patterns.len()];
        let brute = brute_hom_count(&pattern.to_graph().unwrap(), &g).unwrap();
        prop_assert_eq!(hom_count(&g, pattern), brute.into());
    }

    #[test]
    fn labelled_cycle_counts_and_search(n in 3usize..8, p in 0.2f64..1.0, seed in any::<u64>(), m in 3usize..7) {
        let g = random_graph(n, p, seed);
        let count = injective_count_cycle(&g, m).unwrap();
        prop_assert_eq!(count, labelled_cycles(&g, m));
        let found = find_cycle(&g, m).unwrap();
        prop_assert_eq!(found.is_some(), count > 0);
        if let Some(c) = found {
            prop_assert_eq!(c.len(), m);
            prop_assert!((0..m).all(|i| g.has_edge(c[i], c[(i + 1) % m])));
        }
    }

    #[test]
    fn labelled_copies_never_exceed_homomorphisms(n in 3usize..9, p in 0.0f64..1.0, seed in any::<u64>(), m in 3usize..8) {
        let g = random_graph(n, p, seed);
        let hom = hom_count_cycle(&g, m);
        prop_assert!(num_bigint::BigUint::from(injective_count_cycle(&g, m).unwrap()) <= hom);
    }

    #[test]
    fn pattern_text_round_trips(kind in 0usize..3, a in 1usize..9, b in 1usize..5) {
        let p = match kind {
            0 => Pattern::Cycle(a + 1),
            1 => Pattern::Path(a),
            _ => Pattern::FigureEight { q: b, r: a.min(4) },
        };
        prop_assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
    }
}
