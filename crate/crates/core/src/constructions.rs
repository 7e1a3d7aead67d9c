//! Concrete graph families: Paley graphs, random regular graphs and a few
//! standard small graphs.

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pairing-model restarts allowed before giving up.
pub const MAX_RESTARTS: usize = 10_000;

/// Seeded generator used everywhere a graph or trial needs randomness.
///
/// ChaCha8 seeded through `seed_from_u64`; `stream` separates independent
/// trials drawn from one master seed.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Nonzero quadratic residues modulo `q`, sorted.
pub fn quadratic_residues(q: u64) -> Vec<u64> {
    let mut res: Vec<u64> = (1..q).map(|x| x * x % q).collect();
    res.sort_unstable();
    res.dedup();
    res
}

/// Paley graph on `Z_q`: `u ~ v` iff `u - v` is a nonzero square.
/// `q` must be a prime congruent to 1 mod 4, so that -1 is a square and the
/// relation is symmetric.
pub fn paley(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return Err(input(format!("paley: {q} is not prime")));
    }
    if q % 4 != 1 {
        return Err(input(format!("paley: {q} is not 1 mod 4")));
    }
    let mut is_square = vec![false; q as usize];
    for r in quadratic_residues(q) {
        is_square[r as usize] = true;
    }
    let n = q as usize;
    let mut edges = Vec::with_capacity(n * (n - 1) / 4);
    for u in 0..n {
        for v in u + 1..n {
            if is_square[v - u] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Uniform-ish simple `d`-regular graph from the pairing model.
///
/// Shuffles `n*d` half-edges and pairs them up; any loop or repeated pair
/// throws the whole pairing away. Output is a pure function of
/// `(n, d, seed)`.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n {
        return Err(input(format!(
            "random_regular: need d < n, got d={d}, n={n}"
        )));
    }
    if n * d % 2 == 1 {
        return Err(input(format!("random_regular: n*d = {} is odd", n * d)));
    }
    let mut rng = rng(seed, 0);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut seen = vec![false; n * n];
    'restart: for _ in 0..MAX_RESTARTS {
        points.shuffle(&mut rng);
        seen.iter_mut().for_each(|s| *s = false);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || seen[u * n + v] {
                continue 'restart;
            }
            seen[u * n + v] = true;
            edges.push((u, v));
        }
        edges.sort_unstable();
        return Ok(Graph::from_sorted_edges(n, edges));
    }
    Err(Error::Generation(format!(
        "random_regular({n}, {d}): no simple pairing after {MAX_RESTARTS} restarts"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standard {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
}

pub fn standard(kind: Standard) -> Result<Graph> {
    let edges = match kind {
        Standard::Complete(n) => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Standard::Cycle(n) => {
            if n < 3 {
                return Err(input(format!("cycle needs at least 3 vertices, got {n}")));
            }
            let mut e: Vec<_> = (0..n - 1).map(|u| (u, u + 1)).collect();
            e.push((0, n - 1));
            e.sort_unstable();
            e
        }
        Standard::CompleteBipartite(a, b) => (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect(),
        Standard::Empty(_) => Vec::new(),
    };
    let n = match kind {
        Standard::Complete(n) | Standard::Cycle(n) | Standard::Empty(n) => n,
        Standard::CompleteBipartite(a, b) => a + b,
    };
    Ok(Graph::from_sorted_edges(n, edges))
}

pub fn complete(n: usize) -> Graph {
    standard(Standard::Complete(n)).expect("complete graphs always exist")
}

/// `C_n`; panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    standard(Standard::Cycle(n)).expect("cycle needs n >= 3")
}
