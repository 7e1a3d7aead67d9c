//! Walk-matrix counts. Everything is computed row by row: row `x` of `A^k`
//! is `e_x` pushed through `k` adjacency steps, so rows parallelize freely
//! and memory stays `O(n)` per worker.

use crate::exec;
use crate::graph::Graph;
use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, One, Zero};

/// Integer type the walk kernels can run over; `None` from a checked op
/// means "overflowed, retry wider".
trait Exact: Clone + Zero + One + CheckedAdd + CheckedMul + Send + Sync {}
impl<T: Clone + Zero + One + CheckedAdd + CheckedMul + Send + Sync> Exact for T {}

/// Runs the `u64` kernel and falls back to `BigUint` on overflow.
fn word_or_big<W, B>(word: W, big: B) -> BigUint
where
    W: FnOnce() -> Option<u64>,
    B: FnOnce() -> Option<BigUint>,
{
    match word() {
        Some(v) => BigUint::from(v),
        None => big().expect("BigUint arithmetic cannot overflow"),
    }
}

fn step<T: Exact>(g: &Graph, row: &[T]) -> Option<Vec<T>> {
    (0..g.n())
        .map(|y| {
            g.neighbors(y)
                .iter()
                .try_fold(T::zero(), |acc, &z| acc.checked_add(&row[z]))
        })
        .collect()
}

/// Row `x` of `A^k`: the number of `k`-walks from `x` to each vertex.
fn walk_row<T: Exact>(g: &Graph, x: usize, k: usize) -> Option<Vec<T>> {
    let mut row = vec![T::zero(); g.n()];
    row[x] = T::one();
    for _ in 0..k {
        row = step(g, &row)?;
    }
    Some(row)
}

fn dot<T: Exact>(a: &[T], b: &[T]) -> Option<T> {
    a.iter()
        .zip(b)
        .try_fold(T::zero(), |acc, (x, y)| acc.checked_add(&x.checked_mul(y)?))
}

fn sum<T: Exact>(items: impl IntoIterator<Item = Option<T>>) -> Option<T> {
    items
        .into_iter()
        .try_fold(T::zero(), |acc, v| acc.checked_add(&v?))
}

fn per_vertex<T, F>(g: &Graph, f: F) -> Vec<Option<T>>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    exec::map_range(g.n(), f)
}

/// `A^k` as exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    k: usize,
    n: usize,
    entries: Entries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Entries {
    Word(Vec<u64>),
    Big(Vec<BigUint>),
}

impl WalkTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `k`-edge walks from `x` to `y`.
    pub fn get(&self, x: usize, y: usize) -> BigUint {
        match &self.entries {
            Entries::Word(v) => BigUint::from(v[x * self.n + y]),
            Entries::Big(v) => v[x * self.n + y].clone(),
        }
    }

    /// Entries as machine words, if they all fit.
    pub fn as_words(&self) -> Option<&[u64]> {
        match &self.entries {
            Entries::Word(v) => Some(v),
            Entries::Big(_) => None,
        }
    }

    pub fn row_sum(&self, x: usize) -> BigUint {
        (0..self.n).map(|y| self.get(x, y)).sum()
    }
}

pub fn walk_table(g: &Graph, k: usize) -> WalkTable {
    let build = |g: &Graph| -> Option<Vec<Vec<u64>>> {
        per_vertex(g, |x| walk_row::<u64>(g, x, k))
            .into_iter()
            .collect()
    };
    let entries = match build(g) {
        Some(rows) => Entries::Word(rows.concat()),
        None => {
            let rows: Vec<Vec<BigUint>> = per_vertex(g, |x| walk_row::<BigUint>(g, x, k))
                .into_iter()
                .map(|r| r.expect("no overflow in BigUint"))
                .collect();
            Entries::Big(rows.concat())
        }
    };
    WalkTable {
        k,
        n: g.n(),
        entries,
    }
}

fn cycle_trace<T: Exact>(g: &Graph, m: usize) -> Option<T> {
    let half = m / 2;
    sum(per_vertex(g, |x| {
        let a: Vec<T> = walk_row(g, x, half)?;
        if m.is_multiple_of(2) {
            dot(&a, &a)
        } else {
            dot(&a, &step(g, &a)?)
        }
    }))
}

/// `h_{C_m}(G) = tr(A^m)` for `m >= 2`; `m = 2` gives `2e(G)`.
pub fn hom_count_cycle(g: &Graph, m: usize) -> BigUint {
    assert!(m >= 2, "cycle length must be at least 2");
    word_or_big(|| cycle_trace::<u64>(g, m), || cycle_trace::<BigUint>(g, m))
}

fn path_total<T: Exact>(g: &Graph, m: usize) -> Option<T> {
    sum(per_vertex(g, |x| {
        sum(walk_row::<T>(g, x, m)?.into_iter().map(Some))
    }))
}

/// `h_{P_m}(G)`: all `m`-edge walks; `n` for `m = 0`.
pub fn hom_count_path(g: &Graph, m: usize) -> BigUint {
    word_or_big(|| path_total::<u64>(g, m), || path_total::<BigUint>(g, m))
}

fn rooted<T: Exact>(g: &Graph, k: usize) -> Vec<Option<T>> {
    per_vertex(g, |x| {
        let w: Vec<T> = walk_row(g, x, k)?;
        let two = T::one().checked_add(&T::one())?;
        let half = sum(g.edges().iter().map(|&(y, z)| w[y].checked_mul(&w[z])))?;
        half.checked_mul(&two)
    })
}

/// Per-vertex `h_{C_{2k+1}}(G; x) = Σ_{y,z} w_k(x,y) 1(y,z) w_k(x,z)`.
pub fn rooted_odd_cycle_counts(g: &Graph, k: usize) -> Vec<BigUint> {
    assert!(k >= 1, "rooted odd cycles need k >= 1");
    let words: Option<Vec<u64>> = rooted::<u64>(g, k).into_iter().collect();
    match words {
        Some(v) => v.into_iter().map(BigUint::from).collect(),
        None => rooted::<BigUint>(g, k)
            .into_iter()
            .map(|v| v.expect("no overflow in BigUint"))
            .collect(),
    }
}

/// `(A^m)_{xx}` for every `x`.
pub fn closed_walks_at(g: &Graph, m: usize) -> Vec<BigUint> {
    let diag = |big: bool| -> Option<Vec<BigUint>> {
        per_vertex(g, |x| {
            if big {
                walk_row::<BigUint>(g, x, m).map(|r| r[x].clone())
            } else {
                walk_row::<u64>(g, x, m).map(|r| BigUint::from(r[x]))
            }
        })
        .into_iter()
        .collect()
    };
    diag(false)
        .or_else(|| diag(true))
        .expect("no overflow in BigUint")
}

fn figure_eight<T: Exact>(g: &Graph, q: usize, r: usize) -> Option<T> {
    sum(per_vertex(g, |x| {
        let even: Vec<T> = walk_row(g, x, 2 * q)?;
        let odd: Vec<T> = walk_row(g, x, 2 * r + 1)?;
        even[x].checked_mul(&odd[x])
    }))
}

/// Homomorphisms of `C_{2q}` and `C_{2r+1}` glued at one vertex:
/// `Σ_x (A^{2q})_{xx} (A^{2r+1})_{xx}`.
pub fn figure_eight_hom_count(g: &Graph, q: usize, r: usize) -> BigUint {
    assert!(q >= 1 && r >= 1, "figure-eight needs q, r >= 1");
    word_or_big(
        || figure_eight::<u64>(g, q, r),
        || figure_eight::<BigUint>(g, q, r),
    )
}
