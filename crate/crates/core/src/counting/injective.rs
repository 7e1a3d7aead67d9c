//! Labelled cycle copies by depth-first search over vertex sequences.

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

/// Default cap on partial extensions explored by one count.
pub const DFS_BUDGET: u64 = 1_000_000_000;

const FLUSH_EVERY: u64 = 1 << 16;

struct Search<'a> {
    g: &'a Graph,
    m: usize,
    budget: u64,
    spent: &'a AtomicU64,
    local: u64,
    path: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local == FLUSH_EVERY {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.spent.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.budget {
            return Err(Error::Resource(format!(
                "injective C_{} count exceeded {} partial extensions",
                self.m, self.budget
            )));
        }
        Ok(())
    }

    /// Extends `path` (non-empty) to length `m`, counting closed copies.
    fn count(&mut self) -> Result<u64> {
        let last = *self.path.last().expect("path starts at a root");
        let first = self.path[0];
        if self.path.len() + 1 == self.m {
            let g = self.g;
            return Ok(g
                .neighbors(last)
                .iter()
                .filter(|&&w| !self.used[w] && g.has_edge(w, first))
                .count() as u64);
        }
        let mut total = 0;
        for &w in self.g.neighbors(last) {
            if self.used[w] {
                continue;
            }
            self.tick()?;
            self.used[w] = true;
            self.path.push(w);
            let sub = self.count();
            self.path.pop();
            self.used[w] = false;
            total += sub?;
        }
        Ok(total)
    }

    /// `best` holds the smallest root known to have a copy; searches from
    /// larger roots give up once it drops below them.
    fn find(&mut self, best: &AtomicUsize) -> Result<bool> {
        let last = *self.path.last().expect("path starts at a root");
        let first = self.path[0];
        if self.path.len() + 1 == self.m {
            let g = self.g;
            if let Some(&w) = g
                .neighbors(last)
                .iter()
                .find(|&&w| !self.used[w] && g.has_edge(w, first))
            {
                self.path.push(w);
                return Ok(true);
            }
            return Ok(false);
        }
        for &w in self.g.neighbors(last) {
            if self.used[w] || best.load(Ordering::Relaxed) < first {
                continue;
            }
            self.tick()?;
            self.used[w] = true;
            self.path.push(w);
            if self.find(best)? {
                return Ok(true);
            }
            self.path.pop();
            self.used[w] = false;
        }
        Ok(false)
    }
}

fn search_from<'a>(
    g: &'a Graph,
    m: usize,
    budget: u64,
    spent: &'a AtomicU64,
    root: usize,
) -> Search<'a> {
    let mut used = vec![false; g.n()];
    used[root] = true;
    Search {
        g,
        m,
        budget,
        spent,
        local: 0,
        path: vec![root],
        used,
    }
}

/// `N_{C_m}(G)`: injective homomorphisms `C_m → G`. Each unlabelled
/// `m`-cycle of `G` contributes `2m`.
pub fn injective_count_cycle(g: &Graph, m: usize) -> Result<u64> {
    injective_count_cycle_with_budget(g, m, DFS_BUDGET)
}

/// As [`injective_count_cycle`] with an explicit extension budget. Whether
/// the budget is exceeded depends only on the input, not on scheduling.
pub fn injective_count_cycle_with_budget(g: &Graph, m: usize, budget: u64) -> Result<u64> {
    assert!(m >= 3, "injective cycle counts need m >= 3");
    let spent = AtomicU64::new(0);
    let per_root = exec::try_map_range(g.n(), |root| {
        let mut s = search_from(g, m, budget, &spent, root);
        let c = s.count()?;
        s.flush()?;
        Ok::<_, Error>(c)
    })?;
    Ok(per_root.into_iter().sum())
}

/// Some copy of `C_m` in `g` as a vertex sequence, or `None`.
///
/// Roots are tried in increasing order and the first root with a copy wins,
/// so the answer does not depend on scheduling.
pub fn find_cycle(g: &Graph, m: usize) -> Result<Option<Vec<usize>>> {
    assert!(m >= 3, "cycle search needs m >= 3");
    let spent = AtomicU64::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let found = exec::try_map_range(g.n(), |root| {
        let mut s = search_from(g, m, DFS_BUDGET, &spent, root);
        let hit = s.find(&best)?;
        if hit {
            best.fetch_min(root, Ordering::Relaxed);
        }
        Ok::<_, Error>(hit.then_some(s.path))
    })?;
    Ok(found.into_iter().flatten().next())
}
