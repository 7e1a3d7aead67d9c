use crate::error::{input, Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

/// Small pattern graphs the counting and density code understands.
///
/// `Cycle(2)` is the single edge `K_2` (a closed 2-walk traverses one edge
/// twice, so `tr(A²)` counts its homomorphisms).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Cycle(usize),
    Path(usize),
    /// `C_{2q}` and `C_{2r+1}` sharing exactly one vertex.
    FigureEight {
        q: usize,
        r: usize,
    },
}

impl Pattern {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Cycle(m) => m,
            Pattern::Path(m) => m + 1,
            Pattern::FigureEight { q, r } => 2 * (q + r),
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            Pattern::Cycle(2) => 1,
            Pattern::Cycle(m) => m,
            Pattern::Path(m) => m,
            Pattern::FigureEight { q, r } => self.to_graph_unchecked(q, r).edge_count(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Pattern::Cycle(m) if m < 2 => Err(input("cycle patterns need length >= 2")),
            Pattern::FigureEight { q, r } if q == 0 || r == 0 => {
                Err(input("figure-eight needs q >= 1 and r >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// The pattern as a graph. Cycles use vertices `0..m` in order; paths
    /// `0..=m`; figure-eights share vertex 0.
    pub fn to_graph(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            Pattern::Cycle(2) => Graph::from_sorted_edges(2, vec![(0, 1)]),
            Pattern::Cycle(m) => crate::constructions::cycle(m),
            Pattern::Path(m) => {
                Graph::from_sorted_edges(m + 1, (0..m).map(|i| (i, i + 1)).collect())
            }
            Pattern::FigureEight { q, r } => self.to_graph_unchecked(q, r),
        })
    }

    fn to_graph_unchecked(self, q: usize, r: usize) -> Graph {
        // Even cycle on 0, 1..2q-1; odd cycle on 0, 2q..2q+2r-1.
        let mut pairs = Vec::new();
        let mut close = |ring: Vec<usize>| {
            if ring.len() == 2 {
                pairs.push((ring[0], ring[1]));
            } else {
                for i in 0..ring.len() {
                    pairs.push((ring[i], ring[(i + 1) % ring.len()]));
                }
            }
        };
        close(std::iter::once(0).chain(1..2 * q).collect());
        close(std::iter::once(0).chain(2 * q..2 * q + 2 * r).collect());
        Graph::from_edge_list(2 * (q + r), &pairs).expect("figure-eight edges are valid")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Cycle(m) => write!(f, "c{m}"),
            Pattern::Path(m) => write!(f, "p{m}"),
            Pattern::FigureEight { q, r } => write!(f, "fig8:{q},{r}"),
        }
    }
}

/// Accepts `c5`, `p4`, `fig8:1,2` (case-insensitive).
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || {
            input(format!(
                "unknown pattern `{s}` (expected cN, pN or fig8:q,r)"
            ))
        };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let p = if let Some(rest) = s.strip_prefix("fig8:") {
            let (q, r) = rest.split_once(',').ok_or_else(bad)?;
            Pattern::FigureEight {
                q: num(q)?,
                r: num(r)?,
            }
        } else if let Some(rest) = s.strip_prefix('c') {
            Pattern::Cycle(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('p') {
            Pattern::Path(num(rest)?)
        } else {
            return Err(bad());
        };
        p.validate()?;
        Ok(p)
    }
}
