//! Loading hosts, subgraphs and vertex subsets.

use anyhow::{anyhow, bail, Context, Result};
use ndl_core::constructions::{paley, random_regular, standard, Standard};
use ndl_core::graph::read_edge_list;
use ndl_core::{Graph, VertexSet};
use std::path::Path;

/// A built-in graph such as `paley 13`, `random-regular 10 3` or
/// `bipartite 3 4`. Tokens may be separated by spaces or colons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Paley(u64),
    RandomRegular { n: usize, d: usize },
    Complete(usize),
    Cycle(usize),
    Bipartite(usize, usize),
    Empty(usize),
}

impl GraphSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ':')
            .filter(|t| !t.is_empty())
            .collect();
        let nums = |want: usize| -> Result<Vec<usize>> {
            if tokens.len() != want + 1 {
                bail!(
                    "{:?} expects {want} number(s)",
                    tokens.first().unwrap_or(&"")
                );
            }
            tokens[1..]
                .iter()
                .map(|t| t.parse().map_err(|_| anyhow!("not a count: {t:?}")))
                .collect()
        };
        Ok(match tokens.first().copied() {
            Some("paley") => Self::Paley(nums(1)?[0] as u64),
            Some("random-regular" | "rr") => {
                let v = nums(2)?;
                Self::RandomRegular { n: v[0], d: v[1] }
            }
            Some("complete" | "k") => Self::Complete(nums(1)?[0]),
            Some("cycle" | "c") => Self::Cycle(nums(1)?[0]),
            Some("bipartite") => {
                let v = nums(2)?;
                Self::Bipartite(v[0], v[1])
            }
            Some("empty") => Self::Empty(nums(1)?[0]),
            _ => bail!("unknown graph {text:?}; expected paley, random-regular, complete, cycle, bipartite or empty"),
        })
    }

    pub fn build(&self, seed: u64) -> Result<Graph> {
        Ok(match *self {
            Self::Paley(q) => paley(q)?,
            Self::RandomRegular { n, d } => random_regular(n, d, seed)?,
            Self::Complete(n) => standard(Standard::Complete(n))?,
            Self::Cycle(n) => standard(Standard::Cycle(n))?,
            Self::Bipartite(a, b) => standard(Standard::CompleteBipartite(a, b))?,
            Self::Empty(n) => standard(Standard::Empty(n))?,
        })
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    read_edge_list(path).with_context(|| format!("reading {}", path.display()))
}

/// Vertices separated by whitespace; `#` starts a comment.
pub fn parse_vertex_list(text: &str, host_n: usize) -> Result<VertexSet> {
    let mut members = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            members.push(
                tok.parse()
                    .map_err(|_| anyhow!("line {}: not a vertex: {tok:?}", i + 1))?,
            );
        }
    }
    Ok(VertexSet::new(host_n, members)?)
}

pub fn read_vertex_list(path: &Path, host_n: usize) -> Result<VertexSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_vertex_list(&text, host_n)
}
