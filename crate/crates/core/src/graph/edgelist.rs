//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//! Labels are 0-based; `#` starts a comment that runs to end of line.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, body) in lines {
        pairs.push(parse_pair(line, body)?);
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges but {} follow", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let err = |msg: String| Error::Parse { line, msg };
    let mut fields = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| err("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| err(format!("`{tok}` is not a nonnegative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(err("trailing tokens".into()));
    }
    Ok(pair)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
