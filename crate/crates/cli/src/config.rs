//! Flat `key = value` experiment configuration.
//!
//! Lines starting with `#` and blank lines are ignored. Keys mirror the CLI
//! flags; values given on the command line replace values from the file.

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ExperimentConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    /// Edge-list file of the host graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<PathBuf>,
    /// Built-in host, e.g. `paley 101`; used when `host` is absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    /// Edge-list file of the red subgraph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub: Option<PathBuf>,
    /// Whitespace-separated vertex list for `X`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    /// Probability that an edge is coloured red in random colourings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub keep: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// Include wall-clock timing in the report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<bool>,
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow!("{key}: cannot parse {value:?}: {e}"))
}

impl ExperimentConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "command" => self.command = Some(value.to_string()),
            "host" => self.host = Some(value.into()),
            "graph" => self.graph = Some(value.to_string()),
            "sub" => self.sub = Some(value.into()),
            "subset" => self.subset = Some(value.into()),
            "pattern" => self.pattern = Some(value.to_string()),
            "k" => self.k = Some(parse(key, value)?),
            "alpha" => self.alpha = Some(parse(key, value)?),
            "delta" => self.delta = Some(parse(key, value)?),
            "epsilon" => self.epsilon = Some(parse(key, value)?),
            "rho" => self.rho = Some(parse(key, value)?),
            "eta" => self.eta = Some(parse(key, value)?),
            "keep" => self.keep = Some(parse(key, value)?),
            "trials" => self.trials = Some(parse(key, value)?),
            "seed" => self.seed = Some(parse(key, value)?),
            "out" => self.out = Some(value.into()),
            "threads" => self.threads = Some(parse(key, value)?),
            "timing" => self.timing = Some(parse(key, value)?),
            _ => bail!("unknown config key {key:?}"),
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key = value", i + 1))?;
            cfg.set(key.trim(), value.trim())
                .with_context(|| format!("line {}", i + 1))?;
        }
        Ok(cfg)
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }

    /// The file form; `parse(to_text())` returns an equal config.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let json = serde_json::to_value(self).expect("config serializes");
        for (key, value) in json.as_object().expect("struct") {
            let v = match value {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{key} = {v}");
        }
        out
    }

    /// Fields set in `other` replace those in `self`.
    pub fn overlay(mut self, other: &Self) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f.clone(); } )* };
        }
        take!(
            command, host, graph, sub, subset, pattern, k, alpha, delta, epsilon, rho, eta, keep,
            trials, seed, out, threads, timing
        );
        self
    }
}
