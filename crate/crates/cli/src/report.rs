//! Campaign reports: JSON for the full record, CSV for the per-trial table.

use crate::config::ExperimentConfig;
use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use std::path::{Path, PathBuf};

/// Rows of a flat per-trial table.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub pass: bool,
    pub trials: usize,
    pub failed: usize,
    /// Trials whose bound is nonpositive; they never fail.
    pub vacuous: usize,
}

impl Aggregate {
    /// Passes iff every non-vacuous trial passes.
    pub fn from_flags(flags: impl IntoIterator<Item = Verdict>) -> Self {
        let (mut trials, mut failed, mut vacuous) = (0, 0, 0);
        for v in flags {
            trials += 1;
            match v {
                Verdict::Pass => {}
                Verdict::Fail => failed += 1,
                Verdict::Vacuous => vacuous += 1,
            }
        }
        Self {
            pass: failed == 0,
            trials,
            failed,
            vacuous,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: ExperimentConfig,
    pub aggregate: Aggregate,
    pub summary: Value,
    pub records: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip)]
    pub table: Table,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Writes `<out>` (JSON) and `<out>.csv` next to it, or prints the JSON.
    pub fn emit(&self, out: Option<&Path>) -> Result<()> {
        match out {
            Some(path) => {
                std::fs::write(path, self.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
                let csv = csv_path(path);
                std::fs::write(&csv, self.table.to_csv()?)
                    .with_context(|| format!("writing {}", csv.display()))?;
            }
            None => print!("{}", self.to_json()),
        }
        Ok(())
    }
}

pub fn csv_path(out: &Path) -> PathBuf {
    out.with_extension("csv")
}
