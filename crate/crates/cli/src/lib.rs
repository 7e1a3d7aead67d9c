//! Experiment campaigns over `ndl-core`: configuration, execution and
//! JSON/CSV reports.

pub mod campaigns;
pub mod config;
pub mod inputs;
pub mod report;

pub use campaigns::{generate, load_host, run};
pub use config::ExperimentConfig;
pub use report::Report;
