//! Experiment runner for `dirichlet-hp`: JSON configs, polynomial generators,
//! verification suites and the CSV/JSON report format used by `hplab`.

pub mod cli;
pub mod config;
pub mod formats;
pub mod generate;
pub mod report;
pub mod suites;

pub use config::{ConfigError, ExperimentConfig};
pub use report::{Report, Row};
