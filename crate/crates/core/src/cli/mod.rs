//! The `ybverify` command line: seeded random instances, parallel trials,
//! and JSON reports.

mod args;
mod config;
pub mod generate;
mod run;

use thiserror::Error;

pub use args::{main_with_args, Cli};
pub use config::{MapId, Mode, RunConfig, DEFAULT_CHAIN_TOL, DEFAULT_CHECK_TOL};
pub use run::{
    replay, run, ChainCase, ReportDocument, CHECKPOINT_INTERVAL, EXIT_ERROR, EXIT_FAIL, EXIT_PASS, MAX_SKIP_FRACTION,
    REPORT_VERSION,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("instance generation failed: {0}")]
    Generation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_ERROR
    }
}
