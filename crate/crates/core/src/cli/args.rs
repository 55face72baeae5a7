use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cli::{run, CliError, MapId, Mode, RunConfig, EXIT_ERROR, EXIT_PASS};
use crate::ybcore::CheckKind;

#[derive(Debug, Parser)]
#[command(name = "ybverify", version, about = "Randomized verification of Yang-Baxter maps")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a property of a map on random instances.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
        #[command(flatten)]
        opts: Options,
    },
    /// Transfer dynamics on periodic chains.
    Chain {
        #[command(subcommand)]
        action: ChainAction,
    },
}

#[derive(Debug, Subcommand)]
enum ChainAction {
    /// Check that monodromy spectral invariants are conserved.
    Conserve {
        #[command(flatten)]
        opts: Options,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyCheck {
    Yb,
    Reversibility,
    Lax,
    LaxDual,
    ProjectiveForm,
}

impl From<VerifyCheck> for CheckKind {
    fn from(c: VerifyCheck) -> Self {
        match c {
            VerifyCheck::Yb => CheckKind::YangBaxter,
            VerifyCheck::Reversibility => CheckKind::Reversibility,
            VerifyCheck::Lax => CheckKind::Lax,
            VerifyCheck::LaxDual => CheckKind::LaxDual,
            VerifyCheck::ProjectiveForm => CheckKind::ProjectiveForm,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapArg {
    Adler,
    Soliton,
    Crystal,
    AdlerPerturbed,
    Shift,
}

impl From<MapArg> for MapId {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Adler => MapId::Adler,
            MapArg::Soliton => MapId::Soliton,
            MapArg::Crystal => MapId::Crystal,
            MapArg::AdlerPerturbed => MapId::AdlerPerturbed,
            MapArg::Shift => MapId::Shift,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Debug, Args)]
struct Options {
    /// Map under test.
    #[arg(long, value_enum)]
    map: MapArg,
    /// Scalar backend.
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Number of random trials (default 100; 1 for chain runs).
    #[arg(long)]
    trials: Option<u64>,
    /// Float-mode tolerance (default 1e-9; 1e-8 for chain runs).
    #[arg(long)]
    tol: Option<f64>,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Soliton vector size N or crystal component count n.
    #[arg(long)]
    dim: Option<usize>,
    /// Chain length.
    #[arg(long, default_value_t = 4)]
    sites: usize,
    /// Transfer steps per chain trial.
    #[arg(long, default_value_t = 100)]
    steps: usize,
    /// Spectral parameters sampled per chain trial.
    #[arg(long, default_value_t = 3)]
    zeta_samples: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Options {
    fn config(&self, check: CheckKind) -> RunConfig {
        let map = MapId::from(self.map);
        let mut cfg = RunConfig::new(map, check)
            .mode(match self.mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Float => Mode::Float,
            })
            .seed(self.seed)
            .sites(self.sites)
            .steps(self.steps)
            .zeta_samples(self.zeta_samples);
        if let Some(t) = self.trials {
            cfg = cfg.trials(t);
        }
        if let Some(t) = self.tol {
            cfg = cfg.tolerance(t);
        }
        if let Some(d) = self.dim {
            cfg = cfg.dim(d);
        }
        cfg
    }
}

fn execute(opts: &Options, check: CheckKind) -> Result<i32, CliError> {
    let doc = run(&opts.config(check))?;
    let text = doc.to_pretty_string();
    match &opts.out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    let s = &doc.json["summary"];
    eprintln!(
        "{} {} ({}): {} passed, {} failed, {} skipped — {}",
        check,
        opts.map.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default(),
        doc.result()["backend"].as_str().unwrap_or(""),
        s["passed"],
        s["failed"],
        s["skipped"],
        s["status"].as_str().unwrap_or(""),
    );
    Ok(doc.exit_code)
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
        }
    };
    let result = match &cli.command {
        Command::Verify { check, opts } => execute(opts, (*check).into()),
        Command::Chain { action: ChainAction::Conserve { opts } } => execute(opts, CheckKind::ChainConserve),
    };
    result.unwrap_or_else(|e| {
        eprintln!("ybverify: {e}");
        e.exit_code()
    })
}
