use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cli::CliError;
use crate::ybcore::CheckKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapId {
    Adler,
    Soliton,
    Crystal,
    /// Negative control: breaks the Yang-Baxter relation.
    AdlerPerturbed,
    /// Negative control: `(x, y) ↦ (y + 1, x)`, not reversible.
    Shift,
}

impl MapId {
    pub const ALL: [MapId; 5] = [MapId::Adler, MapId::Soliton, MapId::Crystal, MapId::AdlerPerturbed, MapId::Shift];

    pub fn as_str(self) -> &'static str {
        match self {
            MapId::Adler => "adler",
            MapId::Soliton => "soliton",
            MapId::Crystal => "crystal",
            MapId::AdlerPerturbed => "adler-perturbed",
            MapId::Shift => "shift",
        }
    }

    /// Default `--dim`: soliton vector size N, crystal component count n.
    pub fn default_dim(self) -> usize {
        match self {
            MapId::Soliton => 2,
            MapId::Crystal => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        MapId::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| CliError::Config(format!("unknown map {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(CliError::Config(format!("unknown mode {s:?}"))),
        }
    }
}

/// Float-mode tolerance for single-trial checks.
pub const DEFAULT_CHECK_TOL: f64 = 1e-9;
/// Float-mode tolerance for invariant drift over a chain run.
pub const DEFAULT_CHAIN_TOL: f64 = 1e-8;

/// Everything that determines a run. Identical configs produce identical
/// reports apart from the wall-time field.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub map: MapId,
    pub check: CheckKind,
    pub mode: Mode,
    pub trials: u64,
    pub tolerance: f64,
    pub seed: u64,
    pub dim: usize,
    pub sites: usize,
    pub steps: usize,
    pub zeta_samples: usize,
}

impl RunConfig {
    pub fn new(map: MapId, check: CheckKind) -> Self {
        let chain = check == CheckKind::ChainConserve;
        Self {
            map,
            check,
            mode: Mode::Exact,
            trials: if chain { 1 } else { 100 },
            tolerance: if chain { DEFAULT_CHAIN_TOL } else { DEFAULT_CHECK_TOL },
            seed: 0,
            dim: map.default_dim(),
            sites: 4,
            steps: 100,
            zeta_samples: 3,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }

    pub fn sites(mut self, sites: usize) -> Self {
        self.sites = sites;
        self
    }

    pub fn steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn zeta_samples(mut self, k: usize) -> Self {
        self.zeta_samples = k;
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.trials == 0 {
            return Err(CliError::Config("--trials must be positive".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Config("--tol must be a positive real".into()));
        }
        if self.dim == 0 {
            return Err(CliError::Config("--dim must be at least 1".into()));
        }
        if self.check == CheckKind::ChainConserve {
            if self.sites == 0 {
                return Err(CliError::Config("--sites must be at least 1".into()));
            }
            if self.zeta_samples == 0 {
                return Err(CliError::Config("--zeta-samples must be at least 1".into()));
            }
        }
        if self.check == CheckKind::ProjectiveForm && !matches!(self.map, MapId::Adler | MapId::Crystal) {
            return Err(CliError::Config(format!(
                "projective-form is defined for adler and crystal, not {}",
                self.map
            )));
        }
        Ok(())
    }
}

impl Serialize for CheckKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}
