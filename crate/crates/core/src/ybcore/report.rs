use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Scalar;

/// Witness lists are truncated to this many entries; the counters are not.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Failure,
    Skip,
}

/// A complete, re-runnable input together with what went wrong on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub case: Value,
    pub detail: String,
}

/// Result of a single trial.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome<F: Scalar> {
    Pass { residual: F::Real, factor: Option<F> },
    Fail { residual: Option<F::Real>, detail: String },
    Skip { detail: String },
}

/// Aggregated result of one or more trials of a check.
///
/// `attempted` counts evaluated trials; skipped trials are counted
/// separately and never contribute to `passed`.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport<F: Scalar> {
    pub check: String,
    pub attempted: u64,
    pub passed: u64,
    pub skipped: u64,
    pub worst_residual: F::Real,
    /// Trials that passed only up to a scalar factor `c ≠ 1`.
    pub non_unit_factors: u64,
    pub witnesses: Vec<Witness>,
    pub seed: Option<u64>,
}

impl<F: Scalar> CheckReport<F> {
    pub fn empty(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            attempted: 0,
            passed: 0,
            skipped: 0,
            worst_residual: F::real_zero(),
            non_unit_factors: 0,
            witnesses: Vec::new(),
            seed: None,
        }
    }

    pub fn from_outcome(check: impl Into<String>, outcome: Outcome<F>, case: Value) -> Self {
        let mut r = Self::empty(check);
        r.record(outcome, case);
        r
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn record(&mut self, outcome: Outcome<F>, case: Value) {
        match outcome {
            Outcome::Pass { residual, factor } => {
                self.attempted += 1;
                self.passed += 1;
                if factor.is_some_and(|c| c != F::one()) {
                    self.non_unit_factors += 1;
                }
                self.bump(residual);
            }
            Outcome::Fail { residual, detail } => {
                self.attempted += 1;
                if let Some(r) = residual {
                    self.bump(r);
                }
                self.push_witness(Witness { kind: WitnessKind::Failure, case, detail });
            }
            Outcome::Skip { detail } => {
                self.skipped += 1;
                self.push_witness(Witness { kind: WitnessKind::Skip, case, detail });
            }
        }
    }

    fn bump(&mut self, r: F::Real) {
        if r > self.worst_residual {
            self.worst_residual = r;
        }
    }

    fn push_witness(&mut self, w: Witness) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Associative merge: counters add, residuals take the max, witnesses
    /// concatenate in order.
    pub fn merge(mut self, other: Self) -> Self {
        self.attempted += other.attempted;
        self.passed += other.passed;
        self.skipped += other.skipped;
        self.non_unit_factors += other.non_unit_factors;
        self.bump(other.worst_residual);
        for w in other.witnesses {
            self.push_witness(w);
        }
        if self.seed.is_none() {
            self.seed = other.seed;
        }
        self
    }

    pub fn failed(&self) -> u64 {
        self.attempted - self.passed
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.attempted
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.kind == WitnessKind::Failure)
    }

    /// Fraction of all trials that were skipped.
    pub fn skip_fraction(&self) -> f64 {
        let total = self.attempted + self.skipped;
        if total == 0 {
            0.0
        } else {
            self.skipped as f64 / total as f64
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "attempted": self.attempted,
            "passed": self.passed,
            "failed": self.failed(),
            "skipped": self.skipped,
            "worst_residual": F::render_real(&self.worst_residual),
            "non_unit_factors": self.non_unit_factors,
            "seed": self.seed,
            "witnesses": self.witnesses,
        })
    }
}
