use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::algebra::{Backend, Complex, Rational, Scalar, SpectralInvariants};
use crate::chain::{ChainState, Site, TRANSFER_DYNAMICS};
use crate::cli::generate::{
    generate_chain, generate_instance, generate_zetas, trial_rng, Sample, SiteSource, CHAIN_CONDITION_MARGIN,
    CONDITION_MARGIN,
};
use crate::cli::{CliError, MapId, Mode, RunConfig};
use crate::maps::{AdlerMap, CrystalMap, SolitonMap};
use crate::ybcore::controls::{PerturbedAdler, Shift};
use crate::ybcore::{
    check_case, scalars_from_json, scalars_to_json, CheckCase, CheckKind, CheckReport, FieldValue, Outcome,
    YangBaxterMap,
};

pub const REPORT_VERSION: &str = concat!("yb-maps ", env!("CARGO_PKG_VERSION"));

/// Largest tolerated fraction of skipped trials before a run is declared
/// vacuous.
pub const MAX_SKIP_FRACTION: f64 = 0.05;

/// Exit codes: all trials passed, some trial failed, configuration or
/// generation problem.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Chain runs compare integrals every this many transfer steps and after
/// the last one. Exact-mode heights grow quadratically with the step count,
/// so evaluating monodromies at every step would dominate the run.
pub const CHECKPOINT_INTERVAL: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub json: Value,
    pub exit_code: i32,
}

impl ReportDocument {
    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("report serializes")
    }

    /// The report with the wall-time field removed, for determinism checks.
    pub fn without_timing(&self) -> Value {
        let mut v = self.json.clone();
        if let Some(summary) = v.get_mut("summary").and_then(Value::as_object_mut) {
            summary.remove("wall_time_seconds");
        }
        v
    }

    pub fn result(&self) -> &Value {
        &self.json["results"][0]
    }
}

/// A finished check section plus the counters the summary needs.
struct Section {
    result: Value,
    attempted: u64,
    passed: u64,
    skipped: u64,
}

impl Section {
    fn from_report<F: Scalar>(report: &CheckReport<F>, extra: Map<String, Value>) -> Self {
        let mut result = report.to_json();
        let obj = result.as_object_mut().expect("report is an object");
        obj.insert("backend".into(), json!(F::BACKEND.as_str()));
        obj.extend(extra);
        Section { result, attempted: report.attempted, passed: report.passed, skipped: report.skipped }
    }
}

/// Executes the configured check over `trials` generated instances.
pub fn run(cfg: &RunConfig) -> Result<ReportDocument, CliError> {
    cfg.validate()?;
    let start = Instant::now();
    let section = match cfg.mode {
        Mode::Exact => run_backend::<Rational>(cfg)?,
        Mode::Float => run_backend::<Complex>(cfg)?,
    };
    let total = section.attempted + section.skipped;
    let skip_fraction = if total == 0 { 0.0 } else { section.skipped as f64 / total as f64 };
    let (status, exit_code) = if skip_fraction > MAX_SKIP_FRACTION {
        ("error: skip budget exceeded", EXIT_ERROR)
    } else if section.passed == section.attempted {
        ("pass", EXIT_PASS)
    } else {
        ("fail", EXIT_FAIL)
    };
    let json = json!({
        "version": REPORT_VERSION,
        "config": cfg,
        "results": [section.result],
        "summary": {
            "status": status,
            "exit_code": exit_code,
            "trials": cfg.trials,
            "attempted": section.attempted,
            "passed": section.passed,
            "failed": section.attempted - section.passed,
            "skipped": section.skipped,
            "wall_time_seconds": start.elapsed().as_secs_f64(),
        },
    });
    Ok(ReportDocument { json, exit_code })
}

fn run_backend<F: Sample>(cfg: &RunConfig) -> Result<Section, CliError> {
    match cfg.map {
        MapId::Adler => run_map::<F, _>(&AdlerMap, cfg),
        MapId::Soliton => run_map::<F, _>(&SolitonMap, cfg),
        MapId::Crystal => run_map::<F, _>(&CrystalMap, cfg),
        MapId::AdlerPerturbed => run_map::<F, _>(&PerturbedAdler, cfg),
        MapId::Shift => run_map::<F, _>(&Shift, cfg),
    }
}

fn run_map<F, M>(map: &M, cfg: &RunConfig) -> Result<Section, CliError>
where
    F: Sample,
    M: SiteSource<F> + SiteSource<Rational>,
{
    let mut extra = Map::new();
    extra.insert("map".into(), json!(YangBaxterMap::<F>::name(map)));
    let trials: Vec<Result<CheckReport<F>, CliError>> = if cfg.check == CheckKind::ChainConserve {
        extra.insert("transfer_dynamics".into(), json!(TRANSFER_DYNAMICS));
        extra.insert("sites".into(), json!(cfg.sites));
        extra.insert("steps".into(), json!(cfg.steps));
        extra.insert("checkpoint_interval".into(), json!(CHECKPOINT_INTERVAL));
        if F::BACKEND != Backend::ExactRational {
            extra.insert("integrals_evaluation".into(), json!("exact-lift"));
            extra.insert("conditioning_margin".into(), json!(CHAIN_CONDITION_MARGIN));
        }
        (0..cfg.trials).into_par_iter().map(|t| chain_trial::<F, M>(map, cfg, t)).collect()
    } else {
        if F::BACKEND != Backend::ExactRational {
            extra.insert("conditioning_margin".into(), json!(CONDITION_MARGIN));
        }
        (0..cfg.trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(cfg.seed, t);
                let case = generate_instance::<F, M, _>(map, cfg.check, &mut rng, cfg.dim)?;
                Ok(check_case(map, &case, cfg.tolerance))
            })
            .collect()
    };
    let mut report = CheckReport::<F>::empty(cfg.check.as_str()).with_seed(cfg.seed);
    for t in trials {
        report = report.merge(t?);
    }
    Ok(Section::from_report(&report, extra))
}

/// Explicit inputs of a chain-conservation trial.
pub struct ChainCase<F: Sample, M: SiteSource<F>> {
    pub chain: ChainState<F, M>,
    pub zetas: Vec<F>,
    pub steps: usize,
}

/// Conserved-quantity fingerprint of one chain state: the integrals at every
/// ζ-sample, evaluated either in the run's backend or exactly.
enum Fingerprint<F: Scalar> {
    Native(Vec<SpectralInvariants<F>>),
    Lifted(Vec<SpectralInvariants<Rational>>),
}

impl<F: Scalar> Fingerprint<F> {
    fn drift(&self, other: &Self) -> Result<F::Real, String> {
        fn worst<G: Scalar>(a: &[SpectralInvariants<G>], b: &[SpectralInvariants<G>]) -> Result<G::Real, String> {
            a.iter().zip(b).try_fold(G::real_zero(), |acc, (a, b)| {
                let d = a.drift(b).map_err(|e| e.to_string())?;
                Ok(if d > acc { d } else { acc })
            })
        }
        match (self, other) {
            (Fingerprint::Native(a), Fingerprint::Native(b)) => worst(a, b),
            (Fingerprint::Lifted(a), Fingerprint::Lifted(b)) => {
                worst(a, b).map(|d| F::real_from_f64(Rational::real_to_f64(&d)))
            }
            _ => Err("fingerprints evaluated in different backends".into()),
        }
    }
}

fn collect_integrals<G: Scalar, M: YangBaxterMap<G>>(
    chain: &ChainState<G, M>,
    zetas: &[G],
) -> Result<Vec<SpectralInvariants<G>>, String> {
    chain.integrals(zetas).into_iter().enumerate().map(|(k, r)| r.map_err(|e| format!("ζ #{k}: {e}"))).collect()
}

impl<F, M> ChainCase<F, M>
where
    F: Sample,
    M: SiteSource<F> + SiteSource<Rational>,
{
    pub fn to_json(&self) -> Value {
        json!({
            "check": CheckKind::ChainConserve.as_str(),
            "field_kind": <<M as YangBaxterMap<F>>::Field as FieldValue<F>>::KIND,
            "steps": self.steps,
            "zetas": scalars_to_json(&self.zetas),
            "sites": self.chain.to_json(),
        })
    }

    pub fn from_json(map: &M, v: &Value) -> Result<Self, CliError> {
        let bad = |m: &str| CliError::Config(format!("malformed chain witness: {m}"));
        let steps = v.get("steps").and_then(Value::as_u64).ok_or_else(|| bad("steps"))? as usize;
        let zetas = scalars_from_json(v.get("zetas").unwrap_or(&Value::Null)).map_err(|e| bad(&e.to_string()))?;
        let sites = v
            .get("sites")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("sites"))?
            .iter()
            .map(|s| {
                let field = <M as YangBaxterMap<F>>::Field::from_json(s.get("field").unwrap_or(&Value::Null))
                    .map_err(|e| bad(&e.to_string()))?;
                let param = s
                    .get("param")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("param"))
                    .and_then(|p| F::parse(p).map_err(|e| bad(&e.to_string())))?;
                Ok(Site { field, param })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let chain = ChainState::new(map.clone(), sites).map_err(|e| bad(&e.to_string()))?;
        Ok(Self { chain, zetas, steps })
    }

    /// Integrals of `state`. Float states with real entries are converted to
    /// exact rationals first (each printed value is read back exactly), so
    /// the fingerprint measures the float dynamics rather than the rounding
    /// of long matrix products, whose entries can be many orders of
    /// magnitude larger than their trace and determinant.
    fn fingerprint(&self, state: &ChainState<F, M>) -> Result<Fingerprint<F>, String> {
        if F::BACKEND != Backend::ExactRational {
            let snapshot = ChainCase { chain: state.clone(), zetas: self.zetas.clone(), steps: 0 };
            if let Ok(lifted) = ChainCase::<Rational, M>::from_json(self.chain.map(), &snapshot.to_json()) {
                return collect_integrals(&lifted.chain, &lifted.zetas).map(Fingerprint::Lifted);
            }
        }
        collect_integrals(state, &self.zetas).map(Fingerprint::Native)
    }

    /// Evolves the chain and measures the worst relative drift of the
    /// integrals against their initial values at every checkpoint; the
    /// parameter multiset is checked after every step.
    pub fn evaluate(&self, tol: f64) -> Outcome<F> {
        let initial = match self.fingerprint(&self.chain) {
            Ok(v) => v,
            Err(e) => return Outcome::Skip { detail: format!("initial integrals, {e}") },
        };
        let multiset = |c: &ChainState<F, M>| {
            let mut p: Vec<String> = c.params().iter().map(Scalar::render).collect();
            p.sort();
            p
        };
        let params0 = multiset(&self.chain);
        let mut state = self.chain.clone();
        let mut worst = F::real_zero();
        for step in 1..=self.steps {
            state = match state.transfer_step() {
                Ok(s) => s,
                Err(e) => return Outcome::Skip { detail: format!("step {step}: {e}") },
            };
            if multiset(&state) != params0 {
                return Outcome::Fail { residual: None, detail: format!("parameter multiset changed at step {step}") };
            }
            if step % CHECKPOINT_INTERVAL != 0 && step != self.steps {
                continue;
            }
            let current = match self.fingerprint(&state) {
                Ok(c) => c,
                Err(e) => return Outcome::Skip { detail: format!("step {step}, {e}") },
            };
            match initial.drift(&current) {
                Ok(d) if d > worst => worst = d,
                Ok(_) => {}
                Err(e) => return Outcome::Fail { residual: None, detail: e },
            }
        }
        if F::residual_ok(&worst, tol) {
            Outcome::Pass { residual: worst, factor: None }
        } else {
            Outcome::Fail { detail: format!("integrals drifted by {}", F::render_real(&worst)), residual: Some(worst) }
        }
    }
}

fn chain_trial<F, M>(map: &M, cfg: &RunConfig, trial: u64) -> Result<CheckReport<F>, CliError>
where
    F: Sample,
    M: SiteSource<F> + SiteSource<Rational>,
{
    let mut rng = trial_rng(cfg.seed, trial);
    let chain = generate_chain::<F, M, _>(map, &mut rng, cfg.dim, cfg.sites, cfg.steps)?;
    let zetas = generate_zetas(&chain, &mut rng, cfg.zeta_samples)?;
    let case = ChainCase { chain, zetas, steps: cfg.steps };
    let outcome = case.evaluate(cfg.tolerance);
    Ok(CheckReport::from_outcome(CheckKind::ChainConserve.as_str(), outcome, case.to_json()))
}

/// Re-runs the case stored in a witness and returns the fresh report.
pub fn replay(map: MapId, mode: Mode, case: &Value, tol: f64) -> Result<Value, CliError> {
    match mode {
        Mode::Exact => replay_backend::<Rational>(map, case, tol),
        Mode::Float => replay_backend::<Complex>(map, case, tol),
    }
}

fn replay_backend<F: Sample>(map: MapId, case: &Value, tol: f64) -> Result<Value, CliError> {
    match map {
        MapId::Adler => replay_map::<F, _>(&AdlerMap, case, tol),
        MapId::Soliton => replay_map::<F, _>(&SolitonMap, case, tol),
        MapId::Crystal => replay_map::<F, _>(&CrystalMap, case, tol),
        MapId::AdlerPerturbed => replay_map::<F, _>(&PerturbedAdler, case, tol),
        MapId::Shift => replay_map::<F, _>(&Shift, case, tol),
    }
}

fn replay_map<F, M>(map: &M, case: &Value, tol: f64) -> Result<Value, CliError>
where
    F: Sample,
    M: SiteSource<F> + SiteSource<Rational>,
{
    let report = if case.get("check").and_then(Value::as_str) == Some(CheckKind::ChainConserve.as_str()) {
        let chain_case = ChainCase::<F, M>::from_json(map, case)?;
        CheckReport::from_outcome(CheckKind::ChainConserve.as_str(), chain_case.evaluate(tol), case.clone())
    } else {
        let parsed = CheckCase::<F, <M as YangBaxterMap<F>>::Field>::from_json(case)
            .map_err(|e| CliError::Config(e.to_string()))?;
        check_case(map, &parsed, tol)
    };
    Ok(report.to_json())
}
