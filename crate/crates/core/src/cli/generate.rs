//! Seeded random instances.
//!
//! Exact mode draws rationals `p/q` with `|p| ≤ 100`, `1 ≤ q ≤ 100`; float
//! mode draws reals uniformly from `[-10, 10]`. Configurations on a map's
//! singular set are rejected and redrawn, at most [`REDRAW_CAP`] times.
//!
//! Float draws are additionally screened for conditioning: an instance is
//! redrawn when any map application its check performs lands within a
//! relative distance [`CONDITION_MARGIN`] of a pole. Near a pole the maps
//! amplify rounding error by the inverse of that distance, so a relative
//! residual bound is only meaningful away from it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Backend, Complex, ProjectivePoint, Rational, Scalar};
use crate::chain::{ChainState, Site};
use crate::cli::CliError;
use crate::maps::{crystal_p, AdlerMap, CrystalMap, CrystalVector, RankOnePair, SolitonMap};
use crate::ybcore::controls::{PerturbedAdler, Shift};
use crate::ybcore::{CheckCase, CheckKind, YangBaxterMap};

pub const REDRAW_CAP: usize = 1000;

/// Smallest accepted relative pole distance for float draws.
pub const CONDITION_MARGIN: f64 = 1e-3;

/// The same for every exchange along a float chain trajectory, where
/// rounding errors accumulate over many steps.
pub const CHAIN_CONDITION_MARGIN: f64 = 1e-3;

/// Independent stream for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Scalars that can be drawn at random.
pub trait Sample: Scalar {
    fn draw<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn draw_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v = Self::draw(rng);
            if !v.is_negligible() {
                return v;
            }
        }
    }
}

impl Sample for Rational {
    fn draw<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Rational::from_ratio(rng.random_range(-100..=100), rng.random_range(1..=100))
    }
}

impl Sample for Complex {
    fn draw<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex::new(rng.random_range(-10.0..=10.0), 0.0)
    }
}

/// Maps that can produce random sites `(field, parameter)`.
pub trait SiteSource<F: Sample>: YangBaxterMap<F> {
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, dim: usize) -> (Self::Field, F);

    /// Relative distance of `R(λ,μ)(x, y)` from the map's singular set,
    /// scale-free and at most one. Maps without ill-conditioned regions
    /// keep the default.
    fn pole_distance(&self, _lambda: &F, _mu: &F, _x: &Self::Field, _y: &Self::Field) -> f64 {
        1.0
    }
}

fn modulus_f64<F: Scalar>(v: &F) -> f64 {
    F::real_to_f64(&v.modulus())
}

fn max_modulus_f64<F: Scalar>(v: &[F]) -> f64 {
    v.iter().map(modulus_f64).fold(0.0, f64::max)
}

fn euclidean_f64<F: Scalar>(v: &[F]) -> f64 {
    v.iter().map(|c| modulus_f64(c).powi(2)).sum::<f64>().sqrt()
}

/// `|a − b| / max(|a|, |b|)`, one when both vanish.
fn relative_gap<F: Scalar>(a: &F, b: &F) -> f64 {
    let scale = modulus_f64(a).max(modulus_f64(b));
    if scale == 0.0 {
        1.0
    } else {
        modulus_f64(&(a.clone() - b.clone())) / scale
    }
}

/// `|⟨ξ, η⟩| / (‖ξ‖ ‖η‖)`: the cosine of the angle between `ξ` and `η`.
fn pairing_cosine<F: Scalar>(p: &RankOnePair<F>) -> f64 {
    let norm = euclidean_f64(p.xi()) * euclidean_f64(p.eta());
    if norm == 0.0 {
        0.0
    } else {
        modulus_f64(&p.pairing()) / norm
    }
}

fn adler_site<F: Sample, R: Rng + ?Sized>(rng: &mut R) -> (ProjectivePoint<F>, F) {
    (ProjectivePoint::affine(F::draw(rng)), F::draw(rng))
}

impl<F: Sample> SiteSource<F> for AdlerMap {
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, _dim: usize) -> (ProjectivePoint<F>, F) {
        adler_site(rng)
    }

    /// `|x₀y₁ + y₀x₁| / (|x| |y|)`, the homogeneous form of `|x + y|`.
    fn pole_distance(&self, _lambda: &F, _mu: &F, x: &ProjectivePoint<F>, y: &ProjectivePoint<F>) -> f64 {
        let (a, b) = (x.coords(), y.coords());
        let s = a[0].clone() * b[1].clone() + b[0].clone() * a[1].clone();
        let scale = max_modulus_f64(a) * max_modulus_f64(b);
        if scale == 0.0 {
            0.0
        } else {
            modulus_f64(&s) / scale
        }
    }
}

impl<F: Sample> SiteSource<F> for PerturbedAdler {
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, _dim: usize) -> (ProjectivePoint<F>, F) {
        adler_site(rng)
    }
}

impl<F: Sample> SiteSource<F> for Shift {
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, _dim: usize) -> (ProjectivePoint<F>, F) {
        adler_site(rng)
    }
}

impl<F: Sample> SiteSource<F> for SolitonMap {
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, dim: usize) -> (RankOnePair<F>, F) {
        loop {
            let xi = (0..dim).map(|_| F::draw(rng)).collect();
            let eta = (0..dim).map(|_| F::draw(rng)).collect();
            if let Ok(p) = RankOnePair::new(xi, eta) {
                return (p, F::draw_nonzero(rng));
            }
        }
    }

    /// The smallest of the velocity gap and the pairing cosines of the
    /// inputs and outputs.
    fn pole_distance(&self, lambda: &F, mu: &F, x: &RankOnePair<F>, y: &RankOnePair<F>) -> f64 {
        let Ok((xt, yt)) = self.apply(lambda, mu, x, y) else { return 0.0 };
        [x, y, &xt, &yt].into_iter().map(pairing_cosine).fold(relative_gap(lambda, mu), f64::min)
    }
}

impl<F: Sample> SiteSource<F> for CrystalMap {
    /// The parameter is the level-set label `Π x_k`.
    fn draw_site<R: Rng + ?Sized>(&self, rng: &mut R, dim: usize) -> (CrystalVector<F>, F) {
        let v = CrystalVector::new((0..dim).map(|_| F::draw_nonzero(rng)).collect()).expect("components are nonzero");
        let label = v.product();
        (v, label)
    }

    /// The smallest `|P_j|` relative to the sum of the moduli of its terms,
    /// i.e. how much cancellation the denominators suffer.
    fn pole_distance(&self, _lambda: &F, _mu: &F, x: &CrystalVector<F>, y: &CrystalVector<F>) -> f64 {
        let n = x.dim();
        let ax: Vec<f64> = x.comps().iter().map(modulus_f64).collect();
        let ay: Vec<f64> = y.comps().iter().map(modulus_f64).collect();
        let at = |v: &[f64], k: usize| v[(k - 1) % n];
        (1..=n)
            .map(|j| {
                let Ok(p) = crystal_p(j, x, y) else { return 0.0 };
                let terms: f64 = (1..=n)
                    .map(|a| {
                        let head: f64 = (1..a).map(|k| at(&ax, j + k)).product();
                        let tail: f64 = (a + 1..=n).map(|k| at(&ay, j + k)).product();
                        head * tail
                    })
                    .sum();
                if terms == 0.0 {
                    0.0
                } else {
                    modulus_f64(&p) / terms
                }
            })
            .fold(1.0, f64::min)
    }
}

fn exhausted(map: &str, kind: CheckKind) -> CliError {
    CliError::Generation(format!("no non-singular {kind} instance for {map} after {REDRAW_CAP} draws"))
}

/// `R(λ,μ)(x, y)` if it is defined and, for float backends, conditioned.
fn screened_apply<F: Sample, M: SiteSource<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    x: &M::Field,
    y: &M::Field,
) -> Option<(M::Field, M::Field)> {
    let out = map.apply(lambda, mu, x, y).ok()?;
    let conditioned = F::BACKEND == Backend::ExactRational || map.pole_distance(lambda, mu, x, y) >= CONDITION_MARGIN;
    conditioned.then_some(out)
}

/// Whether every application on both sides of the Yang–Baxter relation is
/// screened; only used for float backends.
fn yang_baxter_conditioned<F: Sample, M: SiteSource<F>>(
    map: &M,
    (lambda, mu, nu): (&F, &F, &F),
    (x, y, z): (&M::Field, &M::Field, &M::Field),
) -> bool {
    let left = || {
        let (x2, y1) = screened_apply(map, lambda, mu, x, y)?;
        let (_, z1) = screened_apply(map, lambda, nu, &x2, z)?;
        screened_apply(map, mu, nu, &y1, &z1)
    };
    let right = || {
        let (y3, z2) = screened_apply(map, mu, nu, y, z)?;
        let (x3, _) = screened_apply(map, lambda, nu, x, &z2)?;
        screened_apply(map, lambda, mu, &x3, &y3)
    };
    left().is_some() && right().is_some()
}

/// Draws one non-singular case for `kind`. In exact mode only the leading
/// map applications and Lax evaluations are screened; intermediate
/// singularities are left for the checker to report as skips. Float draws
/// also screen every application the check performs for conditioning.
pub fn generate_instance<F, M, R>(
    map: &M,
    kind: CheckKind,
    rng: &mut R,
    dim: usize,
) -> Result<CheckCase<F, M::Field>, CliError>
where
    F: Sample,
    M: SiteSource<F>,
    R: Rng + ?Sized,
{
    let float = F::BACKEND == Backend::ComplexFloat;
    for _ in 0..REDRAW_CAP {
        let (x, lambda) = map.draw_site(rng, dim);
        let (y, mu) = map.draw_site(rng, dim);
        let image = screened_apply(map, &lambda, &mu, &x, &y);
        let pair_ok = image.is_some();
        match kind {
            CheckKind::YangBaxter => {
                let (z, nu) = map.draw_site(rng, dim);
                let ok = if float {
                    yang_baxter_conditioned(map, (&lambda, &mu, &nu), (&x, &y, &z))
                } else {
                    pair_ok && map.apply(&mu, &nu, &y, &z).is_ok()
                };
                if ok {
                    return Ok(CheckCase::YangBaxter { lambda, mu, nu, x, y, z });
                }
            }
            CheckKind::Reversibility => {
                // R21(μ,λ)(x̃, ỹ) applies R(μ,λ) to (ỹ, x̃).
                let back_ok = !float
                    || image.as_ref().is_some_and(|(xt, yt)| screened_apply(map, &mu, &lambda, yt, xt).is_some());
                if pair_ok && back_ok {
                    return Ok(CheckCase::Reversibility { lambda, mu, x, y });
                }
            }
            CheckKind::ProjectiveForm => {
                if pair_ok {
                    return Ok(CheckCase::MapForm { lambda, mu, x, y });
                }
            }
            CheckKind::Lax => {
                let zeta = F::draw(rng);
                let lax_ok = map.lax_a(&x, &lambda, &zeta).is_ok_and(|m| m.is_invertible())
                    && map.lax_a(&y, &mu, &zeta).is_ok_and(|m| m.is_invertible());
                if pair_ok && lax_ok {
                    return Ok(CheckCase::Lax { lambda, mu, zeta, x, y });
                }
            }
            CheckKind::LaxDual => {
                // Reuse the two sites as (y, μ), (z, ν) and draw λ as spectral parameter.
                let spectral = F::draw(rng);
                let lax_ok = map.lax_b(&x, &lambda, &spectral).is_ok_and(|m| m.is_invertible())
                    && map.lax_b(&y, &mu, &spectral).is_ok_and(|m| m.is_invertible());
                if pair_ok && lax_ok {
                    return Ok(CheckCase::LaxDual { mu: lambda, nu: mu, lambda: spectral, y: x, z: y });
                }
            }
            CheckKind::ChainConserve => return Err(CliError::Config("chain runs use generate_chain".into())),
        }
    }
    Err(exhausted(map.name(), kind))
}

/// Draws `sites` chain sites whose first transfer step is non-singular.
/// Float chains are evolved for `steps` steps and redrawn if any exchange
/// along the way is singular or lands within [`CHAIN_CONDITION_MARGIN`] of
/// a pole.
pub fn generate_chain<F, M, R>(
    map: &M,
    rng: &mut R,
    dim: usize,
    sites: usize,
    steps: usize,
) -> Result<ChainState<F, M>, CliError>
where
    F: Sample,
    M: SiteSource<F>,
    R: Rng + ?Sized,
{
    let horizon = if F::BACKEND == Backend::ComplexFloat { steps.max(1) } else { 1 };
    for _ in 0..REDRAW_CAP {
        let pairs = (0..sites).map(|_| map.draw_site(rng, dim)).collect();
        let chain = ChainState::from_pairs(map.clone(), pairs).map_err(|e| CliError::Config(e.to_string()))?;
        if trajectory_conditioned(&chain, horizon) {
            return Ok(chain);
        }
    }
    Err(exhausted(map.name(), CheckKind::ChainConserve))
}

fn trajectory_conditioned<F: Sample, M: SiteSource<F>>(chain: &ChainState<F, M>, steps: usize) -> bool {
    let map = chain.map();
    let mut state = chain.clone();
    for _ in 0..steps {
        let mut closest = 1.0f64;
        let visit = |a: &Site<F, M::Field>, b: &Site<F, M::Field>| {
            if F::BACKEND == Backend::ComplexFloat {
                closest = closest.min(map.pole_distance(&a.param, &b.param, &a.field, &b.field));
            }
        };
        match state.transfer_step_visiting(visit) {
            Ok(next) if closest >= CHAIN_CONDITION_MARGIN => state = next,
            _ => return false,
        }
    }
    true
}

/// `count` spectral parameters at which the chain's monodromy and its
/// invariants are defined.
pub fn generate_zetas<F, M, R>(chain: &ChainState<F, M>, rng: &mut R, count: usize) -> Result<Vec<F>, CliError>
where
    F: Sample,
    M: SiteSource<F>,
    R: Rng + ?Sized,
{
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        if draws > REDRAW_CAP {
            return Err(exhausted(chain.map().name(), CheckKind::ChainConserve));
        }
        let z = F::draw(rng);
        if out.contains(&z) {
            continue;
        }
        if chain.integrals(std::slice::from_ref(&z)).iter().all(Result::is_ok) {
            out.push(z);
        }
    }
    Ok(out)
}
