//! Deterministic checkers. Each evaluates one explicit case and returns a
//! single-trial [`CheckReport`]; batches are built with [`CheckReport::merge`].

use crate::algebra::{equal_up_to_scalar_relative_to, real_max, Proportionality, Scalar, SquareMatrix};
use crate::error::MapError;
use crate::ybcore::{
    apply_r21, pair_residual, CheckCase, CheckKind, CheckReport, FieldValue, LaxMode, Outcome, YangBaxterMap,
};

/// Turns a map error into a skip (singular set) or a failure (anything else).
fn classify<F: Scalar>(stage: &str, err: MapError) -> Outcome<F> {
    let detail = format!("{stage}: {err}");
    if err.is_singularity() {
        Outcome::Skip { detail }
    } else {
        Outcome::Fail { residual: None, detail }
    }
}

macro_rules! attempt {
    ($stage:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return classify($stage, MapError::from(err)),
        }
    };
}

fn compare<F: Scalar>(residual: F::Real, tol: f64, what: &str) -> Outcome<F> {
    if F::residual_ok(&residual, tol) {
        Outcome::Pass { residual, factor: None }
    } else {
        let detail = format!("{what} differ (residual {})", F::render_real(&residual));
        Outcome::Fail { residual: Some(residual), detail }
    }
}

fn yang_baxter_outcome<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    (lambda, mu, nu): (&F, &F, &F),
    (x, y, z): (&M::Field, &M::Field, &M::Field),
    tol: f64,
) -> Outcome<F> {
    // R23 R13 R12: along the rear faces of the cube.
    let (x2, y1) = attempt!("left R12", map.apply(lambda, mu, x, y));
    let (x23, z1) = attempt!("left R13", map.apply(lambda, nu, &x2, z));
    let (y13, z12) = attempt!("left R23", map.apply(mu, nu, &y1, &z1));
    // R12 R13 R23: along the front faces.
    let (y3, z2) = attempt!("right R23", map.apply(mu, nu, y, z));
    let (x3, z12r) = attempt!("right R13", map.apply(lambda, nu, x, &z2));
    let (x23r, y13r) = attempt!("right R12", map.apply(lambda, mu, &x3, &y3));

    let rx = attempt!("compare x23", x23.residual(&x23r));
    let ry = attempt!("compare y13", y13.residual(&y13r));
    let rz = attempt!("compare z12", z12.residual(&z12r));
    let worst = [ry, rz].into_iter().fold(rx, |a, b| if b > a { b } else { a });
    compare(worst, tol, "(x23, y13, z12) from the two chains")
}

/// `R23(μ,ν) R13(λ,ν) R12(λ,μ) = R12(λ,μ) R13(λ,ν) R23(μ,ν)` at `(x, y, z)`.
pub fn check_yang_baxter<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    params: (&F, &F, &F),
    fields: (&M::Field, &M::Field, &M::Field),
    tol: f64,
) -> CheckReport<F> {
    let case = CheckCase::YangBaxter {
        lambda: params.0.clone(),
        mu: params.1.clone(),
        nu: params.2.clone(),
        x: fields.0.clone(),
        y: fields.1.clone(),
        z: fields.2.clone(),
    };
    let outcome = yang_baxter_outcome(map, params, fields, tol);
    CheckReport::from_outcome(CheckKind::YangBaxter.as_str(), outcome, case.to_json())
}

fn reversibility_outcome<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    x: &M::Field,
    y: &M::Field,
    tol: f64,
) -> Outcome<F> {
    let (xt, yt) = attempt!("R(λ,μ)", map.apply(lambda, mu, x, y));
    let (xb, yb) = attempt!("R21(μ,λ)", apply_r21(map, lambda, mu, &xt, &yt));
    let r = attempt!("compare", pair_residual((&xb, &yb), (x, y)));
    compare(r, tol, "R21(μ,λ) R(λ,μ) (x,y) and (x,y)")
}

/// `R21(μ, λ) R(λ, μ) = Id` at `(x, y)`.
pub fn check_reversibility<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    x: &M::Field,
    y: &M::Field,
    tol: f64,
) -> CheckReport<F> {
    let case = CheckCase::Reversibility { lambda: lambda.clone(), mu: mu.clone(), x: x.clone(), y: y.clone() };
    let outcome = reversibility_outcome(map, lambda, mu, x, y, tol);
    CheckReport::from_outcome(CheckKind::Reversibility.as_str(), outcome, case.to_json())
}

/// `n · max|a| · max|b|`, an entrywise bound on `|ab|`.
fn product_bound<F: Scalar>(a: &SquareMatrix<F>, b: &SquareMatrix<F>) -> F::Real {
    let largest = |m: &SquareMatrix<F>| m.argmax_modulus().map_or_else(F::zero, |(i, j)| m.get(i, j).clone());
    (F::from_int(a.dim() as i64) * largest(a) * largest(b)).modulus()
}

/// Compares `l1 l2` with `r1 r2`. Residuals are relative to the size of the
/// factors rather than of the products, so cancellation inside a product of
/// large factors does not count against the relation.
fn matrix_relation<F: Scalar>(
    (l1, l2): (&SquareMatrix<F>, &SquareMatrix<F>),
    (r1, r2): (&SquareMatrix<F>, &SquareMatrix<F>),
    mode: LaxMode,
    tol: f64,
) -> Outcome<F> {
    let lhs = attempt!("product", l1.try_mul(l2));
    let rhs = attempt!("product", r1.try_mul(r2));
    let scale = real_max::<F>(product_bound(l1, l2), product_bound(r1, r2));
    let verdict = attempt!("compare", equal_up_to_scalar_relative_to(&lhs, &rhs, &scale, tol));
    match (verdict, mode) {
        (Proportionality::Exact { residual }, _) => Outcome::Pass { residual, factor: Some(F::one()) },
        (Proportionality::Projective { factor, residual }, LaxMode::Projective) => {
            Outcome::Pass { residual, factor: Some(factor) }
        }
        (Proportionality::Projective { factor, .. }, LaxMode::Exact) => {
            let direct = attempt!("compare", lhs.try_sub(&rhs)).max_modulus();
            let residual = F::real_ratio(&direct, &scale);
            Outcome::Fail {
                detail: format!("sides agree only up to the factor {} in exact Lax mode", factor.render()),
                residual: Some(residual),
            }
        }
        (Proportionality::Unequal { residual }, _) => Outcome::Fail {
            detail: format!("sides are not proportional (residual {})", F::render_real(&residual)),
            residual: Some(residual),
        },
    }
}

fn lax_outcome<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    (lambda, mu, zeta): (&F, &F, &F),
    x: &M::Field,
    y: &M::Field,
    tol: f64,
) -> Outcome<F> {
    let (xt, yt) = attempt!("R(λ,μ)", map.apply(lambda, mu, x, y));
    let ax = attempt!("A(x,λ;ζ)", map.lax_a(x, lambda, zeta));
    let ay = attempt!("A(y,μ;ζ)", map.lax_a(y, mu, zeta));
    let ayt = attempt!("A(ỹ,μ;ζ)", map.lax_a(&yt, mu, zeta));
    let axt = attempt!("A(x̃,λ;ζ)", map.lax_a(&xt, lambda, zeta));
    matrix_relation((&ax, &ay), (&ayt, &axt), map.lax_mode(), tol)
}

/// `A(x,λ;ζ) A(y,μ;ζ) = A(ỹ,μ;ζ) A(x̃,λ;ζ)` where `(x̃, ỹ) = R(λ,μ)(x, y)`.
pub fn check_lax<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    zeta: &F,
    x: &M::Field,
    y: &M::Field,
    tol: f64,
) -> CheckReport<F> {
    let case =
        CheckCase::Lax { lambda: lambda.clone(), mu: mu.clone(), zeta: zeta.clone(), x: x.clone(), y: y.clone() };
    let outcome = lax_outcome(map, (lambda, mu, zeta), x, y, tol);
    CheckReport::from_outcome(CheckKind::Lax.as_str(), outcome, case.to_json())
}

fn lax_dual_outcome<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    (mu, nu, lambda): (&F, &F, &F),
    y: &M::Field,
    z: &M::Field,
    tol: f64,
) -> Outcome<F> {
    let (y3, z2) = attempt!("R(μ,ν)", map.apply(mu, nu, y, z));
    let bz = attempt!("B(z,ν;λ)", map.lax_b(z, nu, lambda));
    let by = attempt!("B(y,μ;λ)", map.lax_b(y, mu, lambda));
    let by3 = attempt!("B(y3,μ;λ)", map.lax_b(&y3, mu, lambda));
    let bz2 = attempt!("B(z2,ν;λ)", map.lax_b(&z2, nu, lambda));
    matrix_relation((&bz, &by), (&by3, &bz2), map.lax_mode(), tol)
}

/// `B(z,ν;λ) B(y,μ;λ) = B(y3,μ;λ) B(z2,ν;λ)` where `(y3, z2) = R(μ,ν)(y, z)`:
/// the Lax relation for `Bᵀ` with `λ` as the spectral parameter.
pub fn check_lax_dual<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    mu: &F,
    nu: &F,
    lambda: &F,
    y: &M::Field,
    z: &M::Field,
    tol: f64,
) -> CheckReport<F> {
    let case =
        CheckCase::LaxDual { mu: mu.clone(), nu: nu.clone(), lambda: lambda.clone(), y: y.clone(), z: z.clone() };
    let outcome = lax_dual_outcome(map, (mu, nu, lambda), y, z, tol);
    CheckReport::from_outcome(CheckKind::LaxDual.as_str(), outcome, case.to_json())
}

/// `x̃ = B(y,μ,λ)[x]`, `ỹ = A(x,λ,μ)[y]` for maps that expose their group
/// action.
pub fn check_map_form<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    x: &M::Field,
    y: &M::Field,
    tol: f64,
) -> CheckReport<F> {
    let case = CheckCase::MapForm { lambda: lambda.clone(), mu: mu.clone(), x: x.clone(), y: y.clone() };
    let outcome = match map.map_form_residual(lambda, mu, x, y) {
        Ok(r) => compare(r, tol, "map image and group action"),
        Err(e) => classify("map form", e),
    };
    CheckReport::from_outcome(CheckKind::ProjectiveForm.as_str(), outcome, case.to_json())
}

/// Dispatches an explicit case to its checker.
pub fn check_case<F: Scalar, M: YangBaxterMap<F>>(map: &M, case: &CheckCase<F, M::Field>, tol: f64) -> CheckReport<F> {
    match case {
        CheckCase::YangBaxter { lambda, mu, nu, x, y, z } => check_yang_baxter(map, (lambda, mu, nu), (x, y, z), tol),
        CheckCase::Reversibility { lambda, mu, x, y } => check_reversibility(map, lambda, mu, x, y, tol),
        CheckCase::Lax { lambda, mu, zeta, x, y } => check_lax(map, lambda, mu, zeta, x, y, tol),
        CheckCase::LaxDual { mu, nu, lambda, y, z } => check_lax_dual(map, mu, nu, lambda, y, z, tol),
        CheckCase::MapForm { lambda, mu, x, y } => check_map_form(map, lambda, mu, x, y, tol),
    }
}
