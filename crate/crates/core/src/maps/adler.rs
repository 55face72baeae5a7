//! Adler's map on `CP^1`:
//!
//! ```text
//! x̃ = y − (λ − μ)/(x + y),    ỹ = x − (μ − λ)/(x + y)
//! ```
//!
//! It has the group-action form `x̃ = A(y, μ, λ)[x]`, `ỹ = A(x, λ, μ)[y]`
//! with Möbius transformations by
//!
//! ```text
//! A(x, λ, ζ) = | x   x² + λ − ζ |
//!              | 1   x          |
//! ```
//!
//! and `B = A`, reflecting `R_21 = R`.

use serde_json::Value;

use crate::algebra::{mobius_apply, ProjectivePoint, Scalar, SquareMatrix};
use crate::error::MapError;
use crate::ybcore::{scalars_from_json, scalars_to_json, CaseParseError, FieldValue, LaxMode, YangBaxterMap};

impl<F: Scalar> FieldValue<F> for ProjectivePoint<F> {
    const KIND: &'static str = "projective-point";

    fn residual(&self, other: &Self) -> Result<F::Real, crate::error::AlgebraError> {
        ProjectivePoint::residual(self, other)
    }

    /// Primitive integer coordinates in the exact backend; `(x : 1)` or
    /// `(1 : 0)` on `CP^1` otherwise.
    fn canonical(&self) -> Self {
        if let Some(coords) = F::primitive_representative(self.coords()) {
            return ProjectivePoint::new(coords).expect("nonzero point");
        }
        if self.dim() == 2 {
            cp1_normalized(self)
        } else {
            ProjectivePoint::canonical(self)
        }
    }

    fn to_json(&self) -> Value {
        scalars_to_json(self.coords())
    }

    fn from_json(v: &Value) -> Result<Self, CaseParseError> {
        ProjectivePoint::new(scalars_from_json(v)?).map_err(|e| CaseParseError(e.to_string()))
    }
}

/// `(x : 1)` for finite points, `(1 : 0)` at infinity.
fn cp1_normalized<F: Scalar>(p: &ProjectivePoint<F>) -> ProjectivePoint<F> {
    let c = p.coords();
    if c[1].is_zero() {
        ProjectivePoint::infinity()
    } else {
        ProjectivePoint::affine(c[0].clone() / c[1].clone())
    }
}

fn require_cp1<F: Scalar>(p: &ProjectivePoint<F>) -> Result<(), MapError> {
    if p.dim() == 2 {
        Ok(())
    } else {
        Err(MapError::InvalidState(format!("Adler fields live on CP^1, got a point with {} coordinates", p.dim())))
    }
}

/// Homogeneous form of the map with `d = λ − μ` replaced by an arbitrary
/// shift; shared with the perturbed control.
pub(crate) fn adler_like<F: Scalar>(
    shift_x: &F,
    shift_y: &F,
    x: &ProjectivePoint<F>,
    y: &ProjectivePoint<F>,
) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
    require_cp1(x)?;
    require_cp1(y)?;
    let (x0, x1) = (x.coords()[0].clone(), x.coords()[1].clone());
    let (y0, y1) = (y.coords()[0].clone(), y.coords()[1].clone());
    // s = (x + y) x1 y1
    let s = x0.clone() * y1.clone() + y0.clone() * x1.clone();
    if s.is_negligible() {
        return Err(MapError::SingularInput("x + y = 0".into()));
    }
    // x̃ = y − shift_x / (x + y),  ỹ = x + shift_y / (x + y)
    let xt = ProjectivePoint::new(vec![
        y0 * s.clone() - shift_x.clone() * x1.clone() * y1.clone() * y1.clone(),
        y1.clone() * s.clone(),
    ])?;
    let yt = ProjectivePoint::new(vec![x0 * s.clone() + shift_y.clone() * x1.clone() * x1.clone() * y1, x1 * s])?;
    Ok((cp1_normalized(&xt), cp1_normalized(&yt)))
}

/// `(x̃, ỹ) = R(λ, μ)(x, y)`, with infinite points handled through
/// homogeneous coordinates. The pole `x + y = 0` is a singular input.
pub fn adler_apply<F: Scalar>(
    lambda: &F,
    mu: &F,
    x: &ProjectivePoint<F>,
    y: &ProjectivePoint<F>,
) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
    let d = lambda.clone() - mu.clone();
    adler_like(&d, &d, x, y)
}

/// `[[x, x² + λ − ζ], [1, x]]`; undefined at `x = ∞`.
pub fn adler_lax<F: Scalar>(x: &ProjectivePoint<F>, lambda: &F, zeta: &F) -> Result<SquareMatrix<F>, MapError> {
    require_cp1(x)?;
    let x = x.affine_value().ok_or_else(|| MapError::Unsupported("Adler Lax matrix at x = ∞".into()))?;
    Ok(SquareMatrix::from_rows(vec![
        vec![x.clone(), x.clone() * x.clone() + lambda.clone() - zeta.clone()],
        vec![F::one(), x],
    ])?)
}

/// `x₁² · adler_lax(x)` for `x = (x₀ : x₁)`:
/// `[[x₀x₁, x₀² + (λ − ζ) x₁²], [x₁², x₀x₁]]`.
pub fn adler_lax_homogeneous<F: Scalar>(
    x: &ProjectivePoint<F>,
    lambda: &F,
    zeta: &F,
) -> Result<SquareMatrix<F>, MapError> {
    require_cp1(x)?;
    let (x0, x1) = (x.coords()[0].clone(), x.coords()[1].clone());
    if x1.is_zero() {
        return Err(MapError::Unsupported("Adler Lax matrix at x = ∞".into()));
    }
    let x01 = x0.clone() * x1.clone();
    let x11 = x1.clone() * x1;
    Ok(SquareMatrix::from_rows(vec![
        vec![x01.clone(), x0.clone() * x0 + (lambda.clone() - zeta.clone()) * x11.clone()],
        vec![x11, x01],
    ])?)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AdlerMap;

impl<F: Scalar> YangBaxterMap<F> for AdlerMap {
    type Field = ProjectivePoint<F>;

    fn name(&self) -> &'static str {
        "adler"
    }

    fn apply(
        &self,
        lambda: &F,
        mu: &F,
        x: &ProjectivePoint<F>,
        y: &ProjectivePoint<F>,
    ) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
        adler_apply(lambda, mu, x, y)
    }

    fn lax_a(&self, x: &ProjectivePoint<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, param, spectral)
    }

    /// `x₁² A` in homogeneous coordinates `x = (x₀ : x₁)`.
    fn lax_a_scaled(&self, x: &ProjectivePoint<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax_homogeneous(x, param, spectral)
    }

    fn lax_b(&self, x: &ProjectivePoint<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, param, spectral)
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }

    /// Möbius consistency: `ỹ = A(x, λ, μ)[y]` and `x̃ = A(y, μ, λ)[x]`.
    fn map_form_residual(
        &self,
        lambda: &F,
        mu: &F,
        x: &ProjectivePoint<F>,
        y: &ProjectivePoint<F>,
    ) -> Result<F::Real, MapError> {
        let (xt, yt) = adler_apply(lambda, mu, x, y)?;
        let y_img = mobius_apply(&adler_lax(x, lambda, mu)?, y)?;
        let x_img = mobius_apply(&adler_lax(y, mu, lambda)?, x)?;
        let ry = yt.residual(&y_img)?;
        let rx = xt.residual(&x_img)?;
        Ok(if ry > rx { ry } else { rx })
    }

    fn has_map_form(&self) -> bool {
        true
    }
}
