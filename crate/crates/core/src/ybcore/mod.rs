//! The parameter-dependent Yang-Baxter map contract and its verification
//! procedures.
//!
//! A map `R(λ, μ): X × X → X × X` is described by [`YangBaxterMap`]. Points
//! of `X` implement [`FieldValue`], which knows how to compare itself with
//! another point at the level of the invariant object (projective point,
//! rank-one projector, vector).

mod case;
mod check;
pub mod controls;
mod report;

use std::fmt::Debug;

use serde_json::Value;

use crate::algebra::{Scalar, SquareMatrix};
use crate::error::{AlgebraError, MapError};

pub(crate) use case::{scalars_from_json, scalars_to_json};
pub use case::{CaseParseError, CheckCase, CheckKind};
pub use check::{check_case, check_lax, check_lax_dual, check_map_form, check_reversibility, check_yang_baxter};
pub use report::{CheckReport, Outcome, Witness, WitnessKind, MAX_WITNESSES};

/// Whether the Lax relation is expected to hold literally or only up to a
/// scalar matrix `cI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaxMode {
    Exact,
    Projective,
}

/// A point of the set `X` a map acts on.
pub trait FieldValue<F: Scalar>: Clone + Debug + Send + Sync + Sized {
    /// Tag used in witnesses and reports.
    const KIND: &'static str;

    /// Scale-free distance to `other`; zero exactly when the two points
    /// describe the same object.
    fn residual(&self, other: &Self) -> Result<F::Real, AlgebraError>;

    /// Preferred representative of the same object.
    fn canonical(&self) -> Self {
        self.clone()
    }

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self, CaseParseError>;
}

/// A parameter-dependent map `R(λ, μ)` together with its action matrices.
///
/// When `R` has the form `x̃ = B(y, μ, λ)[x]`, `ỹ = A(x, λ, μ)[y]` for a group
/// action of `GL_N` on `X`, both `A(x, λ; ζ)` and `B(x, λ; ζ)ᵀ` are Lax
/// matrices.
pub trait YangBaxterMap<F: Scalar>: Clone + Send + Sync {
    type Field: FieldValue<F>;

    fn name(&self) -> &'static str;

    /// `(x̃, ỹ) = R(λ, μ)(x, y)`.
    fn apply(
        &self,
        lambda: &F,
        mu: &F,
        x: &Self::Field,
        y: &Self::Field,
    ) -> Result<(Self::Field, Self::Field), MapError>;

    /// `A(x, λ; ζ)`.
    fn lax_a(&self, x: &Self::Field, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError>;

    /// A nonzero scalar multiple of `A(x, λ; ζ)` with the cheapest entries
    /// (typically denominators cleared). Scale-free quantities such as the
    /// spectral invariants of a monodromy cannot tell the two apart.
    fn lax_a_scaled(&self, x: &Self::Field, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        self.lax_a(x, param, spectral)
    }

    /// `B(x, λ; ζ)`.
    fn lax_b(&self, x: &Self::Field, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError>;

    fn lax_mode(&self) -> LaxMode;

    /// Residual of the group-action form of the map at one input, for maps
    /// that expose it.
    fn map_form_residual(&self, _lambda: &F, _mu: &F, _x: &Self::Field, _y: &Self::Field) -> Result<F::Real, MapError> {
        Err(MapError::Unsupported(format!("{} has no map-form check", self.name())))
    }

    fn has_map_form(&self) -> bool {
        false
    }
}

/// `R_21 = P R P` evaluated with slot parameters `λ` (first slot) and `μ`
/// (second slot): returns the swapped image of `R(μ, λ)(y, x)`.
///
/// With this convention reversibility reads `apply_r21(λ, μ, R(λ, μ)(x, y)) = (x, y)`,
/// and a map with `R_21 = R` satisfies `apply_r21 ≡ apply`.
pub fn apply_r21<F: Scalar, M: YangBaxterMap<F>>(
    map: &M,
    lambda: &F,
    mu: &F,
    x: &M::Field,
    y: &M::Field,
) -> Result<(M::Field, M::Field), MapError> {
    let (a, b) = map.apply(mu, lambda, y, x)?;
    Ok((b, a))
}

/// Residual between two pairs of points, the larger of the componentwise ones.
pub fn pair_residual<F: Scalar, X: FieldValue<F>>(a: (&X, &X), b: (&X, &X)) -> Result<F::Real, AlgebraError> {
    let r0 = a.0.residual(b.0)?;
    let r1 = a.1.residual(b.1)?;
    Ok(if r1 > r0 { r1 } else { r0 })
}
