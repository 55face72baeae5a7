//! Maps used as positive and negative controls for the checkers.

use std::marker::PhantomData;

use crate::algebra::{ProjectivePoint, Scalar, SquareMatrix};
use crate::error::MapError;
use crate::maps::adler::{adler_lax, adler_like};
use crate::ybcore::{FieldValue, LaxMode, YangBaxterMap};

/// `R(x, y) = (y, x)` on any field type. Every check passes.
#[derive(Debug)]
pub struct Flip<X>(PhantomData<fn() -> X>);

impl<X> Default for Flip<X> {
    fn default() -> Self {
        Flip(PhantomData)
    }
}

impl<X> Clone for Flip<X> {
    fn clone(&self) -> Self {
        Flip::default()
    }
}

impl<F: Scalar, X: FieldValue<F>> YangBaxterMap<F> for Flip<X> {
    type Field = X;

    fn name(&self) -> &'static str {
        "flip"
    }

    fn apply(&self, _: &F, _: &F, x: &X, y: &X) -> Result<(X, X), MapError> {
        Ok((y.clone(), x.clone()))
    }

    fn lax_a(&self, _: &X, _: &F, _: &F) -> Result<SquareMatrix<F>, MapError> {
        Ok(SquareMatrix::identity(1))
    }

    fn lax_b(&self, _: &X, _: &F, _: &F) -> Result<SquareMatrix<F>, MapError> {
        Ok(SquareMatrix::identity(1))
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }
}

/// `(x, y) ↦ (y + 1, x)` on `CP^1`: not reversible.
#[derive(Debug, Clone, Copy, Default)]
pub struct Shift;

impl<F: Scalar> YangBaxterMap<F> for Shift {
    type Field = ProjectivePoint<F>;

    fn name(&self) -> &'static str {
        "shift"
    }

    fn apply(
        &self,
        _: &F,
        _: &F,
        x: &ProjectivePoint<F>,
        y: &ProjectivePoint<F>,
    ) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
        let c = y.coords();
        let shifted = ProjectivePoint::new(vec![c[0].clone() + c[1].clone(), c[1].clone()])?;
        Ok((FieldValue::<F>::canonical(&shifted), x.clone()))
    }

    fn lax_a(&self, x: &ProjectivePoint<F>, p: &F, z: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, p, z)
    }

    fn lax_b(&self, x: &ProjectivePoint<F>, p: &F, z: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, p, z)
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }
}

/// Adler's map with `λ − μ` replaced by `λ − 2μ` in the `x̃` component.
/// Violates the Yang-Baxter relation.
#[derive(Debug, Clone, Copy, Default)]
pub struct PerturbedAdler;

impl<F: Scalar> YangBaxterMap<F> for PerturbedAdler {
    type Field = ProjectivePoint<F>;

    fn name(&self) -> &'static str {
        "adler-perturbed"
    }

    fn apply(
        &self,
        lambda: &F,
        mu: &F,
        x: &ProjectivePoint<F>,
        y: &ProjectivePoint<F>,
    ) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
        let shift_x = lambda.clone() - mu.clone() - mu.clone();
        let shift_y = lambda.clone() - mu.clone();
        adler_like(&shift_x, &shift_y, x, y)
    }

    fn lax_a(&self, x: &ProjectivePoint<F>, p: &F, z: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, p, z)
    }

    fn lax_b(&self, x: &ProjectivePoint<F>, p: &F, z: &F) -> Result<SquareMatrix<F>, MapError> {
        adler_lax(x, p, z)
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::ybcore::check_yang_baxter;

    type Q = Rational;

    #[test]
    fn perturbed_adler_breaks_the_worked_instance() {
        let q = Q::from_int;
        let p = |v| ProjectivePoint::affine(q(v));
        let r = check_yang_baxter(&PerturbedAdler, (&q(2), &q(5), &q(7)), (&p(1), &p(2), &p(3)), 0.0);
        assert_eq!(r.failed(), 1);
    }
}
