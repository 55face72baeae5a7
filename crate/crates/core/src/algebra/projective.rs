//! Homogeneous coordinates and the projective action of `GL_n`.

use crate::algebra::matrix::SquareMatrix;
use crate::algebra::scalar::{real_max, Backend, Scalar};
use crate::error::AlgebraError;

/// A point of `CP^{n-1}` given by homogeneous coordinates.
///
/// Two points are equal when their coordinates differ by a nonzero factor.
#[derive(Clone, Debug)]
pub struct ProjectivePoint<F> {
    coords: Vec<F>,
}

impl<F: Scalar> ProjectivePoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self, AlgebraError> {
        if coords.is_empty() || coords.iter().all(|c| c.is_negligible()) {
            return Err(AlgebraError::ZeroPoint);
        }
        Ok(Self { coords })
    }

    /// The affine point `(y : 1)` of `CP^1`.
    pub fn affine(y: F) -> Self {
        Self { coords: vec![y, F::one()] }
    }

    pub fn infinity() -> Self {
        Self { coords: vec![F::one(), F::zero()] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// Affine value `x_0 / x_1` of a point of `CP^1`; `None` at infinity.
    pub fn affine_value(&self) -> Option<F> {
        assert_eq!(self.coords.len(), 2, "affine_value is defined on CP^1");
        let den = &self.coords[1];
        if den.is_negligible() {
            None
        } else {
            Some(self.coords[0].clone() / den.clone())
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.coords.len() == 2 && self.coords[1].is_negligible()
    }

    /// Index used for normalization: first nonzero coordinate in exact mode,
    /// largest modulus in float mode.
    pub fn pivot(&self) -> usize {
        match F::BACKEND {
            Backend::ExactRational => self.coords.iter().position(|c| !c.is_negligible()).expect("nonzero point"),
            Backend::ComplexFloat => {
                let mut best = 0;
                for (i, c) in self.coords.iter().enumerate() {
                    if c.modulus() > self.coords[best].modulus() {
                        best = i;
                    }
                }
                best
            }
        }
    }

    /// Coordinates divided by the pivot coordinate.
    pub fn normalized(&self) -> Vec<F> {
        self.scaled_by(self.pivot())
    }

    fn scaled_by(&self, idx: usize) -> Vec<F> {
        let d = self.coords[idx].clone();
        self.coords.iter().map(|c| c.clone() / d.clone()).collect()
    }

    /// Representative with the pivot coordinate equal to one.
    pub fn canonical(&self) -> Self {
        Self { coords: self.normalized() }
    }

    /// Distance between two points up to scale: both are divided by the
    /// coordinate at this point's pivot and the max-modulus difference is
    /// returned. A point whose pivot coordinate vanishes in `other` yields a
    /// residual of one.
    pub fn residual(&self, other: &Self) -> Result<F::Real, AlgebraError> {
        if self.dim() != other.dim() {
            return Err(AlgebraError::Shape { expected: self.dim(), got: other.dim() });
        }
        let idx = self.pivot();
        if other.coords[idx].is_negligible() {
            return Ok(F::one().modulus());
        }
        let a = self.scaled_by(idx);
        let b = other.scaled_by(idx);
        Ok(a.iter().zip(&b).fold(F::real_zero(), |acc, (x, y)| real_max::<F>(acc, (x.clone() - y.clone()).modulus())))
    }

    pub fn projectively_equal(&self, other: &Self, tol: f64) -> bool {
        self.residual(other).map(|r| F::residual_ok(&r, tol)).unwrap_or(false)
    }
}

/// Standard projective action: homogeneous coordinates `m · p`.
pub fn projective_apply<F: Scalar>(
    m: &SquareMatrix<F>,
    p: &ProjectivePoint<F>,
) -> Result<ProjectivePoint<F>, AlgebraError> {
    if m.dim() != p.dim() {
        return Err(AlgebraError::Shape { expected: m.dim(), got: p.dim() });
    }
    m.ensure_invertible()?;
    ProjectivePoint::new(m.mul_vec(p.coords())?)
}

/// Möbius transformation `y ↦ (a y + b) / (c y + d)` on `CP^1`.
pub fn mobius_apply<F: Scalar>(
    m: &SquareMatrix<F>,
    p: &ProjectivePoint<F>,
) -> Result<ProjectivePoint<F>, AlgebraError> {
    if m.dim() != 2 {
        return Err(AlgebraError::Shape { expected: 2, got: m.dim() });
    }
    projective_apply(m, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type Q = Rational;

    fn pt(c: &[i64]) -> ProjectivePoint<Q> {
        ProjectivePoint::new(c.iter().map(|&v| Q::from_int(v)).collect()).unwrap()
    }

    #[test]
    fn mobius_examples() {
        let five = ProjectivePoint::affine(Q::from_int(5));
        let id = SquareMatrix::<Q>::identity(2);
        assert_eq!(mobius_apply(&id, &five).unwrap().affine_value(), Some(Q::from_int(5)));

        let m = SquareMatrix::<Q>::from_ints([[0, 2], [1, 0]]);
        let one = ProjectivePoint::affine(Q::from_int(1));
        assert_eq!(mobius_apply(&m, &one).unwrap().affine_value(), Some(Q::from_int(2)));

        let shear = SquareMatrix::<Q>::from_ints([[1, 1], [0, 1]]);
        let inf = mobius_apply(&shear, &ProjectivePoint::infinity()).unwrap();
        assert!(inf.is_infinite());
    }

    #[test]
    fn projective_examples() {
        let p = pt(&[2, -3, 5]);
        let id = SquareMatrix::<Q>::identity(3);
        assert!(projective_apply(&id, &p).unwrap().projectively_equal(&p, 0.0));
        let seven = SquareMatrix::<Q>::scalar(3, Q::from_int(7));
        assert!(projective_apply(&seven, &p).unwrap().projectively_equal(&p, 0.0));

        let m = SquareMatrix::<Q>::from_ints([[5, 1], [2, 3]]);
        let img = projective_apply(&m, &pt(&[1, 1])).unwrap();
        assert!(img.projectively_equal(&pt(&[6, 5]), 0.0));
    }

    #[test]
    fn singular_and_mismatched_actions_fail() {
        let sing = SquareMatrix::<Q>::from_ints([[1, 2], [2, 4]]);
        assert_eq!(projective_apply(&sing, &pt(&[1, 0])).unwrap_err(), AlgebraError::InvalidGroupElement);
        let m3 = SquareMatrix::<Q>::identity(3);
        assert!(matches!(projective_apply(&m3, &pt(&[1, 0])), Err(AlgebraError::Shape { .. })));
        assert!(matches!(mobius_apply(&m3, &pt(&[1, 0, 0])), Err(AlgebraError::Shape { .. })));
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(ProjectivePoint::new(vec![Q::from_int(0), Q::from_int(0)]).unwrap_err(), AlgebraError::ZeroPoint);
    }

    #[test]
    fn residual_detects_non_proportional_points() {
        assert_eq!(pt(&[1, 2]).residual(&pt(&[3, 6])).unwrap(), Q::from_int(0));
        assert_ne!(pt(&[1, 2]).residual(&pt(&[3, 5])).unwrap(), Q::from_int(0));
        assert_eq!(pt(&[1, 0]).residual(&pt(&[0, 1])).unwrap(), Q::from_int(1));
        assert_eq!(pt(&[0, 3]).canonical().coords(), pt(&[0, 1]).coords());
    }
}
