//! Interaction of matrix KdV solitons.
//!
//! The polarization of a soliton is a rank-one projector `P = ξ⊗η/⟨ξ,η⟩`.
//! Two solitons with velocities `λ₁`, `λ₂` exchange polarizations by
//!
//! ```text
//! ξ̃₁ = ξ₁ + 2λ₂⟨ξ₁,η₂⟩ / ((λ₁−λ₂)⟨ξ₂,η₂⟩) ξ₂      η̃₁ = η₁ + 2λ₂⟨ξ₂,η₁⟩ / ((λ₁−λ₂)⟨ξ₂,η₂⟩) η₂
//! ξ̃₂ = ξ₂ + 2λ₁⟨ξ₂,η₁⟩ / ((λ₂−λ₁)⟨ξ₁,η₁⟩) ξ₁      η̃₂ = η₂ + 2λ₁⟨ξ₁,η₂⟩ / ((λ₂−λ₁)⟨ξ₁,η₁⟩) η₁
//! ```
//!
//! with Lax matrix `A(P, λ, ζ) = B(P, λ, ζ) = I + 2λ/(ζ−λ) P`.

use serde_json::{json, Value};

use crate::algebra::{real_max, Scalar, SquareMatrix};
use crate::error::{AlgebraError, MapError};
use crate::ybcore::{scalars_from_json, scalars_to_json, CaseParseError, FieldValue, LaxMode, YangBaxterMap};

fn pairing<F: Scalar>(xi: &[F], eta: &[F]) -> F {
    xi.iter().zip(eta).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

fn axpy<F: Scalar>(base: &[F], coef: &F, dir: &[F]) -> Vec<F> {
    base.iter().zip(dir).map(|(b, d)| b.clone() + coef.clone() * d.clone()).collect()
}

/// A vector `ξ` and covector `η` with `⟨ξ, η⟩ ≠ 0`.
///
/// Only the induced projector is meaningful; pairs differing by independent
/// rescalings of `ξ` and `η` compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOnePair<F> {
    xi: Vec<F>,
    eta: Vec<F>,
}

impl<F: Scalar> RankOnePair<F> {
    pub fn new(xi: Vec<F>, eta: Vec<F>) -> Result<Self, MapError> {
        if xi.len() != eta.len() || xi.is_empty() {
            return Err(AlgebraError::Shape { expected: xi.len(), got: eta.len() }.into());
        }
        if pairing(&xi, &eta).is_negligible() {
            return Err(MapError::InvalidState("⟨ξ, η⟩ = 0".into()));
        }
        Ok(Self { xi, eta })
    }

    pub fn from_ints(xi: &[i64], eta: &[i64]) -> Result<Self, MapError> {
        Self::new(xi.iter().map(|&v| F::from_int(v)).collect(), eta.iter().map(|&v| F::from_int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }

    pub fn xi(&self) -> &[F] {
        &self.xi
    }

    pub fn eta(&self) -> &[F] {
        &self.eta
    }

    pub fn pairing(&self) -> F {
        pairing(&self.xi, &self.eta)
    }

    /// `P = ξ⊗η / ⟨ξ,η⟩`.
    pub fn projector(&self) -> SquareMatrix<F> {
        let n = self.dim();
        let inv = F::one() / self.pairing();
        let mut p = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                p.set(i, j, self.xi[i].clone() * self.eta[j].clone() * inv.clone());
            }
        }
        p
    }
}

/// `v` divided by its pivot coordinate (the zero vector is returned as is).
fn pivot_scaled<F: Scalar>(v: &[F]) -> Vec<F> {
    match crate::algebra::ProjectivePoint::new(v.to_vec()) {
        Ok(p) => p.normalized(),
        Err(_) => v.to_vec(),
    }
}

impl<F: Scalar> FieldValue<F> for RankOnePair<F> {
    const KIND: &'static str = "rank-one-pair";

    fn residual(&self, other: &Self) -> Result<F::Real, AlgebraError> {
        let (pa, pb) = (self.projector(), other.projector());
        let diff = pa.try_sub(&pb)?.max_modulus();
        let scale = real_max::<F>(pa.max_modulus(), pb.max_modulus());
        Ok(F::real_ratio(&diff, &scale))
    }

    /// Exact backend: `ξ` and `η` as primitive integer vectors, which keeps
    /// their heights minimal along long evolutions. Float backend: `ξ` and
    /// `η` each scaled so their pivot coordinate is one. Scaling them
    /// separately keeps both of unit size even when `⟨ξ, η⟩` is small, which
    /// matters for the rounding error of the next application.
    fn canonical(&self) -> Self {
        if let (Some(xi), Some(eta)) = (F::primitive_representative(&self.xi), F::primitive_representative(&self.eta)) {
            return Self { xi, eta };
        }
        Self { xi: pivot_scaled(&self.xi), eta: pivot_scaled(&self.eta) }
    }

    fn to_json(&self) -> Value {
        json!({"xi": scalars_to_json(&self.xi), "eta": scalars_to_json(&self.eta)})
    }

    fn from_json(v: &Value) -> Result<Self, CaseParseError> {
        let xi = scalars_from_json(v.get("xi").unwrap_or(&Value::Null))?;
        let eta = scalars_from_json(v.get("eta").unwrap_or(&Value::Null))?;
        RankOnePair::new(xi, eta).map_err(|e| CaseParseError(e.to_string()))
    }
}

/// The polarization exchange `R(λ₁, λ₂)`, term by term.
pub fn soliton_apply<F: Scalar>(
    lambda1: &F,
    lambda2: &F,
    first: &RankOnePair<F>,
    second: &RankOnePair<F>,
) -> Result<(RankOnePair<F>, RankOnePair<F>), MapError> {
    if first.dim() != second.dim() {
        return Err(AlgebraError::Shape { expected: first.dim(), got: second.dim() }.into());
    }
    let diff = lambda1.clone() - lambda2.clone();
    if diff.is_negligible() {
        return Err(MapError::SingularInput("λ₁ = λ₂".into()));
    }
    let (p11, p22) = (first.pairing(), second.pairing());
    if p11.is_negligible() || p22.is_negligible() {
        return Err(MapError::InvalidState("zero input pairing".into()));
    }
    let (xi1, eta1, xi2, eta2) = (&first.xi, &first.eta, &second.xi, &second.eta);
    let p12 = pairing(xi1, eta2);
    let p21 = pairing(xi2, eta1);
    let two = F::from_int(2);

    let d1 = diff.clone() * p22;
    let xi1t = axpy(xi1, &(two.clone() * lambda2.clone() * p12.clone() / d1.clone()), xi2);
    let eta1t = axpy(eta1, &(two.clone() * lambda2.clone() * p21.clone() / d1), eta2);

    let d2 = -diff * p11;
    let xi2t = axpy(xi2, &(two.clone() * lambda1.clone() * p21 / d2.clone()), xi1);
    let eta2t = axpy(eta2, &(two * lambda1.clone() * p12 / d2), eta1);

    let out1 = RankOnePair::new(xi1t, eta1t).map_err(|_| MapError::SingularOutput("⟨ξ̃₁, η̃₁⟩ = 0".into()))?;
    let out2 = RankOnePair::new(xi2t, eta2t).map_err(|_| MapError::SingularOutput("⟨ξ̃₂, η̃₂⟩ = 0".into()))?;
    Ok((out1, out2))
}

/// `I + 2λ/(ζ−λ) P`, with determinant `(ζ+λ)/(ζ−λ)`.
pub fn soliton_lax<F: Scalar>(pair: &RankOnePair<F>, lambda: &F, zeta: &F) -> Result<SquareMatrix<F>, MapError> {
    let gap = zeta.clone() - lambda.clone();
    if gap.is_negligible() {
        return Err(MapError::SpectralSingularity("ζ = λ".into()));
    }
    let coef = F::from_int(2) * lambda.clone() / gap;
    Ok(SquareMatrix::identity(pair.dim()).try_add(&pair.projector().scale(&coef))?)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolitonMap;

impl<F: Scalar> YangBaxterMap<F> for SolitonMap {
    type Field = RankOnePair<F>;

    fn name(&self) -> &'static str {
        "soliton"
    }

    fn apply(
        &self,
        lambda: &F,
        mu: &F,
        x: &RankOnePair<F>,
        y: &RankOnePair<F>,
    ) -> Result<(RankOnePair<F>, RankOnePair<F>), MapError> {
        soliton_apply(lambda, mu, x, y)
    }

    fn lax_a(&self, x: &RankOnePair<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        soliton_lax(x, param, spectral)
    }

    /// `(ζ − λ)⟨ξ, η⟩ I + 2λ ξηᵀ`.
    fn lax_a_scaled(&self, x: &RankOnePair<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        let gap = spectral.clone() - param.clone();
        if gap.is_negligible() {
            return Err(MapError::SpectralSingularity("ζ = λ".into()));
        }
        let n = x.dim();
        let diag = gap * x.pairing();
        let two_lambda = F::from_int(2) * param.clone();
        let mut m = SquareMatrix::scalar(n, diag);
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j).clone() + two_lambda.clone() * x.xi[i].clone() * x.eta[j].clone();
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    fn lax_b(&self, x: &RankOnePair<F>, param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        soliton_lax(x, param, spectral)
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Complex, Rational};

    type Q = Rational;

    fn pair(xi: &[i64], eta: &[i64]) -> RankOnePair<Q> {
        RankOnePair::from_ints(xi, eta).unwrap()
    }

    #[test]
    fn worked_two_dimensional_instance() {
        let (a, b) =
            soliton_apply(&Q::from_int(2), &Q::from_int(1), &pair(&[1, 0], &[1, 0]), &pair(&[1, 1], &[0, 1])).unwrap();
        assert_eq!(a, pair(&[1, 0], &[1, 2]));
        assert_eq!(b, pair(&[-3, 1], &[0, 1]));
    }

    #[test]
    fn one_dimensional_projectors_are_unchanged() {
        let x = pair(&[3], &[5]);
        let y = pair(&[-2], &[7]);
        let (a, b) = soliton_apply(&Q::from_int(4), &Q::from_int(1), &x, &y).unwrap();
        assert_eq!(a.projector(), SquareMatrix::identity(1));
        assert_eq!(b.projector(), SquareMatrix::identity(1));
    }

    #[test]
    fn equal_velocities_are_singular() {
        let err = soliton_apply(&Q::from_int(1), &Q::from_int(1), &pair(&[1, 0], &[1, 0]), &pair(&[1, 1], &[0, 1]))
            .unwrap_err();
        assert!(matches!(err, MapError::SingularInput(_)));
    }

    #[test]
    fn zero_pairing_is_rejected() {
        assert!(matches!(RankOnePair::<Q>::from_ints(&[1, 0], &[0, 1]), Err(MapError::InvalidState(_))));
    }

    #[test]
    fn lax_fixtures() {
        let p = pair(&[1, 0], &[1, 0]);
        let l = soliton_lax(&p, &Q::from_int(1), &Q::from_int(3)).unwrap();
        assert_eq!(l, SquareMatrix::from_ints([[2, 0], [0, 1]]));
        assert_eq!(l.determinant(), Q::from_int(2));
        let q = pair(&[2, 3], &[-1, 4]);
        assert_eq!(soliton_lax(&q, &Q::from_int(0), &Q::from_int(5)).unwrap(), SquareMatrix::identity(2));
        assert!(matches!(soliton_lax(&q, &Q::from_int(2), &Q::from_int(2)), Err(MapError::SpectralSingularity(_))));
    }

    #[test]
    fn lax_determinant_formula() {
        let q = pair(&[2, 3, -1], &[-1, 4, 5]);
        let (l, z) = (Q::from_ratio(3, 7), Q::from_ratio(-5, 2));
        let det = soliton_lax(&q, &l, &z).unwrap().determinant();
        assert_eq!(det, (z.clone() + l.clone()) / (z - l));
    }

    #[test]
    fn scaled_lax_is_a_multiple_of_the_lax_matrix() {
        let q = pair(&[1, 2, -1], &[3, 0, 4]);
        let (l, z) = (Q::from_ratio(3, 2), Q::from_int(-5));
        let scaled = YangBaxterMap::<Q>::lax_a_scaled(&SolitonMap, &q, &l, &z).unwrap();
        let factor = (z.clone() - l.clone()) * q.pairing();
        assert_eq!(scaled, soliton_lax(&q, &l, &z).unwrap().scale(&factor));
    }

    #[test]
    fn canonical_pair_has_same_projector() {
        let q = pair(&[0, 6, -3], &[1, 2, 5]);
        let c = FieldValue::<Q>::canonical(&q);
        assert_eq!(c.projector(), q.projector());
        assert_eq!(c.xi(), &[Q::from_int(0), Q::from_int(2), Q::from_int(-1)]);
        assert_eq!(c.eta(), &[Q::from_int(1), Q::from_int(2), Q::from_int(5)]);
        assert_eq!(FieldValue::<Q>::residual(&c, &q).unwrap(), Q::from_int(0));
    }

    #[test]
    fn float_canonical_pair_scales_each_vector_to_a_unit_pivot() {
        let c = |v: &[f64]| v.iter().map(|&x| Complex::new(x, 0.0)).collect::<Vec<_>>();
        let p = RankOnePair::new(c(&[4.0, -8.0]), c(&[1e-3, 3e-3])).unwrap();
        let k = FieldValue::<Complex>::canonical(&p);
        assert_eq!(k.xi(), &c(&[-0.5, 1.0])[..]);
        assert!((k.eta()[0] - Complex::new(1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert_eq!(k.eta()[1], Complex::new(1.0, 0.0));
        assert!(FieldValue::<Complex>::residual(&k, &p).unwrap() < 1e-15);
    }
}
