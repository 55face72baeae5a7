//! Characteristic polynomials and scale-invariant spectral data.

use crate::algebra::matrix::SquareMatrix;
use crate::algebra::scalar::{real_max, Scalar};
use crate::error::AlgebraError;

/// Coefficients `c_1, …, c_n` of `det(t I - m) = t^n + c_1 t^{n-1} + … + c_n`,
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_coefficients<F: Scalar>(m: &SquareMatrix<F>) -> Vec<F> {
    let n = m.dim();
    let mut coeffs = Vec::with_capacity(n);
    // M_k = m M_{k-1} + c_{k-1} I, c_k = -tr(m M_k) / k, starting at M_0 = 0, c_0 = 1.
    let mut mk = SquareMatrix::<F>::zeros(n);
    let mut prev = F::one();
    for k in 1..=n {
        let mut next = m * &mk;
        for i in 0..n {
            let v = next.get(i, i).clone() + prev.clone();
            next.set(i, i, v);
        }
        let ck = -((m * &next).trace() / F::from_int(k as i64));
        coeffs.push(ck.clone());
        mk = next;
        prev = ck;
    }
    coeffs
}

/// The ratios `I_k = c_k^n / c_n^k`, `k = 1..n-1`.
///
/// Unchanged under `m ↦ α m` (since `c_k ↦ α^k c_k`) and under conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralInvariants<F> {
    pub n: usize,
    pub values: Vec<F>,
}

impl<F: Scalar> SpectralInvariants<F> {
    /// Largest relative difference between corresponding invariants.
    ///
    /// Each difference is taken relative to the larger of the two values
    /// and of `I_k` at the identity, `C(n,k)^n`. The floor keeps an
    /// invariant that happens to be close to zero (a near-cancelling trace,
    /// say) from turning rounding noise into a large relative error; for
    /// values at or above the unit scale this is the plain relative
    /// difference.
    pub fn drift(&self, other: &Self) -> Result<F::Real, AlgebraError> {
        if self.n != other.n || self.values.len() != other.values.len() {
            return Err(AlgebraError::Shape { expected: self.n, got: other.n });
        }
        Ok(self.values.iter().zip(&other.values).enumerate().fold(F::real_zero(), |acc, (i, (a, b))| {
            let unit = F::from_int(binomial(self.n, i + 1)).pow(self.n as u32).modulus();
            let scale = real_max::<F>(real_max::<F>(a.modulus(), b.modulus()), unit);
            let diff = (a.clone() - b.clone()).modulus();
            real_max::<F>(acc, F::real_ratio(&diff, &scale))
        }))
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (1..=k).fold(1i64, |acc, i| acc * (n + 1 - i) as i64 / i as i64)
}

pub fn spectral_invariants<F: Scalar>(m: &SquareMatrix<F>) -> Result<SpectralInvariants<F>, AlgebraError> {
    let n = m.dim();
    let coeffs = characteristic_coefficients(m);
    let cn = coeffs.last().cloned().unwrap_or_else(F::one);
    if cn.is_negligible() {
        return Err(AlgebraError::InvalidGroupElement);
    }
    let values = (1..n).map(|k| coeffs[k - 1].pow(n as u32) / cn.pow(k as u32)).collect();
    Ok(SpectralInvariants { n, values })
}

/// Outcome of comparing two matrices up to a scalar factor.
#[derive(Clone, Debug, PartialEq)]
pub enum Proportionality<F: Scalar> {
    /// `a = b` within tolerance.
    Exact {
        residual: F::Real,
    },
    /// `a = c·b` with `c ≠ 1`.
    Projective {
        factor: F,
        residual: F::Real,
    },
    Unequal {
        residual: F::Real,
    },
}

impl<F: Scalar> Proportionality<F> {
    pub fn residual(&self) -> &F::Real {
        match self {
            Proportionality::Exact { residual }
            | Proportionality::Projective { residual, .. }
            | Proportionality::Unequal { residual } => residual,
        }
    }

    pub fn factor(&self) -> Option<F> {
        match self {
            Proportionality::Exact { .. } => Some(F::one()),
            Proportionality::Projective { factor, .. } => Some(factor.clone()),
            Proportionality::Unequal { .. } => None,
        }
    }
}

/// Relative residual `max |a - c b| / max |a|`.
fn scaled_residual<F: Scalar>(
    a: &SquareMatrix<F>,
    b: &SquareMatrix<F>,
    c: &F,
    scale: &F::Real,
) -> Result<F::Real, AlgebraError> {
    let diff = a.try_sub(&b.scale(c))?.max_modulus();
    Ok(F::real_ratio(&diff, scale))
}

/// Decides whether `a = b`, `a = c·b` for a scalar `c ≠ 1`, or neither.
///
/// The candidate factor is read off the max-modulus entry of `b`.
pub fn equal_up_to_scalar<F: Scalar>(
    a: &SquareMatrix<F>,
    b: &SquareMatrix<F>,
    tol: f64,
) -> Result<Proportionality<F>, AlgebraError> {
    equal_up_to_scalar_relative_to(a, b, &a.max_modulus(), tol)
}

/// [`equal_up_to_scalar`] with residuals measured relative to `scale`
/// instead of the largest entry of `a`. Products are compared against the
/// size of their factors this way, which keeps cancellation inside a
/// product from inflating the relative residual.
pub fn equal_up_to_scalar_relative_to<F: Scalar>(
    a: &SquareMatrix<F>,
    b: &SquareMatrix<F>,
    scale: &F::Real,
    tol: f64,
) -> Result<Proportionality<F>, AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::Shape { expected: a.dim(), got: b.dim() });
    }
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::DegenerateComparison);
    }
    let direct = scaled_residual(a, b, &F::one(), scale)?;
    if F::residual_ok(&direct, tol) {
        return Ok(Proportionality::Exact { residual: direct });
    }
    let (i, j) = b.argmax_modulus().expect("nonempty matrix");
    let factor = a.get(i, j).clone() / b.get(i, j).clone();
    let residual = scaled_residual(a, b, &factor, scale)?;
    if F::residual_ok(&residual, tol) && !factor.is_negligible() {
        Ok(Proportionality::Projective { factor, residual })
    } else {
        Ok(Proportionality::Unequal { residual: real_max::<F>(direct, residual) })
    }
}
