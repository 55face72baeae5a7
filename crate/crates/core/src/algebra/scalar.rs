//! Field backends.
//!
//! Every computation in the crate is generic over a [`Scalar`]. Two backends
//! exist: [`Rational`] (arbitrary-size exact rationals, always reduced with a
//! positive denominator) and [`Complex`] (double-precision complex numbers).
//! The backend is a type parameter, so a single computation cannot mix them.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Exact rational backend.
pub use crate::algebra::rational::Rational;

/// Floating point backend.
pub type Complex = num_complex::Complex64;

/// Moduli at or below this are treated as zero by the float backend when
/// deciding whether a value is a pole or a degenerate pivot.
pub const FLOAT_SINGULAR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    ExactRational,
    ComplexFloat,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::ExactRational => "exact-rational",
            Backend::ComplexFloat => "complex-float",
        }
    }
}

/// A field element together with the operations the verification code needs.
///
/// `Real` is the type of moduli and residuals: an exact rational for the
/// rational backend, `f64` for the complex one.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Real: Clone + Debug + PartialOrd + Send + Sync + 'static;

    const BACKEND: Backend;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    fn modulus(&self) -> Self::Real;

    fn real_zero() -> Self::Real;

    /// `a / b` on moduli; callers guarantee `b` is not zero.
    fn real_ratio(a: &Self::Real, b: &Self::Real) -> Self::Real;

    fn real_to_f64(r: &Self::Real) -> f64;

    /// Nearest real of this backend to `x` (exact for the rational backend).
    fn real_from_f64(x: f64) -> Self::Real;

    /// Whether a residual is acceptable. The exact backend ignores `tol` and
    /// accepts only an identically zero residual.
    fn residual_ok(r: &Self::Real, tol: f64) -> bool;

    /// Zero test used for poles, pivots and degenerate inputs.
    fn is_negligible(&self) -> bool;

    /// Exact fraction string, or 17 significant digits for floats.
    fn render(&self) -> String;

    fn render_real(r: &Self::Real) -> String;

    fn parse(s: &str) -> Result<Self, AlgebraError>;

    /// The primitive integer vector on the line through `v`: denominators
    /// cleared, common factor removed, first nonzero entry positive. Only
    /// exact backends have one; `None` also for the zero vector.
    fn primitive_representative(_v: &[Self]) -> Option<Vec<Self>> {
        None
    }

    fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_negligible() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(Self::one() / self.clone())
        }
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    type Real = Rational;

    const BACKEND: Backend = Backend::ExactRational;

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den)
    }

    fn modulus(&self) -> Rational {
        self.abs()
    }

    fn real_zero() -> Rational {
        Rational::zero()
    }

    fn real_ratio(a: &Rational, b: &Rational) -> Rational {
        a / b
    }

    fn real_to_f64(r: &Rational) -> f64 {
        r.to_f64()
    }

    fn real_from_f64(x: f64) -> Rational {
        Rational::from_f64(x).expect("finite real")
    }

    fn residual_ok(r: &Rational, _tol: f64) -> bool {
        r.is_zero()
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn primitive_representative(v: &[Self]) -> Option<Vec<Self>> {
        let first = v.iter().find(|c| !c.is_zero())?;
        let mut den = Integer::from(1);
        for c in v {
            den.lcm_mut(c.denom());
        }
        let ints: Vec<Integer> = v.iter().map(|c| c.numer() * Integer::from(&den / c.denom())).collect();
        let mut content = Integer::new();
        for n in &ints {
            content.gcd_mut(n);
        }
        if first.numer().cmp0() == std::cmp::Ordering::Less {
            content = -content;
        }
        Some(ints.into_iter().map(|n| Rational::from_integer(n / &content)).collect())
    }

    fn render_real(r: &Rational) -> String {
        r.to_string()
    }

    fn parse(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        if let Ok(v) = Rational::from_str(s) {
            return Ok(v);
        }
        // Plain decimals such as "0.25" are accepted and converted exactly.
        parse_decimal(s).ok_or_else(|| AlgebraError::Parse(s.to_string()))
    }
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let num = Integer::from_str(&digits).ok()?;
    let shift = exp - frac_part.len() as i32;
    let scale = Integer::from(Integer::u_pow_u(10, shift.unsigned_abs()));
    let v = if shift >= 0 { Rational::from_integer(num * scale) } else { Rational::new(num, scale) };
    Some(if neg { -v } else { v })
}

impl Scalar for Complex {
    type Real = f64;

    const BACKEND: Backend = Backend::ComplexFloat;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex::new(num as f64 / den as f64, 0.0)
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn real_zero() -> f64 {
        0.0
    }

    fn real_ratio(a: &f64, b: &f64) -> f64 {
        a / b
    }

    fn real_to_f64(r: &f64) -> f64 {
        *r
    }

    fn real_from_f64(x: f64) -> f64 {
        x
    }

    fn residual_ok(r: &f64, tol: f64) -> bool {
        r.is_finite() && *r <= tol
    }

    fn is_negligible(&self) -> bool {
        // NaN counts as negligible so it is reported as a singularity.
        let n = self.norm();
        n.is_nan() || n <= FLOAT_SINGULAR_EPS
    }

    fn render(&self) -> String {
        if self.im == 0.0 {
            format!("{:.16e}", self.re)
        } else {
            format!("{:.16e}{:+.16e}i", self.re, self.im)
        }
    }

    fn render_real(r: &f64) -> String {
        format!("{r:.16e}")
    }

    fn parse(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        Complex::from_str(s).map_err(|_| AlgebraError::Parse(s.to_string()))
    }
}

/// Relative difference of two scalars, `|a - b| / max(|a|, |b|)`, zero when
/// both vanish.
pub fn relative_difference<F: Scalar>(a: &F, b: &F) -> F::Real {
    let diff = (a.clone() - b.clone()).modulus();
    let (ma, mb) = (a.modulus(), b.modulus());
    let scale = if ma >= mb { ma } else { mb };
    if scale == F::real_zero() {
        F::real_zero()
    } else {
        F::real_ratio(&diff, &scale)
    }
}

/// Larger of two moduli.
pub fn real_max<F: Scalar>(a: F::Real, b: F::Real) -> F::Real {
    if b > a {
        b
    } else {
        a
    }
}
