//! Exact rationals backed by GMP.
//!
//! Chain evolutions in exact mode produce numerators and denominators with
//! tens of thousands of digits; every arithmetic step re-normalizes the
//! fraction, so a sub-quadratic gcd is what keeps such runs practical.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use rug::Integer;

/// An arbitrary-size rational, always reduced with a positive denominator.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(rug::Rational);

impl Rational {
    /// `num / den`; panics when `den` is zero.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Self {
        let den = den.into();
        assert!(den != 0, "zero denominator");
        Rational(rug::Rational::from((num.into(), den)))
    }

    pub fn from_integer(v: impl Into<Integer>) -> Self {
        Rational(rug::Rational::from(v.into()))
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// The exact value of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        rug::Rational::from_f64(x).map(Rational)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid rational literal")
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Integers `"-7"` and fractions `"5/3"`.
    fn from_str(s: &str) -> Result<Self, ParseRationalError> {
        let valid = |t: &str| {
            let t = t.strip_prefix(['-', '+']).unwrap_or(t);
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        if !valid(num) || !den.bytes().all(|b| b.is_ascii_digit()) || den.is_empty() {
            return Err(ParseRationalError);
        }
        let num = Integer::from_str(num.strip_prefix('+').unwrap_or(num)).map_err(|_| ParseRationalError)?;
        let den = Integer::from_str(den).map_err(|_| ParseRationalError)?;
        if den == 0 {
            return Err(ParseRationalError);
        }
        Ok(Rational::new(num, den))
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(rug::Rational::from($trait::$method(&self.0, &rhs.0)))
            }
        }
    };
}

binary_op!(Add, add);
binary_op!(Sub, sub);
binary_op!(Mul, mul);
binary_op!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(rug::Rational::new())
    }

    fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(rug::Rational::from(1))
    }
}
