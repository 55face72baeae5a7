//! Scalars, matrices, projective points and spectral data shared by every
//! other module.

pub mod matrix;
pub mod projective;
pub mod rational;
pub mod scalar;
pub mod spectral;

pub use matrix::SquareMatrix;
pub use projective::{mobius_apply, projective_apply, ProjectivePoint};
pub use scalar::{real_max, relative_difference, Backend, Complex, Rational, Scalar, FLOAT_SINGULAR_EPS};
pub use spectral::{
    characteristic_coefficients, equal_up_to_scalar, equal_up_to_scalar_relative_to, spectral_invariants,
    Proportionality, SpectralInvariants,
};
