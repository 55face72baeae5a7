//! Parameter-dependent Yang-Baxter maps and their Lax matrices.
//!
//! The crate implements three maps (Adler's map on `CP^1`, the matrix KdV
//! soliton interaction, and the geometric crystal map), the action matrices
//! that make each of them a map of the form `x̃ = B(y,μ,λ)[x]`,
//! `ỹ = A(x,λ,μ)[y]`, and mechanical checks of
//!
//! * the parameter-dependent Yang-Baxter relation,
//! * reversibility `R₂₁(μ,λ) R(λ,μ) = Id`,
//! * the Lax relation for `A` and its dual for `B`,
//! * conservation of monodromy spectral invariants under transfer dynamics.
//!
//! Every computation runs over one of two scalar backends: exact rationals,
//! where the identities are decided without tolerance, or complex floats.
//!
//! ```
//! use yb_maps::algebra::{ProjectivePoint, Rational, Scalar};
//! use yb_maps::maps::AdlerMap;
//! use yb_maps::ybcore::check_yang_baxter;
//!
//! let q = Rational::from_int;
//! let p = |v| ProjectivePoint::affine(q(v));
//! let report = check_yang_baxter(&AdlerMap, (&q(2), &q(5), &q(7)), (&p(1), &p(2), &p(3)), 0.0);
//! assert!(report.all_passed());
//! ```

pub mod algebra;
pub mod chain;
pub mod cli;
pub mod error;
pub mod maps;
pub mod ybcore;

pub use error::{AlgebraError, ChainError, MapError};
