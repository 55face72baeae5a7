//! Adler's map on the projective line: one application, the pole, the point
//! at infinity, and the Lax matrix that refactorizes under the map.

use yb_maps::algebra::{ProjectivePoint, Rational, Scalar};
use yb_maps::maps::{adler_apply, adler_lax};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Rational::from_int;
    let (lambda, mu) = (q(3), q(1));
    let (x, y) = (ProjectivePoint::affine(q(1)), ProjectivePoint::affine(q(2)));

    let (xt, yt) = adler_apply(&lambda, &mu, &x, &y)?;
    println!("R(3, 1)(1, 2) = ({}, {})", show(&xt), show(&yt));

    // The sum x + y is conserved by the map.
    let sum = xt.affine_value().unwrap() + yt.affine_value().unwrap();
    println!("x̃ + ỹ = {sum}");

    // Lax relation: A(x, λ) A(y, μ) = A(ỹ, μ) A(x̃, λ) at any spectral parameter.
    let zeta = q(0);
    let lhs = adler_lax(&x, &lambda, &zeta)?.try_mul(&adler_lax(&y, &mu, &zeta)?)?;
    let rhs = adler_lax(&yt, &mu, &zeta)?.try_mul(&adler_lax(&xt, &lambda, &zeta)?)?;
    println!("A(x,λ)A(y,μ) = {lhs:?}");
    println!("A(ỹ,μ)A(x̃,λ) = {rhs:?}");
    assert_eq!(lhs, rhs);

    // x + y = 0 is the pole of the map.
    match adler_apply(&lambda, &mu, &x, &ProjectivePoint::affine(q(-1))) {
        Err(e) => println!("R(3, 1)(1, -1): {e}"),
        Ok(_) => unreachable!("the pole is rejected"),
    }

    // Points at infinity are handled through homogeneous coordinates.
    let (xt, yt) = adler_apply(&lambda, &mu, &ProjectivePoint::infinity(), &y)?;
    println!("R(3, 1)(∞, 2) = ({}, {})", show(&xt), show(&yt));
    Ok(())
}

fn show(p: &ProjectivePoint<Rational>) -> String {
    p.affine_value().map_or_else(|| "∞".to_string(), |v| v.render())
}
