//! Characteristic coefficients, the scale-free invariants `I_k = c_kⁿ/c_nᵏ`,
//! and comparison of matrices up to a scalar factor.

use yb_maps::algebra::{
    characteristic_coefficients, equal_up_to_scalar, spectral_invariants, Rational, Scalar, SquareMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = SquareMatrix::<Rational>::from_ints([[6, 13], [3, 7]]);
    let c: Vec<String> = characteristic_coefficients(&m).iter().map(Scalar::render).collect();
    println!("det(t − M) = t² + c₁t + c₂ with (c₁, c₂) = {c:?}");

    let inv = spectral_invariants(&m)?;
    println!("I₁ = {}", inv.values[0]);

    // Scaling and conjugation leave the invariants unchanged.
    let scaled = m.scale(&Rational::from_ratio(-5, 2));
    let g = SquareMatrix::<Rational>::from_ints([[2, 1], [1, 1]]);
    let conj = m.conjugate_by(&g)?;
    assert_eq!(spectral_invariants(&scaled)?, inv);
    assert_eq!(spectral_invariants(&conj)?, inv);
    println!("invariant under M ↦ αM and M ↦ gMg⁻¹");

    let three = SquareMatrix::<Rational>::from_ints([[1, 2, 0], [0, 1, 4], [3, 0, 2]]);
    let inv3 = spectral_invariants(&three)?;
    println!("3×3 invariants: {:?}", inv3.values.iter().map(Scalar::render).collect::<Vec<_>>());

    println!("M vs 3M: {:?}", equal_up_to_scalar(&m.scale(&Rational::from_int(3)), &m, 0.0)?);
    println!("M vs Mᵀ: {:?}", equal_up_to_scalar(&m.transpose(), &m, 0.0)?);
    Ok(())
}
