//! The geometric crystal map on `Cⁿ`, restricted to the level sets
//! `X_λ = {Π x_k = λ}`, and its projective form through the embeddings
//! `z(x)`, `w(y)`.

use yb_maps::algebra::{Rational, Scalar};
use yb_maps::maps::{
    crystal_apply, crystal_embed, crystal_lax_a_inv, crystal_projective_form_check, CrystalMap, CrystalVector,
};
use yb_maps::ybcore::{check_lax, check_lax_dual};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = CrystalVector::<Rational>::from_ints(&[1, 2])?;
    let y = CrystalVector::<Rational>::from_ints(&[3, 5])?;
    let (lambda, mu) = (x.product(), y.product());

    let (xt, yt) = crystal_apply(&lambda, &mu, &x, &y)?;
    println!("x̃ = {:?}", xt.comps().iter().map(Scalar::render).collect::<Vec<_>>());
    println!("ỹ = {:?}", yt.comps().iter().map(Scalar::render).collect::<Vec<_>>());
    println!("labels kept: Π x̃ = {}, Π ỹ = {}", xt.product(), yt.product());

    let (z, w) = crystal_embed(&xt, &yt)?;
    println!("z(x̃) = {:?}, w(ỹ) = {:?}", z.normalized(), w.normalized());

    let form = crystal_projective_form_check(&lambda, &mu, &x, &y, 0.0);
    println!("projective form: passed {}/{}", form.passed, form.attempted);

    println!("A⁻¹(x; ζ=7) = {:?}", crystal_lax_a_inv(&x, &Rational::from_int(7)));
    let zeta = Rational::from_int(7);
    let lax = check_lax(&CrystalMap, &lambda, &mu, &zeta, &x, &y, 0.0);
    let dual = check_lax_dual(&CrystalMap, &lambda, &mu, &zeta, &x, &y, 0.0);
    println!("Lax: {}/{}, dual Lax: {}/{}", lax.passed, lax.attempted, dual.passed, dual.attempted);

    // Inputs whose product disagrees with the label are rejected.
    if let Err(e) = crystal_apply(&Rational::from_int(3), &mu, &x, &y) {
        println!("wrong label: {e}");
    }
    Ok(())
}
