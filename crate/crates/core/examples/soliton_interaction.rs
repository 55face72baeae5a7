//! Two-soliton interaction of the matrix KdV equation as a map on pairs of
//! polarization vectors `(ξ, η)` with rank-one projectors `P = ξηᵀ/⟨ξ,η⟩`.

use yb_maps::algebra::{Rational, Scalar};
use yb_maps::maps::{soliton_apply, soliton_lax, RankOnePair, SolitonMap};
use yb_maps::ybcore::{check_lax, check_reversibility, check_yang_baxter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Rational::from_int;
    let (l1, l2, l3) = (q(1), q(2), q(3));
    let p1 = RankOnePair::from_ints(&[1, 0], &[1, 1])?;
    let p2 = RankOnePair::from_ints(&[0, 1], &[1, 1])?;
    let p3 = RankOnePair::from_ints(&[1, 1], &[2, -1])?;

    let (p1t, p2t) = soliton_apply(&l1, &l2, &p1, &p2)?;
    println!("P̃₁ = {:?}", p1t.projector());
    println!("P̃₂ = {:?}", p2t.projector());

    let zeta = q(5);
    let lax = soliton_lax(&p1, &l1, &zeta)?;
    println!("L(ξ₁,η₁; ζ=5) = {lax:?}, det = {}", lax.determinant().render());

    let yb = check_yang_baxter(&SolitonMap, (&l1, &l2, &l3), (&p1, &p2, &p3), 0.0);
    let rev = check_reversibility(&SolitonMap, &l1, &l2, &p1, &p2, 0.0);
    let lax = check_lax(&SolitonMap, &l1, &l2, &zeta, &p1, &p2, 0.0);
    for report in [&yb, &rev, &lax] {
        println!("{:<14} passed {}/{}", report.check, report.passed, report.attempted);
    }

    // Equal velocities are outside the domain of the map.
    if let Err(e) = soliton_apply(&l1, &l1, &p1, &p2) {
        println!("R(1, 1): {e}");
    }
    Ok(())
}
