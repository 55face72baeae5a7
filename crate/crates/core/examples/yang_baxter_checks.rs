//! Every checker on every map, plus the two negative controls. Failing
//! checks carry witnesses whose `case` replays the failure exactly.

use yb_maps::algebra::{ProjectivePoint, Rational, Scalar};
use yb_maps::maps::{AdlerMap, CrystalMap, CrystalVector};
use yb_maps::ybcore::controls::{PerturbedAdler, Shift};
use yb_maps::ybcore::{
    check_case, check_lax, check_lax_dual, check_reversibility, check_yang_baxter, CheckCase, CheckReport,
};

fn summary(label: &str, r: &CheckReport<Rational>) {
    println!("{label:<32} attempted {:>2}  passed {:>2}  skipped {:>2}", r.attempted, r.passed, r.skipped);
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Rational::from_int;
    let p = |v| ProjectivePoint::affine(q(v));
    let (l, m, n) = (q(2), q(5), q(7));
    let (x, y, z) = (p(1), p(2), p(3));

    summary("adler yb", &check_yang_baxter(&AdlerMap, (&l, &m, &n), (&x, &y, &z), 0.0));
    summary("adler reversibility", &check_reversibility(&AdlerMap, &l, &m, &x, &y, 0.0));
    summary("adler lax", &check_lax(&AdlerMap, &l, &m, &q(11), &x, &y, 0.0));
    summary("adler lax-dual", &check_lax_dual(&AdlerMap, &m, &n, &q(11), &y, &z, 0.0));

    let cx = CrystalVector::from_ints(&[1, 2, 3])?;
    let cy = CrystalVector::from_ints(&[2, 1, 1])?;
    let cz = CrystalVector::from_ints(&[1, 1, 5])?;
    let (a, b, c) = (cx.product(), cy.product(), cz.product());
    summary("crystal yb", &check_yang_baxter(&CrystalMap, (&a, &b, &c), (&cx, &cy, &cz), 0.0));

    // Negative controls.
    let bad = check_yang_baxter(&PerturbedAdler, (&l, &m, &n), (&x, &y, &z), 0.0);
    summary("perturbed adler yb", &bad);
    let shift = check_reversibility(&Shift, &l, &m, &x, &y, 0.0);
    summary("shift reversibility", &shift);

    // Singular inputs are skipped, not failed.
    summary("adler reversibility at pole", &check_reversibility(&AdlerMap, &l, &m, &x, &p(-1), 0.0));

    let witness = bad.failures().next().expect("the perturbed map fails");
    println!("witness: {}", serde_json::to_string(&witness.case)?);
    let case: CheckCase<Rational, ProjectivePoint<Rational>> = CheckCase::from_json(&witness.case)?;
    let replayed = check_case(&PerturbedAdler, &case, 0.0);
    println!("replayed witness fails again: {}", replayed.failed() == 1);
    Ok(())
}
