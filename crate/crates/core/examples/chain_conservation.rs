//! A periodic Adler chain: the monodromy is invariant under single
//! exchanges, and its spectral invariants survive the transfer dynamics.

use yb_maps::algebra::{ProjectivePoint, Rational, Scalar};
use yb_maps::chain::{ChainState, TRANSFER_DYNAMICS};
use yb_maps::maps::AdlerMap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Rational::from_int;
    let sites = [(1, 3), (2, 1), (4, 7), (-3, 2)].iter().map(|&(x, l)| (ProjectivePoint::affine(q(x)), q(l))).collect();
    let chain = ChainState::from_pairs(AdlerMap, sites)?;

    let zeta = q(0);
    println!("monodromy(ζ=0)            = {:?}", chain.monodromy(&zeta)?);
    println!("after exchanging sites 1,2 = {:?}", chain.apply_adjacent(0)?.monodromy(&zeta)?);

    let zetas = vec![q(0), q(4), q(9)];
    let initial: Vec<_> = chain.integrals(&zetas).into_iter().collect::<Result<_, _>>()?;
    println!("dynamics: {TRANSFER_DYNAMICS}");
    let mut state = chain.clone();
    for step in 1..=10 {
        state = state.transfer_step()?;
        let now: Vec<_> = state.integrals(&zetas).into_iter().collect::<Result<_, _>>()?;
        let fields: Vec<String> =
            state.sites().iter().map(|s| s.field.affine_value().map_or("∞".into(), |v| v.render())).collect();
        println!("step {step:>2}: fields {fields:?} integrals conserved: {}", now == initial);
    }
    Ok(())
}
