//! A seeded randomized run, as performed by `ybverify`, driven from code:
//! the JSON report, its determinism, and replay of a failure witness.

use yb_maps::cli::{replay, run, MapId, Mode, RunConfig};
use yb_maps::ybcore::CheckKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RunConfig::new(MapId::Soliton, CheckKind::YangBaxter).trials(200).seed(42).dim(3);
    let doc = run(&cfg)?;
    println!("{}", serde_json::to_string_pretty(&doc.json["summary"])?);
    assert_eq!(doc.without_timing(), run(&cfg)?.without_timing());
    println!("rerun with the same seed gives the same report");

    let float = run(&cfg.clone().mode(Mode::Float))?;
    println!("float mode worst residual: {}", float.result()["worst_residual"]);

    let negative = run(&RunConfig::new(MapId::AdlerPerturbed, CheckKind::YangBaxter).trials(100))?;
    println!("perturbed map exit code: {}", negative.exit_code);
    let witness = &negative.result()["witnesses"][0]["case"];
    let again = replay(MapId::AdlerPerturbed, Mode::Exact, witness, cfg.tolerance)?;
    println!("replayed witness: passed {} of {}", again["passed"], again["attempted"]);

    let chain = RunConfig::new(MapId::Crystal, CheckKind::ChainConserve).sites(4).steps(100);
    let chain_doc = run(&chain)?;
    println!("crystal chain conservation: {}", chain_doc.json["summary"]["status"]);
    Ok(())
}
