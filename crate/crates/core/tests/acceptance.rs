//! Acceptance suite: one line per criterion, non-zero exit status if any
//! criterion fails. Run with `cargo test --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use yb_maps::algebra::{Complex, ProjectivePoint, Rational, Scalar, SquareMatrix};
use yb_maps::chain::ChainState;
use yb_maps::cli::generate::{generate_instance, trial_rng, SiteSource};
use yb_maps::cli::{run, ChainCase, MapId, Mode, ReportDocument, RunConfig, EXIT_PASS};
use yb_maps::maps::{
    adler_apply, adler_lax, crystal_apply, crystal_embed, crystal_lax_a_inv, crystal_lax_b_inv, crystal_p,
    soliton_apply, AdlerMap, CrystalMap, CrystalVector, RankOnePair, SolitonMap,
};
use yb_maps::ybcore::{check_map_form, CheckCase, CheckKind, Outcome, YangBaxterMap};

/// Float residual bound for single-instance checks.
const CHECK_TOL: f64 = 1e-9;
/// Float bound on the relative drift of chain integrals over a run.
const CHAIN_TOL: f64 = 1e-8;
/// Minimum failure rate of the negative controls.
const CONTROL_FAIL_RATE: f64 = 0.99;
const INSTANCES: u64 = 1000;
const CONTROL_INSTANCES: u64 = 100;
const CHAIN_STEPS: usize = 100;
const SEED: u64 = 20240611;
/// Seeds of the float chain runs, one per map, each a 4-site chain.
/// Seeded float chains per instance set and chain length.
const FLOAT_CHAINS: u64 = 10;

/// `(map, dim)` pairs every check is run on.
const INSTANCE_SETS: [(MapId, usize); 6] = [
    (MapId::Adler, 2),
    (MapId::Soliton, 2),
    (MapId::Soliton, 3),
    (MapId::Crystal, 2),
    (MapId::Crystal, 3),
    (MapId::Crystal, 4),
];

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

fn verify(map: MapId, check: CheckKind, mode: Mode, dim: usize, trials: u64) -> ReportDocument {
    let tol = CHECK_TOL;
    let cfg = RunConfig::new(map, check).mode(mode).dim(dim).trials(trials).seed(SEED).tolerance(tol);
    run(&cfg).expect("valid configuration")
}

fn worst_float(doc: &ReportDocument) -> f64 {
    doc.result()["worst_residual"].as_str().and_then(|s| s.parse().ok()).unwrap_or(f64::INFINITY)
}

/// Runs `check` on every instance set in both modes: exact residual must be
/// identically zero, float residual at most [`CHECK_TOL`].
fn both_modes(check: CheckKind, sets: &[(MapId, usize)], unit_factor: bool) -> Verdict {
    let mut pass = true;
    let mut float_worst = 0.0f64;
    let mut notes = Vec::new();
    for &(map, dim) in sets {
        let exact = verify(map, check, Mode::Exact, dim, INSTANCES);
        let float = verify(map, check, Mode::Float, dim, INSTANCES);
        let exact_ok = exact.exit_code == EXIT_PASS && exact.result()["worst_residual"] == "0";
        let float_ok = float.exit_code == EXIT_PASS && worst_float(&float) <= CHECK_TOL;
        let factors_ok =
            !unit_factor || (exact.result()["non_unit_factors"] == 0 && float.result()["non_unit_factors"] == 0);
        if !(exact_ok && float_ok && factors_ok) {
            pass = false;
            notes.push(format!("{map}/{dim}: exact {} float {}", exact.json["summary"], float.json["summary"]));
        }
        float_worst = float_worst.max(worst_float(&float));
    }
    let mut detail = format!(
        "{} sets x {INSTANCES} instances, exact worst residual 0 required, float worst {float_worst:.3e} (tol {CHECK_TOL:e})",
        sets.len()
    );
    if unit_factor {
        detail.push_str(", factor 1 everywhere");
    }
    for n in notes {
        detail.push_str("; ");
        detail.push_str(&n);
    }
    Verdict::new(pass, detail)
}

fn criterion_1() -> Verdict {
    both_modes(CheckKind::YangBaxter, &INSTANCE_SETS, false)
}

fn criterion_2() -> Verdict {
    both_modes(CheckKind::Reversibility, &INSTANCE_SETS, false)
}

fn criterion_3() -> Verdict {
    both_modes(CheckKind::Lax, &INSTANCE_SETS, true)
}

fn criterion_4() -> Verdict {
    let dual = both_modes(CheckKind::LaxDual, &INSTANCE_SETS, true);
    // For the crystal map B⁻¹(v; c)ᵀ = A⁻¹(v; c), so the dual relation is the
    // transposed primal one and both runs must report identical outcomes.
    let mut same = true;
    let mut transposes = 0u64;
    for dim in 2..=4 {
        for mode in [Mode::Exact, Mode::Float] {
            let primal = verify(MapId::Crystal, CheckKind::Lax, mode, dim, INSTANCES);
            let dual = verify(MapId::Crystal, CheckKind::LaxDual, mode, dim, INSTANCES);
            for key in ["attempted", "passed", "failed", "skipped", "non_unit_factors"] {
                same &= primal.result()[key] == dual.result()[key];
            }
            same &= mode == Mode::Float || primal.result()["worst_residual"] == dual.result()["worst_residual"];
        }
        for i in 0..INSTANCES {
            let mut rng = trial_rng(SEED, i);
            let (v, c) = SiteSource::<Rational>::draw_site(&CrystalMap, &mut rng, dim);
            let zeta = Rational::from_ratio(i as i64 % 17 - 8, 3);
            let b = CrystalMap.lax_b(&v, &c, &zeta);
            let a = CrystalMap.lax_a(&v, &c, &zeta);
            match (a, b) {
                (Ok(a), Ok(b)) => same &= b.transpose() == a,
                (a, b) => same &= a.is_err() && b.is_err(),
            }
            same &= crystal_lax_b_inv(&v, &zeta).transpose() == crystal_lax_a_inv(&v, &zeta);
            transposes += 1;
        }
    }
    Verdict::new(
        dual.pass && same,
        format!(
            "{}; crystal dual report identical to primal (n=2,3,4, both modes), Bᵀ = A on {transposes} draws",
            dual.detail
        ),
    )
}

fn criterion_5() -> Verdict {
    let mut pass = true;
    let mut counts = Vec::new();
    for (map, dim) in [(MapId::Adler, 2), (MapId::Crystal, 2), (MapId::Crystal, 3), (MapId::Crystal, 4)] {
        let doc = verify(map, CheckKind::ProjectiveForm, Mode::Exact, dim, INSTANCES);
        pass &= doc.exit_code == EXIT_PASS && doc.result()["worst_residual"] == "0";
        counts.push(format!("{map}/{dim} {}", doc.result()["passed"]));
    }

    // The worked instance: x = (1,2), y = (3,5) gives B[(1:1)] = (6:5) and A[(5:1)] = (25:6).
    let q = Rational::from_int;
    let (x, y) = (CrystalVector::from_ints(&[1, 2]).unwrap(), CrystalVector::from_ints(&[3, 5]).unwrap());
    let (z, w) = crystal_embed(&x, &y).unwrap();
    let bz = crystal_lax_b_inv(&y, &q(2)).inverse().unwrap().mul_vec(z.coords()).unwrap();
    let aw = crystal_lax_a_inv(&x, &q(15)).inverse().unwrap().mul_vec(w.coords()).unwrap();
    let line = |v: &[Rational], a: i64, b: i64| v[0].clone() * q(b) == v[1].clone() * q(a);
    let fixture =
        line(&bz, 6, 5) && line(&aw, 25, 6) && check_map_form(&CrystalMap, &q(2), &q(15), &x, &y, 0.0).all_passed();
    Verdict::new(
        pass && fixture,
        format!(
            "exact residual 0 on {} instances (passed: {}); (6:5)/(25:6) fixture {}",
            INSTANCES,
            counts.join(", "),
            if fixture { "reproduced" } else { "MISMATCH" }
        ),
    )
}

fn criterion_6() -> Verdict {
    use common::{adler as o_adler, crystal as o_crystal, q as oq, qi, soliton as o_soliton, Q};
    let r = Rational::from_int;
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let ints = |v: &[i64]| v.iter().map(|&c| qi(c)).collect::<Vec<Q>>();
    let pt = |v: i64| ProjectivePoint::affine(r(v));

    let oracle = o_adler(&qi(3), &qi(1), &qi(1), &qi(2)).unwrap();
    let (xt, yt) = adler_apply(&r(3), &r(1), &pt(1), &pt(2)).unwrap();
    checks.push((
        "adler (4/3, 5/3)",
        oracle == (oq(4, 3), oq(5, 3))
            && common::affine(&xt) == Some(oracle.0)
            && common::affine(&yt) == Some(oracle.1),
    ));

    let first = (ints(&[1, 0]), ints(&[1, 0]));
    let second = (ints(&[1, 1]), ints(&[0, 1]));
    let oracle = o_soliton(&qi(2), &qi(1), &first, &second).unwrap();
    let a = RankOnePair::<Rational>::from_ints(&[1, 0], &[1, 0]).unwrap();
    let b = RankOnePair::<Rational>::from_ints(&[1, 1], &[0, 1]).unwrap();
    let (at, bt) = soliton_apply(&r(2), &r(1), &a, &b).unwrap();
    let lib =
        ((common::lib_vec(at.xi()), common::lib_vec(at.eta())), (common::lib_vec(bt.xi()), common::lib_vec(bt.eta())));
    let pinned = ((ints(&[1, 0]), ints(&[1, 2])), (ints(&[-3, 1]), ints(&[0, 1])));
    checks.push(("soliton quadruple", oracle == pinned && lib == pinned));

    let (x, y) = (CrystalVector::from_ints(&[1, 2]).unwrap(), CrystalVector::from_ints(&[3, 5]).unwrap());
    let oracle = o_crystal(&ints(&[1, 2]), &ints(&[3, 5])).unwrap();
    let (xt, yt) = crystal_apply(&r(2), &r(15), &x, &y).unwrap();
    let pinned = (vec![oq(5, 6), oq(12, 5)], vec![oq(18, 5), oq(25, 6)]);
    checks.push((
        "crystal images",
        oracle == pinned && (common::lib_vec(xt.comps()), common::lib_vec(yt.comps())) == pinned,
    ));

    let p_lib: Vec<Q> = (1..=2).map(|j| common::from_lib(&crystal_p(j, &x, &y).unwrap())).collect();
    let p_ref: Vec<Q> = (1..=2).map(|j| common::crystal_p(j, &ints(&[1, 2]), &ints(&[3, 5]))).collect();
    checks.push(("crystal P-values", p_ref == ints(&[5, 6]) && p_lib == p_ref));

    let b_ref = common::crystal_b_inv(&ints(&[3, 5]), &qi(2));
    let a_ref = common::crystal_a_inv(&ints(&[1, 2]), &qi(15));
    checks.push((
        "crystal B⁻¹/A⁻¹",
        b_ref == common::m(&[&[3, -1], &[-2, 5]])
            && a_ref == common::m(&[&[1, -15], &[-1, 2]])
            && common::matrix_from_lib(&crystal_lax_b_inv(&y, &r(2))) == b_ref
            && common::matrix_from_lib(&crystal_lax_a_inv(&x, &r(15))) == a_ref,
    ));

    let mono_ref =
        common::mat_mul(&common::adler_lax(&qi(1), &qi(3), &qi(0)), &common::adler_lax(&qi(2), &qi(1), &qi(0)));
    let chain = ChainState::from_pairs(AdlerMap, vec![(pt(1), r(3)), (pt(2), r(1))]).unwrap();
    let mono = chain.monodromy(&r(0)).unwrap();
    checks.push((
        "monodromy [[6,13],[3,7]]",
        mono_ref == common::m(&[&[6, 13], &[3, 7]])
            && common::matrix_from_lib(&mono) == mono_ref
            && mono == SquareMatrix::from_ints([[6, 13], [3, 7]]),
    ));
    let i1 = chain.integrals(&[r(0)]).remove(0).unwrap();
    checks.push((
        "I₁ = 169/3",
        common::invariants(&mono_ref) == vec![oq(169, 3)] && i1.values == vec![Rational::from_ratio(169, 3)],
    ));
    checks.push(("adler Möbius 5/3", {
        let m = adler_lax(&pt(1), &r(3), &r(1)).unwrap();
        common::mobius(&common::matrix_from_lib(&m), &qi(2)) == Some(oq(5, 3))
    }));

    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Verdict::new(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} fixtures recomputed by the reference and matched exactly", checks.len())
        } else {
            format!("mismatched: {}", failed.join(", "))
        },
    )
}

fn small_chains() -> (ChainState<Rational, AdlerMap>, ChainState<Rational, SolitonMap>, ChainState<Rational, CrystalMap>)
{
    let r = Rational::from_int;
    let adler = ChainState::from_pairs(
        AdlerMap,
        [(1, 3), (2, 1), (4, 7), (-3, 2)].iter().map(|&(x, l)| (ProjectivePoint::affine(r(x)), r(l))).collect(),
    )
    .unwrap();
    let soliton_sites: [(&[i64], &[i64], i64); 4] =
        [(&[1, 2], &[1, 1], 1), (&[2, -1], &[1, 3], 2), (&[1, 1], &[3, -1], -3), (&[1, 3], &[2, 1], 5)];
    let soliton = ChainState::from_pairs(
        SolitonMap,
        soliton_sites.iter().map(|&(xi, eta, l)| (RankOnePair::from_ints(xi, eta).unwrap(), r(l))).collect(),
    )
    .unwrap();
    let crystal_sites: [&[i64]; 4] = [&[1, 2, 1], &[2, 1, 3], &[1, 3, 2], &[3, 1, 1]];
    let crystal = ChainState::from_pairs(
        CrystalMap,
        crystal_sites
            .iter()
            .map(|c| {
                let v = CrystalVector::from_ints(c).unwrap();
                let label = v.product();
                (v, label)
            })
            .collect(),
    )
    .unwrap();
    (adler, soliton, crystal)
}

fn exact_chain<M: SiteSource<Rational> + SiteSource<Complex>>(chain: ChainState<Rational, M>) -> (bool, String) {
    let zetas = vec![Rational::from_ratio(1, 3), Rational::from_ratio(11, 2), Rational::from_ratio(-17, 7)];
    let name = YangBaxterMap::<Rational>::name(chain.map());
    let case = ChainCase { chain, zetas, steps: CHAIN_STEPS };
    match case.evaluate(0.0) {
        Outcome::Pass { residual, .. } => (residual == Rational::from_int(0), format!("{name} exact drift {residual}")),
        other => (false, format!("{name} exact {other:?}")),
    }
}

fn criterion_7() -> Verdict {
    let (adler, soliton, crystal) = small_chains();
    let mut pass = true;
    let mut parts = Vec::new();
    for (ok, note) in [exact_chain(adler), exact_chain(soliton), exact_chain(crystal)] {
        pass &= ok;
        parts.push(note);
    }
    let mut chains = 0;
    let mut worst = 0.0f64;
    for (map, dim) in INSTANCE_SETS {
        for sites in 4..=6 {
            let cfg = RunConfig::new(map, CheckKind::ChainConserve)
                .mode(Mode::Float)
                .dim(dim)
                .sites(sites)
                .steps(CHAIN_STEPS)
                .zeta_samples(3)
                .trials(FLOAT_CHAINS)
                .seed(SEED)
                .tolerance(CHAIN_TOL);
            let doc = run(&cfg).expect("valid configuration");
            let failed = doc.json["summary"]["failed"].as_u64().unwrap();
            if doc.exit_code != EXIT_PASS {
                pass = false;
                parts.push(format!("{map}/{dim} with {sites} sites: {failed} float chains over tolerance"));
            }
            chains += doc.json["summary"]["attempted"].as_u64().unwrap();
            worst = worst.max(worst_float(&doc));
        }
    }
    pass &= worst <= CHAIN_TOL;
    parts.push(format!("float worst drift {worst:.3e} over {chains} chains of 4-6 sites"));
    Verdict::new(pass, format!("{CHAIN_STEPS} steps, 3 ζ-samples: {} (float tol {CHAIN_TOL:e})", parts.join(", ")))
}

fn criterion_8() -> Verdict {
    let yb = verify(MapId::AdlerPerturbed, CheckKind::YangBaxter, Mode::Exact, 2, CONTROL_INSTANCES);
    let rev = verify(MapId::Shift, CheckKind::Reversibility, Mode::Exact, 2, CONTROL_INSTANCES);
    let rate = |d: &ReportDocument| d.json["summary"]["failed"].as_u64().unwrap() as f64 / CONTROL_INSTANCES as f64;
    let (a, b) = (rate(&yb), rate(&rev));
    Verdict::new(
        a >= CONTROL_FAIL_RATE && b >= CONTROL_FAIL_RATE,
        format!(
            "perturbed adler fails yb on {:.0}%, shift fails reversibility on {:.0}% of {CONTROL_INSTANCES} (need ≥ {:.0}%)",
            a * 100.0,
            b * 100.0,
            CONTROL_FAIL_RATE * 100.0
        ),
    )
}

fn reversibility_cases<M: SiteSource<Rational>>(map: &M, dim: usize) -> Vec<(Rational, Rational, M::Field, M::Field)> {
    (0..INSTANCES)
        .map(|i| {
            let mut rng = trial_rng(SEED, i);
            match generate_instance::<Rational, M, _>(map, CheckKind::Reversibility, &mut rng, dim).unwrap() {
                CheckCase::Reversibility { lambda, mu, x, y } => (lambda, mu, x, y),
                _ => unreachable!("generator returns the requested kind"),
            }
        })
        .collect()
}

fn criterion_9() -> Verdict {
    let mut violations = 0u64;
    let mut checked = 0u64;

    for (l, m, x, y) in reversibility_cases(&AdlerMap, 2) {
        let (xt, yt) = adler_apply(&l, &m, &x, &y).unwrap();
        let sum =
            |a: &ProjectivePoint<Rational>, b: &ProjectivePoint<Rational>| Some(a.affine_value()? + b.affine_value()?);
        violations += u64::from(sum(&xt, &yt).is_none() || sum(&xt, &yt) != sum(&x, &y));
        checked += 1;
    }

    for dim in 2..=3 {
        for (l, m, x, y) in reversibility_cases(&SolitonMap, dim) {
            // Zero output pairings are singular outputs, not violations.
            let Ok((a, b)) = soliton_apply(&l, &m, &x, &y) else { continue };
            for p in [a.projector(), b.projector()] {
                violations += u64::from(&p * &p != p || p.trace() != Rational::from_int(1));
            }
            checked += 1;
        }
    }

    for dim in 2..=4 {
        for (l, m, x, y) in reversibility_cases(&CrystalMap, dim) {
            let (xt, yt) = crystal_apply(&l, &m, &x, &y).unwrap();
            let products = (0..dim)
                .all(|j| xt.comps()[j].clone() * yt.comps()[j].clone() == x.comps()[j].clone() * y.comps()[j].clone());
            violations += u64::from(!products || xt.product() != l || yt.product() != m);
            checked += 1;
        }
    }

    Verdict::new(
        violations == 0 && checked >= 6 * INSTANCES * 99 / 100,
        format!(
            "{checked} instances (adler sum, soliton projectors N=2,3, crystal products n=2,3,4), {violations} violations"
        ),
    )
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    // libtest flags such as `--nocapture` are accepted and ignored.
    let criteria: [Criterion; 9] = [
        ("yang-baxter relation", criterion_1),
        ("reversibility", criterion_2),
        ("lax relation", criterion_3),
        ("dual lax relation", criterion_4),
        ("map-form consistency", criterion_5),
        ("worked fixtures", criterion_6),
        ("conservation of integrals", criterion_7),
        ("negative controls", criterion_8),
        ("structural invariants", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        failures += usize::from(!verdict.pass);
        println!(
            "criterion {} {} {name}: {} [{:.1}s]",
            i + 1,
            if verdict.pass { "PASS" } else { "FAIL" },
            verdict.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
