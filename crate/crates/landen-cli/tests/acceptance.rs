//! Acceptance suite: one test per criterion, each ending with a PASS line
//! (run with `--nocapture` to see them). Tolerances are pinned in the
//! assertions; seeded sampling makes every run identical.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use landen_core::landen::{
    check_identity_first_via, check_identity_second_via, check_transf, check_transf_complement,
    psi_descend,
};
use landen_core::regions::{
    classify_thm21, classify_thm24, seq_probe, Branch, Monotonicity, SeqSpec,
};
use landen_core::specialfn::{
    closed_form, elliptic_k, gauss_2f1, BesselParams, ClosedForm, EllipticMethod, EvalConfig,
    HyperTriple, KummerParams,
};
use landen_core::verify::{
    elementary_checks, sweep_ineq9, sweep_thm21, sweep_thm22, sweep_thm23, sweep_thm24,
    thm21_point, thm24_point, Grid, SweepConfig, Thm21Direction, Thm22Direction, Thm23Kind,
    Thm24Direction, Verdict,
};
use landen_core::Error;

const MARGIN_TOL: f64 = 1e-10;

fn eval_cfg() -> EvalConfig {
    // default tail_tol 1e-12; the term cap is raised because the default
    // grid's top points push series arguments to ~0.9998
    EvalConfig::default().with_max_terms(1_000_000)
}

fn sweep_cfg() -> SweepConfig {
    SweepConfig {
        eval: eval_cfg(),
        margin_tol: MARGIN_TOL,
        allow_out_of_region: false,
    }
}

fn pass(criterion: u32, detail: &str) {
    println!("criterion {criterion:2} PASS: {detail}");
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / f64::max(1.0, b.abs())
}

fn sample_branch_a(rng: &mut ChaCha8Rng) -> HyperTriple {
    let a = rng.gen_range(0.55..=1.8);
    let b = rng.gen_range(0.55..=1.8);
    let hi = f64::min(4.0 * a * b, a + b) - 0.05;
    let c = rng.gen_range(0.5..=hi);
    HyperTriple { a, b, c }
}

fn sample_branch_b(rng: &mut ChaCha8Rng) -> HyperTriple {
    let a = rng.gen_range(0.05..=0.5);
    let b = rng.gen_range(0.05..=0.5);
    let c = rng.gen_range(a + b + 0.05..=3.0);
    HyperTriple { a, b, c }
}

#[test]
fn criterion_01_landen_identity_residuals() {
    let agm = EvalConfig::default();
    let series = eval_cfg();
    let mut worst_agm = 0.0f64;
    let mut worst_series = 0.0f64;
    for r in Grid::default().points() {
        worst_agm = worst_agm.max(
            check_identity_first_via(r, EllipticMethod::Agm, &agm)
                .unwrap()
                .rel_residual,
        );
        worst_agm = worst_agm.max(
            check_identity_second_via(r, EllipticMethod::Agm, &agm)
                .unwrap()
                .rel_residual,
        );
        worst_series = worst_series.max(
            check_identity_first_via(r, EllipticMethod::Series, &series)
                .unwrap()
                .rel_residual,
        );
        worst_series = worst_series.max(
            check_identity_second_via(r, EllipticMethod::Series, &series)
                .unwrap()
                .rel_residual,
        );
    }
    assert!(worst_agm <= 1e-9, "AGM residual {worst_agm:e}");
    assert!(worst_series <= 1e-8, "series residual {worst_series:e}");
    pass(
        1,
        &format!("identity residuals: agm max {worst_agm:.2e}, series max {worst_series:.2e}"),
    );
}

#[test]
fn criterion_02_generalized_transformation() {
    let cfg = eval_cfg();
    let r_grid = Grid::new(0.05, 0.9, 0.05).unwrap().points();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_501);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = 2.0 - rng.gen_range(0.0..2.0);
        let b = 2.0 - rng.gen_range(0.0..2.0);
        for &r in &r_grid {
            let asc = check_transf(a, b, r, &cfg).unwrap();
            let desc = check_transf_complement(a, b, r, &cfg).unwrap();
            worst = worst.max(asc.rel_residual).max(desc.rel_residual);
            assert!(
                asc.rel_residual <= 1e-8 && desc.rel_residual <= 1e-8,
                "({a},{b}) at r={r}: {:e}/{:e}",
                asc.rel_residual,
                desc.rel_residual
            );
        }
    }
    // closed-form case (a,b) = (1,1/2): both sides are (1+r)/(1-r), resp. 1/r
    let tight = eval_cfg().with_tail_tol(1e-14);
    for &r in &r_grid {
        let asc = check_transf(1.0, 0.5, r, &tight).unwrap();
        let desc = check_transf_complement(1.0, 0.5, r, &tight).unwrap();
        assert!(asc.rel_residual <= 1e-12, "r={r}: {:e}", asc.rel_residual);
        assert!(desc.rel_residual <= 1e-12, "r={r}: {:e}", desc.rel_residual);
    }
    pass(
        2,
        &format!(
            "transformation residuals for 50 seeded pairs: max {worst:.2e}; (1,1/2) exact to 1e-12"
        ),
    );
}

#[test]
fn criterion_03_closed_form_oracles() {
    let cfg = EvalConfig::default();
    let forms = [
        ClosedForm::ArcsinForm,
        ClosedForm::LogForm,
        ClosedForm::GeomForm,
        ClosedForm::InvSqrtForm,
    ];
    let xs = Grid::new(0.01, 0.9, 0.01).unwrap().points();
    let mut worst = 0.0f64;
    for form in forms {
        let t = form.triple();
        for &x in &xs {
            let series = gauss_2f1(&t, x, &cfg).unwrap().require_converged().unwrap();
            let oracle = closed_form(form, x).unwrap();
            let err = (series - oracle).abs() / oracle.abs();
            worst = worst.max(err);
            assert!(err <= 1e-11, "{form:?} at x={x}: {err:e}");
        }
    }
    let mut worst_k = 0.0f64;
    for &r in &xs {
        let series = elliptic_k(r, EllipticMethod::Series, &cfg)
            .unwrap()
            .require_converged()
            .unwrap();
        let agm = elliptic_k(r, EllipticMethod::Agm, &cfg)
            .unwrap()
            .require_converged()
            .unwrap();
        let err = (series - agm).abs() / agm.abs();
        worst_k = worst_k.max(err);
        assert!(err <= 1e-10, "K routes at r={r}: {err:e}");
    }
    pass(
        3,
        &format!("closed-form agreement max {worst:.2e}; K route agreement max {worst_k:.2e}"),
    );
}

#[test]
fn criterion_04_thm21_certification() {
    let cfg = sweep_cfg();
    let grid = Grid::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_502);

    let mut increasing = vec![
        HyperTriple {
            a: 1.0,
            b: 1.0,
            c: 1.0,
        },
        HyperTriple {
            a: 0.5,
            b: 0.5,
            c: 1.0,
        },
    ];
    while increasing.len() < 20 {
        increasing.push(sample_branch_a(&mut rng));
    }
    for t in &increasing {
        assert_eq!(classify_thm21(t).unwrap().branch, Branch::Increasing);
        let report = sweep_thm21(t, Thm21Direction::Ineq1, &grid, &cfg).unwrap();
        assert_eq!(report.n_violations, 0, "{t:?}");
    }

    let mut decreasing = vec![HyperTriple {
        a: 0.5,
        b: 0.5,
        c: 1.5,
    }];
    while decreasing.len() < 20 {
        decreasing.push(sample_branch_b(&mut rng));
    }
    for t in &decreasing {
        assert_eq!(classify_thm21(t).unwrap().branch, Branch::Decreasing);
        let report = sweep_thm21(t, Thm21Direction::Ineq3, &grid, &cfg).unwrap();
        assert_eq!(report.n_violations, 0, "{t:?}");
    }

    // boundary triple: both sides coincide by the first Landen identity
    let boundary = HyperTriple {
        a: 0.5,
        b: 0.5,
        c: 1.0,
    };
    let report = sweep_thm21(&boundary, Thm21Direction::Ineq1, &grid, &cfg).unwrap();
    assert!(report
        .records
        .iter()
        .all(|rec| rec.verdict == Verdict::Indeterminate && rec.margin.abs() <= 1e-10));
    pass(
        4,
        "20 increasing-branch and 20 decreasing-branch sweeps violation-free; boundary triple all-Indeterminate",
    );
}

#[test]
fn criterion_05_thm24_certification() {
    let cfg = sweep_cfg();
    let grid = Grid::default();
    for (t, direction) in [
        (
            HyperTriple {
                a: 2.0,
                b: 1.0,
                c: 2.0,
            },
            Thm24Direction::Ineq6,
        ),
        (
            HyperTriple {
                a: 1.0,
                b: 0.5,
                c: 1.0,
            },
            Thm24Direction::Ineq6,
        ),
        (
            HyperTriple {
                a: 0.25,
                b: 0.5,
                c: 1.5,
            },
            Thm24Direction::Ineq7,
        ),
    ] {
        let report = sweep_thm24(&t, direction, &grid, &cfg).unwrap();
        assert_eq!(report.n_violations, 0, "{t:?}");
    }
    // spot values against the elementary closed forms
    let eval = EvalConfig::default();
    let geom = HyperTriple {
        a: 2.0,
        b: 1.0,
        c: 2.0,
    };
    let spot = |t: &HyperTriple, r: f64| {
        thm24_point(t, Thm24Direction::Ineq6, r, &eval, MARGIN_TOL).unwrap()
    };
    let rec = spot(&geom, 0.25);
    assert!(rel(rec.lhs, 1.0 / 0.36) <= 1e-9);
    assert!(rel(rec.rhs, 1.25f64.powi(4) / 0.9375) <= 1e-9);
    let rec = spot(&geom, 0.5);
    assert!(rel(rec.lhs, 9.0) <= 1e-9);
    assert!(rel(rec.rhs, 1.5f64.powi(4) / 0.75) <= 1e-9);
    let inv_sqrt = HyperTriple {
        a: 1.0,
        b: 0.5,
        c: 1.0,
    };
    let rec = spot(&inv_sqrt, 0.25);
    assert!(rel(rec.lhs, 1.0 / 0.36f64.sqrt()) <= 1e-9);
    assert!(rel(rec.rhs, 1.25f64.powi(2) / 0.9375f64.sqrt()) <= 1e-9);
    let rec = spot(&inv_sqrt, 0.5);
    assert!(rel(rec.lhs, 3.0) <= 1e-9);
    assert!(rel(rec.rhs, 2.25 / 0.75f64.sqrt()) <= 1e-9);
    pass(
        5,
        "transformation-theorem sweeps violation-free; spot values match closed forms to 1e-9",
    );
}

#[test]
fn criterion_06_proof_step_inequalities() {
    let cfg = sweep_cfg();
    let grid = Grid::default();
    for (a, b) in [(1.0, 0.5), (2.0, 1.0)] {
        let report = sweep_ineq9(a, b, &grid, &cfg).unwrap();
        assert_eq!(report.n_violations, 0, "({a},{b})");
    }
    let alpha = seq_probe(
        &SeqSpec::Alpha(HyperTriple {
            a: 1.0,
            b: 1.0,
            c: 1.0,
        }),
        1000,
    )
    .unwrap();
    assert_eq!(alpha.classification, Monotonicity::Increasing);
    let beta = seq_probe(
        &SeqSpec::Beta(HyperTriple {
            a: 0.7,
            b: 0.9,
            c: 1.8,
        }),
        1000,
    )
    .unwrap();
    assert_eq!(beta.classification, Monotonicity::Constant);
    let gamma = seq_probe(&SeqSpec::Gamma { a: 1.0, b: 0.5 }, 1000).unwrap();
    assert_eq!(gamma.classification, Monotonicity::Decreasing);
    let wobble = seq_probe(
        &SeqSpec::Alpha(HyperTriple {
            a: 0.1,
            b: 0.1,
            c: 0.1,
        }),
        1000,
    )
    .unwrap();
    assert_eq!(wobble.classification, Monotonicity::NonMonotone);
    assert_eq!(wobble.first_violation, Some(2));
    pass(
        6,
        "proof-step sweeps violation-free; sequence probes match analytic predictions to n=1000",
    );
}

#[test]
fn criterion_07_power_series_and_decreasing_quotients() {
    let cfg = sweep_cfg();
    let grid = Grid::default();
    // geometric coefficients: {a_n omega_n} is increasing
    let geometric = vec![1.0; 513];
    let report = sweep_thm22(&geometric, Thm22Direction::Ineq5, &grid, &cfg).unwrap();
    assert_eq!(report.n_violations, 0);
    // in-region Kummer and Bessel families
    let kummer = Thm23Kind::Kummer(KummerParams::new(0.25, 1.0).unwrap());
    assert_eq!(sweep_thm23(&kummer, &grid, &cfg).unwrap().n_violations, 0);
    let bessel = Thm23Kind::Bessel(BesselParams::from_kappa(1.0, 4.0).unwrap());
    assert_eq!(sweep_thm23(&bessel, &grid, &cfg).unwrap().n_violations, 0);
    // out-of-region Kummer (1,1): gated without override, Violated with it
    let exponential = Thm23Kind::Kummer(KummerParams::new(1.0, 1.0).unwrap());
    assert!(matches!(
        sweep_thm23(&exponential, &grid, &cfg),
        Err(Error::RegionMismatch { .. })
    ));
    let override_cfg = SweepConfig {
        allow_out_of_region: true,
        ..sweep_cfg()
    };
    let report = sweep_thm23(&exponential, &grid, &override_cfg).unwrap();
    assert!(report.n_violations > 0);
    let rec = report
        .records
        .iter()
        .find(|rec| (rec.r - 0.5).abs() <= 1e-12)
        .expect("r = 0.5 is a default grid point");
    assert_eq!(rec.verdict, Verdict::Violated);
    assert!(rel(rec.lhs, (8.0f64 / 9.0).exp()) <= 1e-9);
    assert!(rel(rec.rhs, 1.5 * 0.25f64.exp()) <= 1e-9);
    pass(7, "power-series and Kummer/Bessel sweeps certified; exponential counter-case violated at r=0.5");
}

#[test]
fn criterion_08_equivalence_and_improvement() {
    let eval = eval_cfg();
    let grid = Grid::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_503);

    // ineq1 at psi(r) is ineq2 at r up to the factor (1+r)/2 on the margin
    let mut checked = 0;
    while checked < 10 {
        let a = rng.gen_range(0.55..=1.8);
        let b = rng.gen_range(0.55..=1.8);
        let lo = f64::max(0.5, a + b - 0.95);
        let hi = f64::min(4.0 * a * b, a + b) - 0.05;
        if lo >= hi {
            continue;
        }
        let t = HyperTriple {
            a,
            b,
            c: rng.gen_range(lo..=hi),
        };
        if classify_thm21(&t).unwrap().branch != Branch::Increasing {
            continue;
        }
        checked += 1;
        for r in grid.points() {
            let via_psi = thm21_point(
                &t,
                Thm21Direction::Ineq1,
                psi_descend(r).unwrap(),
                &eval,
                MARGIN_TOL,
            )
            .unwrap();
            let direct = thm21_point(&t, Thm21Direction::Ineq2, r, &eval, MARGIN_TOL).unwrap();
            assert_eq!(via_psi.verdict, direct.verdict, "{t:?} at r={r}");
            let transported = 0.5 * (1.0 + r) * via_psi.margin;
            assert!(
                (direct.margin - transported).abs() <= 1e-9 * f64::max(1.0, direct.margin.abs()),
                "{t:?} at r={r}: {} vs {}",
                direct.margin,
                transported
            );
        }
    }

    // the sharper exponent (1+r)^{2a} >= (1+r) makes ineq6 the stronger
    // claim, so certifying it leaves at least as much ineq1 margin
    let mut improved = 0;
    while improved < 10 {
        let b = rng.gen_range(0.55..=1.2);
        let a = rng.gen_range(2.0 * b - 0.45..=2.0 * b + 0.8);
        let c = rng.gen_range(0.3..=2.0 * b - 0.02);
        let t = HyperTriple { a, b, c };
        if a < 0.5
            || classify_thm21(&t).unwrap().branch != Branch::Increasing
            || classify_thm24(&t).unwrap().branch != Branch::Increasing
        {
            continue;
        }
        improved += 1;
        for r in grid.points() {
            let base = thm21_point(&t, Thm21Direction::Ineq1, r, &eval, MARGIN_TOL).unwrap();
            let sharp = thm24_point(&t, Thm24Direction::Ineq6, r, &eval, MARGIN_TOL).unwrap();
            assert!(
                base.margin >= sharp.margin - 1e-10,
                "{t:?} at r={r}: ineq1 margin {} vs ineq6 margin {}",
                base.margin,
                sharp.margin
            );
            assert!(sharp.margin >= -1e-10, "{t:?} violated at r={r}");
        }
    }
    pass(8, "ineq1/ineq2 equivalence under the descending map; ineq6 sharpens ineq1 on 10 dual-region triples");
}

#[test]
fn criterion_09_elementary_inequalities_and_adjudication() {
    let checks = elementary_checks(&Grid::default(), MARGIN_TOL).unwrap();
    assert!(checks
        .arcsin
        .records
        .iter()
        .all(|rec| rec.verdict == Verdict::Holds));
    assert!(checks
        .log_power
        .records
        .iter()
        .all(|rec| rec.verdict == Verdict::Holds));
    let rec = checks
        .arcsin
        .records
        .iter()
        .find(|rec| (rec.r - 0.25).abs() <= 1e-12)
        .unwrap();
    assert!(rel(rec.lhs, 0.231_823_804_500_403_06) <= 1e-9);
    assert!(rel(rec.rhs, 0.252_680_255_142_078_65) <= 1e-9);
    let rec = checks
        .log_power
        .records
        .iter()
        .find(|rec| (rec.r - 0.25).abs() <= 1e-12)
        .unwrap();
    assert!(rel(rec.lhs, 3.0f64.sqrt()) <= 1e-9);
    assert!(rel(rec.rhs, 5.0 / 3.0) <= 1e-9);

    // the out-of-region log-form triple (1/2,1,3/2): the increasing
    // direction holds on the whole grid, the decreasing one fails everywhere
    let t = HyperTriple {
        a: 0.5,
        b: 1.0,
        c: 1.5,
    };
    let override_cfg = SweepConfig {
        allow_out_of_region: true,
        ..sweep_cfg()
    };
    let holds = sweep_thm24(&t, Thm24Direction::Ineq6, &Grid::default(), &override_cfg).unwrap();
    assert_eq!(holds.n_violations, 0);
    assert!(holds
        .records
        .iter()
        .all(|rec| rec.verdict == Verdict::Holds));
    let fails = sweep_thm24(&t, Thm24Direction::Ineq7, &Grid::default(), &override_cfg).unwrap();
    assert_eq!(fails.n_violations, fails.records.len());
    pass(
        9,
        "elementary inequalities hold grid-wide; (1/2,1,3/2) satisfies ineq6 and violates ineq7",
    );
}

#[test]
fn criterion_10_determinism_of_artifacts() {
    let runs: [&[&str]; 5] = [
        &[
            "sweep",
            "--theorem",
            "2.1",
            "--direction",
            "ineq1",
            "--a",
            "1",
            "--b",
            "1",
            "--c",
            "1",
            "--max-terms",
            "1000000",
            "--format",
            "csv",
        ],
        &[
            "sweep",
            "--theorem",
            "2.1",
            "--direction",
            "ineq1",
            "--a",
            "1",
            "--b",
            "1",
            "--c",
            "1",
            "--max-terms",
            "1000000",
            "--format",
            "json",
        ],
        &[
            "sweep",
            "--theorem",
            "2.4",
            "--direction",
            "ineq7",
            "--a",
            "1/4",
            "--b",
            "1/2",
            "--c",
            "3/2",
            "--max-terms",
            "400000",
            "--format",
            "json",
        ],
        &["sweep", "--theorem", "elementary", "--format", "json"],
        &[
            "search",
            "--theorem",
            "2.1",
            "--direction",
            "ineq1",
            "--box",
            "a:0.5:2,b:0.5:2,c:0.5:2",
            "--seed",
            "42",
            "--budget",
            "5",
            "--grid-start",
            "0.1",
            "--grid-end",
            "0.9",
            "--grid-step",
            "0.1",
            "--max-terms",
            "400000",
            "--format",
            "json",
        ],
    ];
    for args in runs {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_landen"))
                .args(args)
                .env_remove("LANDEN_TAIL_TOL")
                .output()
                .expect("binary runs")
        };
        let one = run();
        let two = run();
        assert_eq!(one.status.code(), two.status.code(), "{args:?}");
        assert!(!one.stdout.is_empty(), "{args:?}");
        assert_eq!(one.stdout, two.stdout, "artifact bytes differ for {args:?}");
    }
    pass(10, "consecutive CSV/JSON artifact runs are byte-identical");
}
