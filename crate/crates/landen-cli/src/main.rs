//! `landen` — evaluate the hypergeometric/elliptic special functions, check
//! the Landen identities, classify theorem regions, probe coefficient
//! sequences, sweep the Landen-type inequalities over an r-grid, and search
//! for counterexamples.
//!
//! Exit codes: 0 all checks passed / evaluation succeeded, 1 at least one
//! Violated record or a counterexample found, 2 invalid arguments or
//! parameter error, 3 numerical failure (domain or convergence).

mod parse;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use landen_core::landen::{
    check_identity_first_via, check_identity_second_via, check_transf, check_transf_complement,
};
use landen_core::regions::{
    bessel_kappa_bounds, classify_bessel, classify_kummer, classify_thm21, classify_thm24,
    seq_probe, KappaBounds, RegionVerdict, SeqSpec,
};
use landen_core::specialfn::{
    bessel_u, closed_form, elliptic_k, gauss_2f1, kummer_phi, BesselParams, ClosedForm,
    EllipticMethod, EvalConfig, Evaluation, HyperTriple, KummerParams,
};
use landen_core::verify::{
    elementary_checks, search_counterexample, sweep_ineq9, sweep_thm21, sweep_thm22, sweep_thm23,
    sweep_thm24, Grid, SearchSpec, SearchTarget, SweepConfig, SweepReport, Thm21Direction,
    Thm22Direction, Thm23Kind, Thm24Direction, DEFAULT_MARGIN_TOL,
};
use landen_core::Error as CoreError;

use parse::{parse_box, parse_real};

fn parse_real_arg(s: &str) -> Result<f64, String> {
    parse_real(s)
}

#[derive(Parser)]
#[command(
    name = "landen",
    version,
    about = "Special-function evaluation and numerical certification of Landen-type inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Relative series tail tolerance (default 1e-12; env LANDEN_TAIL_TOL)
    #[arg(long, global = true, value_parser = parse_real_arg)]
    tail_tol: Option<f64>,
    /// Series term cap (default 10000)
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Margin below which a record is Indeterminate (default 1e-10)
    #[arg(long, global = true, value_parser = parse_real_arg)]
    margin_tol: Option<f64>,
    /// First grid point (default 0.01)
    #[arg(long, global = true, value_parser = parse_real_arg)]
    grid_start: Option<f64>,
    /// Last grid point (default 0.97)
    #[arg(long, global = true, value_parser = parse_real_arg)]
    grid_end: Option<f64>,
    /// Grid spacing (default 0.01)
    #[arg(long, global = true, value_parser = parse_real_arg)]
    grid_step: Option<f64>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function at a point
    Eval(EvalArgs),
    /// Check a Landen identity residual at one argument
    Identity(IdentityArgs),
    /// Classify parameters against a theorem's hypothesis region
    Classify(ClassifyArgs),
    /// Probe the monotonicity of a named coefficient sequence
    Seq(SeqArgs),
    /// Sweep an inequality over the r-grid and report margins
    Sweep(SweepArgs),
    /// Seeded counterexample search over a parameter box
    Search(SearchArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EvalFnArg {
    #[value(name = "2f1")]
    TwoF1,
    K,
    Kummer,
    Bessel,
    Closed,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Agm,
    Series,
}

impl From<MethodArg> for EllipticMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Agm => EllipticMethod::Agm,
            MethodArg::Series => EllipticMethod::Series,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Arcsin,
    Log,
    Geom,
    InvSqrt,
}

impl From<FormArg> for ClosedForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Arcsin => ClosedForm::ArcsinForm,
            FormArg::Log => ClosedForm::LogForm,
            FormArg::Geom => ClosedForm::GeomForm,
            FormArg::InvSqrt => ClosedForm::InvSqrtForm,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Which function: 2f1, k, kummer, bessel or closed
    #[arg(long = "fn", value_enum)]
    function: EvalFnArg,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    r: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    p: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    nu: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b_shape: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c_sign: Option<f64>,
    /// Elliptic route (k only)
    #[arg(long, value_enum, default_value_t = MethodArg::Agm)]
    method: MethodArg,
    /// Closed form id (closed only)
    #[arg(long, value_enum)]
    form: Option<FormArg>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WhichIdentity {
    Landen1,
    Landen2,
    Transf,
    TransfComplement,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long, value_enum)]
    which: WhichIdentity,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    r: f64,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Elliptic route (landen1/landen2 only)
    #[arg(long, value_enum, default_value_t = MethodArg::Agm)]
    method: MethodArg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    #[value(name = "2.1")]
    T21,
    #[value(name = "2.2")]
    T22,
    #[value(name = "2.3")]
    T23,
    #[value(name = "2.4")]
    T24,
    Ineq9,
    Elementary,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Bessel,
    Kummer,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    /// Series family (theorem 2.3 only)
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    p: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    nu: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b_shape: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c_sign: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeqWhich {
    Alpha,
    Beta,
    Gamma,
    Omega,
    Delta,
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long, value_enum)]
    which: SeqWhich,
    /// Probe window upper index (1..=10000)
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Ineq1,
    Ineq2,
    Ineq3,
    Ineq4,
    Ineq5,
    Reversed,
    Ineq6,
    Ineq7,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ElemWhich {
    Arcsin,
    LogPower,
    Both,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    #[arg(long, value_enum)]
    direction: Option<DirectionArg>,
    /// Series family (theorem 2.3 only)
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Coefficient window a_0,a_1,... (theorem 2.2 only)
    #[arg(long, value_delimiter = ',', value_parser = parse_real_arg)]
    coeffs: Option<Vec<f64>>,
    /// Elementary sub-report selector
    #[arg(long, value_enum, default_value_t = ElemWhich::Both)]
    which: ElemWhich,
    /// Sweep even when the parameters fail the theorem's hypothesis
    #[arg(long = "override")]
    override_region: bool,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    p: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    nu: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    b_shape: Option<f64>,
    #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
    c_sign: Option<f64>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    #[arg(long, value_enum)]
    direction: Option<DirectionArg>,
    /// Series family (theorem 2.3 only)
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Parameter box, e.g. `a:0.5:2,b:1,c:1/2:3/2`
    #[arg(long = "box")]
    box_spec: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of parameter samples
    #[arg(long, default_value_t = 100)]
    budget: usize,
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain { .. } | CoreError::SlowConvergence { .. } => {
                Failure::Numeric(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct RunConfig {
    eval: EvalConfig,
    margin_tol: f64,
    grid: Grid,
    format: Format,
    output: Option<PathBuf>,
}

impl RunConfig {
    fn sweep(&self, override_region: bool) -> SweepConfig {
        SweepConfig {
            eval: self.eval,
            margin_tol: self.margin_tol,
            allow_out_of_region: override_region,
        }
    }
}

// the negated margin_tol comparison rejects NaN in one test
#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn build_config(common: &CommonArgs) -> Result<RunConfig, Failure> {
    let mut eval = EvalConfig::default();
    if let Some(tail_tol) = common.tail_tol {
        eval.tail_tol = tail_tol;
    } else if let Ok(raw) = std::env::var("LANDEN_TAIL_TOL") {
        eval.tail_tol = parse_real(&raw).map_err(|e| usage(format!("LANDEN_TAIL_TOL: {e}")))?;
    }
    if let Some(max_terms) = common.max_terms {
        eval.max_terms = max_terms;
    }
    eval.validate()?;
    let margin_tol = common.margin_tol.unwrap_or(DEFAULT_MARGIN_TOL);
    if !(margin_tol >= 0.0) {
        return Err(usage("--margin-tol must be nonnegative"));
    }
    let defaults = Grid::default();
    let grid = Grid::new(
        common.grid_start.unwrap_or(defaults.start),
        common.grid_end.unwrap_or(defaults.end),
        common.grid_step.unwrap_or(defaults.step),
    )?;
    Ok(RunConfig {
        eval,
        margin_tol,
        grid,
        format: common.format,
        output: common.output.clone(),
    })
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require(name: &str, v: Option<f64>) -> Result<f64, Failure> {
    v.ok_or_else(|| usage(format!("missing required --{name} for this command")))
}

fn bessel_params(
    kappa: Option<f64>,
    nu: Option<f64>,
    b_shape: Option<f64>,
    c_sign: Option<f64>,
) -> Result<BesselParams, Failure> {
    let c_sign = require("c-sign", c_sign)?;
    match (kappa, nu) {
        (Some(k), None) => Ok(BesselParams::from_kappa(k, c_sign)?),
        (None, Some(nu)) => Ok(BesselParams::new(nu, require("b-shape", b_shape)?, c_sign)?),
        (Some(_), Some(_)) => Err(usage("pass either --kappa or --nu/--b-shape, not both")),
        (None, None) => Err(usage("pass --kappa or --nu/--b-shape")),
    }
}

fn finish_eval(cfg: &RunConfig, e: &Evaluation) -> Result<u8, Failure> {
    if !e.converged {
        return Err(Failure::Numeric(format!(
            "series did not converge within {} terms (tail bound {:e})",
            e.terms_used, e.tail_bound
        )));
    }
    let text = match cfg.format {
        Format::Table => report::eval_to_table(e),
        Format::Json => report::eval_to_json(e),
        Format::Csv => return Err(usage("csv output applies to sweep and search reports")),
    };
    emit(cfg, &text)?;
    Ok(0)
}

fn handle_eval(cfg: &RunConfig, args: &EvalArgs) -> Result<u8, Failure> {
    match args.function {
        EvalFnArg::TwoF1 => {
            let t = HyperTriple::new(
                require("a", args.a)?,
                require("b", args.b)?,
                require("c", args.c)?,
            )?;
            let e = gauss_2f1(&t, require("x", args.x)?, &cfg.eval)?;
            finish_eval(cfg, &e)
        }
        EvalFnArg::K => {
            let e = elliptic_k(require("r", args.r)?, args.method.into(), &cfg.eval)?;
            finish_eval(cfg, &e)
        }
        EvalFnArg::Kummer => {
            let kp = KummerParams::new(require("p", args.p)?, require("q", args.q)?)?;
            let e = kummer_phi(&kp, require("x", args.x)?, &cfg.eval)?;
            finish_eval(cfg, &e)
        }
        EvalFnArg::Bessel => {
            let bp = bessel_params(args.kappa, args.nu, args.b_shape, args.c_sign)?;
            let e = bessel_u(&bp, require("x", args.x)?, &cfg.eval)?;
            finish_eval(cfg, &e)
        }
        EvalFnArg::Closed => {
            let form = args
                .form
                .ok_or_else(|| usage("missing required --form for --fn closed"))?;
            let value = closed_form(form.into(), require("x", args.x)?)?;
            let e = Evaluation {
                value,
                terms_used: 0,
                tail_bound: 0.0,
                converged: true,
            };
            finish_eval(cfg, &e)
        }
    }
}

fn handle_identity(cfg: &RunConfig, args: &IdentityArgs) -> Result<u8, Failure> {
    let res = match args.which {
        WhichIdentity::Landen1 => check_identity_first_via(args.r, args.method.into(), &cfg.eval)?,
        WhichIdentity::Landen2 => check_identity_second_via(args.r, args.method.into(), &cfg.eval)?,
        WhichIdentity::Transf => check_transf(
            require("a", args.a)?,
            require("b", args.b)?,
            args.r,
            &cfg.eval,
        )?,
        WhichIdentity::TransfComplement => check_transf_complement(
            require("a", args.a)?,
            require("b", args.b)?,
            args.r,
            &cfg.eval,
        )?,
    };
    let out = report::IdentityOut {
        r: res.r,
        lhs: res.lhs,
        rhs: res.rhs,
        rel_residual: res.rel_residual,
    };
    let text = match cfg.format {
        Format::Table => report::identity_to_table(&out),
        Format::Json => report::to_json(&out),
        Format::Csv => return Err(usage("csv output applies to sweep and search reports")),
    };
    emit(cfg, &text)?;
    Ok(0)
}

fn emit_classification(
    cfg: &RunConfig,
    verdict: &RegionVerdict,
    bounds: Option<&KappaBounds>,
) -> Result<u8, Failure> {
    let text = match cfg.format {
        Format::Table => report::classify_to_table(verdict, bounds),
        Format::Json => report::to_json(&report::ClassifyOut {
            branch: verdict.branch.to_string(),
            fired_condition: &verdict.fired_condition,
            boundary: verdict.boundary,
            kappa_bounds: bounds.map(report::KappaBoundsOut::from),
        }),
        Format::Csv => return Err(usage("csv output applies to sweep and search reports")),
    };
    emit(cfg, &text)?;
    Ok(0)
}

fn handle_classify(cfg: &RunConfig, args: &ClassifyArgs) -> Result<u8, Failure> {
    match args.theorem {
        TheoremArg::T21 | TheoremArg::T24 => {
            let t = HyperTriple::new(
                require("a", args.a)?,
                require("b", args.b)?,
                require("c", args.c)?,
            )?;
            let verdict = if args.theorem == TheoremArg::T21 {
                classify_thm21(&t)?
            } else {
                classify_thm24(&t)?
            };
            emit_classification(cfg, &verdict, None)
        }
        TheoremArg::T23 => match args.kind {
            Some(KindArg::Kummer) => {
                let kp = KummerParams::new(require("p", args.p)?, require("q", args.q)?)?;
                let verdict = classify_kummer(&kp)?;
                emit_classification(cfg, &verdict, None)
            }
            Some(KindArg::Bessel) => {
                let bp = bessel_params(args.kappa, args.nu, args.b_shape, args.c_sign)?;
                let verdict = classify_bessel(&bp)?;
                let bounds = bessel_kappa_bounds(&bp);
                emit_classification(cfg, &verdict, Some(&bounds))
            }
            None => Err(usage("--theorem 2.3 needs --kind bessel|kummer")),
        },
        _ => Err(usage("classify supports --theorem 2.1, 2.3 or 2.4")),
    }
}

fn handle_seq(cfg: &RunConfig, args: &SeqArgs) -> Result<u8, Failure> {
    let triple = |a: Option<f64>, b: Option<f64>, c: Option<f64>| -> Result<HyperTriple, Failure> {
        Ok(HyperTriple {
            a: require("a", a)?,
            b: require("b", b)?,
            c: require("c", c)?,
        })
    };
    let spec = match args.which {
        SeqWhich::Alpha => SeqSpec::Alpha(triple(args.a, args.b, args.c)?),
        SeqWhich::Beta => SeqSpec::Beta(triple(args.a, args.b, args.c)?),
        SeqWhich::Gamma => SeqSpec::Gamma {
            a: require("a", args.a)?,
            b: require("b", args.b)?,
        },
        SeqWhich::Omega => SeqSpec::Omega,
        SeqWhich::Delta => SeqSpec::Delta(triple(args.a, args.b, args.c)?),
    };
    let probe = seq_probe(&spec, args.n)?;
    let params: Vec<(String, f64)> = probe
        .spec
        .params()
        .into_iter()
        .map(|(name, value)| (String::from(name), value))
        .collect();
    let text = match cfg.format {
        Format::Table => report::seq_to_table(&probe),
        Format::Json => report::to_json(&report::SeqOut {
            seq_id: probe.spec.id().to_string(),
            params: report::ParamsOut(&params),
            n_max: probe.n_max as u64,
            classification: probe.classification.to_string(),
            first_violation: probe.first_violation.map(|n| n as u64),
        }),
        Format::Csv => return Err(usage("csv output applies to sweep and search reports")),
    };
    emit(cfg, &text)?;
    Ok(0)
}

fn dir21(direction: Option<DirectionArg>) -> Result<Thm21Direction, Failure> {
    match direction {
        Some(DirectionArg::Ineq1) => Ok(Thm21Direction::Ineq1),
        Some(DirectionArg::Ineq2) => Ok(Thm21Direction::Ineq2),
        Some(DirectionArg::Ineq3) => Ok(Thm21Direction::Ineq3),
        Some(DirectionArg::Ineq4) => Ok(Thm21Direction::Ineq4),
        _ => Err(usage(
            "--theorem 2.1 needs --direction ineq1|ineq2|ineq3|ineq4",
        )),
    }
}

fn dir22(direction: Option<DirectionArg>) -> Result<Thm22Direction, Failure> {
    match direction {
        Some(DirectionArg::Ineq5) => Ok(Thm22Direction::Ineq5),
        Some(DirectionArg::Reversed) => Ok(Thm22Direction::Reversed),
        _ => Err(usage("--theorem 2.2 needs --direction ineq5|reversed")),
    }
}

fn dir24(direction: Option<DirectionArg>) -> Result<Thm24Direction, Failure> {
    match direction {
        Some(DirectionArg::Ineq6) => Ok(Thm24Direction::Ineq6),
        Some(DirectionArg::Ineq7) => Ok(Thm24Direction::Ineq7),
        _ => Err(usage("--theorem 2.4 needs --direction ineq6|ineq7")),
    }
}

fn handle_sweep(cfg: &RunConfig, args: &SweepArgs) -> Result<u8, Failure> {
    let sweep_cfg = cfg.sweep(args.override_region);
    let reports: Vec<SweepReport> = match args.theorem {
        TheoremArg::T21 => {
            let t = HyperTriple::new(
                require("a", args.a)?,
                require("b", args.b)?,
                require("c", args.c)?,
            )?;
            vec![sweep_thm21(
                &t,
                dir21(args.direction)?,
                &cfg.grid,
                &sweep_cfg,
            )?]
        }
        TheoremArg::T22 => {
            let coeffs = args
                .coeffs
                .as_ref()
                .ok_or_else(|| usage("missing required --coeffs for --theorem 2.2"))?;
            vec![sweep_thm22(
                coeffs,
                dir22(args.direction)?,
                &cfg.grid,
                &sweep_cfg,
            )?]
        }
        TheoremArg::T23 => {
            let kind = match args.kind {
                Some(KindArg::Kummer) => Thm23Kind::Kummer(KummerParams::new(
                    require("p", args.p)?,
                    require("q", args.q)?,
                )?),
                Some(KindArg::Bessel) => Thm23Kind::Bessel(bessel_params(
                    args.kappa,
                    args.nu,
                    args.b_shape,
                    args.c_sign,
                )?),
                None => return Err(usage("--theorem 2.3 needs --kind bessel|kummer")),
            };
            vec![sweep_thm23(&kind, &cfg.grid, &sweep_cfg)?]
        }
        TheoremArg::T24 => {
            let t = HyperTriple::new(
                require("a", args.a)?,
                require("b", args.b)?,
                require("c", args.c)?,
            )?;
            vec![sweep_thm24(
                &t,
                dir24(args.direction)?,
                &cfg.grid,
                &sweep_cfg,
            )?]
        }
        TheoremArg::Ineq9 => {
            vec![sweep_ineq9(
                require("a", args.a)?,
                require("b", args.b)?,
                &cfg.grid,
                &sweep_cfg,
            )?]
        }
        TheoremArg::Elementary => {
            let checks = elementary_checks(&cfg.grid, cfg.margin_tol)?;
            match args.which {
                ElemWhich::Arcsin => vec![checks.arcsin],
                ElemWhich::LogPower => vec![checks.log_power],
                ElemWhich::Both => vec![checks.arcsin, checks.log_power],
            }
        }
    };
    let text = match cfg.format {
        Format::Table => {
            let mut s = String::new();
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&report::sweep_to_table(report));
            }
            s
        }
        Format::Csv => {
            if reports.len() != 1 {
                return Err(usage(
                    "csv emits a single report; pass --which arcsin|log-power",
                ));
            }
            report::sweep_to_csv(&reports[0])
        }
        Format::Json => {
            if reports.len() == 1 {
                report::sweep_to_json(&reports[0])
            } else {
                report::reports_to_json(&reports.iter().collect::<Vec<_>>())
            }
        }
    };
    emit(cfg, &text)?;
    Ok(if reports.iter().any(|r| r.n_violations > 0) {
        1
    } else {
        0
    })
}

fn handle_search(cfg: &RunConfig, args: &SearchArgs) -> Result<u8, Failure> {
    let target = match args.theorem {
        TheoremArg::T21 => SearchTarget::Thm21(dir21(args.direction)?),
        TheoremArg::T24 => SearchTarget::Thm24(dir24(args.direction)?),
        TheoremArg::Ineq9 => SearchTarget::Ineq9,
        TheoremArg::T23 => match args.kind {
            Some(KindArg::Kummer) => SearchTarget::Thm23Kummer,
            Some(KindArg::Bessel) => SearchTarget::Thm23Bessel,
            None => return Err(usage("--theorem 2.3 needs --kind bessel|kummer")),
        },
        _ => return Err(usage("search supports --theorem 2.1, 2.3, 2.4 or ineq9")),
    };
    let spec = SearchSpec {
        target,
        param_box: parse_box(&args.box_spec).map_err(usage)?,
    };
    let sweep_cfg = cfg.sweep(true);
    let found = search_counterexample(&spec, args.seed, args.budget, &cfg.grid, &sweep_cfg)?;
    let text = match cfg.format {
        Format::Table => report::search_to_table(&found, args.budget),
        Format::Csv => report::search_to_csv(&found),
        Format::Json => report::search_to_json(&found),
    };
    emit(cfg, &text)?;
    Ok(if found.is_some() { 1 } else { 0 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = build_config(&cli.common)?;
    match &cli.command {
        Command::Eval(args) => handle_eval(&cfg, args),
        Command::Identity(args) => handle_identity(&cfg, args),
        Command::Classify(args) => handle_classify(&cfg, args),
        Command::Seq(args) => handle_seq(&cfg, args),
        Command::Sweep(args) => handle_sweep(&cfg, args),
        Command::Search(args) => handle_search(&cfg, args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
