//! Report rendering. CSV uses the fixed schema `r,lhs,rhs,margin,verdict`;
//! JSON mirrors the report structure with every float serialized at 17
//! significant digits so re-runs are byte-identical and CSV/JSON carry the
//! same records.

use std::fmt::Write as _;
use std::io;

use serde::ser::{Serialize, SerializeMap, Serializer};

use landen_core::regions::{KappaBounds, RegionVerdict, SeqProbe};
use landen_core::specialfn::Evaluation;
use landen_core::verify::{Counterexample, InequalityRecord, SweepReport};

/// 17-significant-digit scientific form, shared by CSV and JSON.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any value as compact JSON with the 17-digit float convention.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    let mut s = String::from_utf8(out).expect("serializer emits utf-8");
    s.push('\n');
    s
}

/// Ordered name→value parameter map.
pub struct ParamsOut<'a>(pub &'a [(String, f64)]);

impl Serialize for ParamsOut<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in self.0 {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

#[derive(serde::Serialize)]
pub struct GridOut {
    start: f64,
    end: f64,
    step: f64,
}

#[derive(serde::Serialize)]
pub struct RecordOut {
    r: f64,
    lhs: f64,
    rhs: f64,
    margin: f64,
    verdict: String,
}

impl From<&InequalityRecord> for RecordOut {
    fn from(rec: &InequalityRecord) -> Self {
        RecordOut {
            r: rec.r,
            lhs: rec.lhs,
            rhs: rec.rhs,
            margin: rec.margin,
            verdict: rec.verdict.to_string(),
        }
    }
}

#[derive(serde::Serialize)]
pub struct ReportOut<'a> {
    theorem_id: &'a str,
    params: ParamsOut<'a>,
    grid: GridOut,
    records: Vec<RecordOut>,
    min_margin: f64,
    n_violations: u64,
}

impl<'a> From<&'a SweepReport> for ReportOut<'a> {
    fn from(report: &'a SweepReport) -> Self {
        ReportOut {
            theorem_id: &report.theorem_id,
            params: ParamsOut(&report.params),
            grid: GridOut {
                start: report.grid.start,
                end: report.grid.end,
                step: report.grid.step,
            },
            records: report.records.iter().map(RecordOut::from).collect(),
            min_margin: report.min_margin,
            n_violations: report.n_violations as u64,
        }
    }
}

pub const CSV_HEADER: &str = "r,lhs,rhs,margin,verdict";

fn csv_row(rec: &InequalityRecord) -> String {
    format!(
        "{},{},{},{},{}",
        fmt17(rec.r),
        fmt17(rec.lhs),
        fmt17(rec.rhs),
        fmt17(rec.margin),
        rec.verdict
    )
}

pub fn sweep_to_csv(report: &SweepReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in &report.records {
        out.push_str(&csv_row(rec));
        out.push('\n');
    }
    out
}

pub fn sweep_to_json(report: &SweepReport) -> String {
    to_json(&ReportOut::from(report))
}

pub fn reports_to_json(reports: &[&SweepReport]) -> String {
    let out: Vec<ReportOut> = reports.iter().map(|r| ReportOut::from(*r)).collect();
    to_json(&out)
}

fn params_inline(params: &[(String, f64)]) -> String {
    if params.is_empty() {
        return String::from("-");
    }
    let mut s = String::new();
    for (i, (name, value)) in params.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{name}={value}");
    }
    s
}

pub fn sweep_to_table(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theorem {}   params: {}",
        report.theorem_id,
        params_inline(&report.params)
    );
    let _ = writeln!(
        out,
        "grid start={} end={} step={}",
        report.grid.start, report.grid.end, report.grid.step
    );
    let _ = writeln!(
        out,
        "{:>8}  {:>24}  {:>24}  {:>14}  verdict",
        "r", "lhs", "rhs", "margin"
    );
    for rec in &report.records {
        let _ = writeln!(
            out,
            "{:>8.4}  {:>24.16e}  {:>24.16e}  {:>14.6e}  {}",
            rec.r, rec.lhs, rec.rhs, rec.margin, rec.verdict
        );
    }
    let _ = writeln!(out, "min_margin   = {}", fmt17(report.min_margin));
    let _ = writeln!(out, "n_violations = {}", report.n_violations);
    out
}

#[derive(serde::Serialize)]
pub struct SearchOut<'a> {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    sample_index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<ParamsOut<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    record: Option<RecordOut>,
}

pub fn search_to_json(result: &Option<Counterexample>) -> String {
    let out = match result {
        Some(ce) => SearchOut {
            found: true,
            sample_index: Some(ce.sample_index as u64),
            params: Some(ParamsOut(&ce.params)),
            record: Some(RecordOut::from(&ce.record)),
        },
        None => SearchOut {
            found: false,
            sample_index: None,
            params: None,
            record: None,
        },
    };
    to_json(&out)
}

pub fn search_to_csv(result: &Option<Counterexample>) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    if let Some(ce) = result {
        out.push_str(&csv_row(&ce.record));
        out.push('\n');
    }
    out
}

pub fn search_to_table(result: &Option<Counterexample>, budget: usize) -> String {
    match result {
        Some(ce) => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "counterexample found at sample {} ({})",
                ce.sample_index,
                params_inline(&ce.params)
            );
            let _ = writeln!(
                out,
                "r={} lhs={} rhs={} margin={} verdict={}",
                fmt17(ce.record.r),
                fmt17(ce.record.lhs),
                fmt17(ce.record.rhs),
                fmt17(ce.record.margin),
                ce.record.verdict
            );
            out
        }
        None => format!("no counterexample found within {budget} samples\n"),
    }
}

#[derive(serde::Serialize)]
pub struct EvalOut {
    value: f64,
    terms_used: u64,
    tail_bound: f64,
    converged: bool,
}

pub fn eval_to_json(e: &Evaluation) -> String {
    to_json(&EvalOut {
        value: e.value,
        terms_used: e.terms_used as u64,
        tail_bound: e.tail_bound,
        converged: e.converged,
    })
}

pub fn eval_to_table(e: &Evaluation) -> String {
    format!(
        "value      = {:.10}\nterms_used = {}\ntail_bound = {:e}\nconverged  = {}\n",
        e.value, e.terms_used, e.tail_bound, e.converged
    )
}

#[derive(serde::Serialize)]
pub struct IdentityOut {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_residual: f64,
}

pub fn identity_to_table(out: &IdentityOut) -> String {
    format!(
        "r            = {}\nlhs          = {}\nrhs          = {}\nrel_residual = {:e}\n",
        out.r, out.lhs, out.rhs, out.rel_residual
    )
}

#[derive(serde::Serialize)]
pub struct ClassifyOut<'a> {
    pub branch: String,
    pub fired_condition: &'a str,
    pub boundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_bounds: Option<KappaBoundsOut>,
}

#[derive(serde::Serialize)]
pub struct KappaBoundsOut {
    pub preamble_threshold: f64,
    pub preamble_holds: bool,
    pub statement_threshold: f64,
    pub statement_holds: bool,
}

impl From<&KappaBounds> for KappaBoundsOut {
    fn from(b: &KappaBounds) -> Self {
        KappaBoundsOut {
            preamble_threshold: b.preamble_threshold,
            preamble_holds: b.preamble_holds,
            statement_threshold: b.statement_threshold,
            statement_holds: b.statement_holds,
        }
    }
}

pub fn classify_to_table(verdict: &RegionVerdict, bounds: Option<&KappaBounds>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", verdict.branch);
    if !verdict.fired_condition.is_empty() {
        let _ = writeln!(out, "condition: {}", verdict.fired_condition);
    }
    let _ = writeln!(out, "boundary:  {}", verdict.boundary);
    if let Some(b) = bounds {
        let _ = writeln!(
            out,
            "preamble bound  kappa >= {}: {}",
            b.preamble_threshold,
            if b.preamble_holds { "holds" } else { "fails" }
        );
        let _ = writeln!(
            out,
            "statement bound kappa >= {}: {}",
            b.statement_threshold,
            if b.statement_holds { "holds" } else { "fails" }
        );
    }
    out
}

#[derive(serde::Serialize)]
pub struct SeqOut<'a> {
    pub seq_id: String,
    pub params: ParamsOut<'a>,
    pub n_max: u64,
    pub classification: String,
    pub first_violation: Option<u64>,
}

pub fn seq_to_table(probe: &SeqProbe) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sequence       = {}", probe.spec.id());
    let _ = writeln!(out, "n_max          = {}", probe.n_max);
    let _ = writeln!(out, "classification = {}", probe.classification);
    match probe.first_violation {
        Some(n) => {
            let _ = writeln!(out, "first_violation = {n}");
        }
        None => {
            let _ = writeln!(out, "first_violation = none");
        }
    }
    out
}
