//! Grid-sweep certification of the Landen-type inequalities, quotient
//! monotonicity probes, and seeded counterexample search.
//!
//! Every sweep walks a [`Grid`] over `r ∈ (0,1)`, evaluates both sides of
//! the claimed inequality at each point, and records a signed margin
//! oriented so that `margin >= 0` means the claim holds. Margins inside
//! `margin_tol` are [`Verdict::Indeterminate`]: boundary-parameter sweeps
//! legitimately produce all-Indeterminate reports because the two sides
//! coincide identically there.
//!
//! Sweeps are sequential and the record order is fixed by the grid index,
//! so identical inputs produce identical reports.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fp;
use crate::regions::{
    classify_bessel, classify_kummer, classify_steps, classify_thm21, classify_thm24, Branch,
    Monotonicity, RegionVerdict, BOUNDARY_TOL, STEP_TOL,
};
use crate::specialfn::{
    bessel_u, gauss_2f1, kummer_phi, BesselParams, EvalConfig, HyperTriple, KummerParams,
};
use crate::{Error, Result};

/// Default separation between Holds/Violated and Indeterminate.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-10;

/// Largest accepted coefficient window index N (coefficients a_0..a_N).
pub const MAX_COEFF_INDEX: usize = 512;

/// Uniform discretization of the open interval the theorems quantify over.
/// The default end 0.97 keeps the transformed argument `4r/(1+r)²` at or
/// below ~0.99977, inside the series domain guard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            start: 0.01,
            end: 0.97,
            step: 0.01,
        }
    }
}

impl Grid {
    pub fn new(start: f64, end: f64, step: f64) -> Result<Self> {
        let g = Grid { start, end, step };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.start > 0.0 && self.start < 1.0) || !self.start.is_finite() {
            return Err(Error::Param {
                name: "grid.start",
                value: self.start,
                reason: "must lie in (0, 1)",
            });
        }
        if !(self.end > self.start && self.end < 1.0) {
            return Err(Error::Param {
                name: "grid.end",
                value: self.end,
                reason: "must lie in (start, 1)",
            });
        }
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::Param {
                name: "grid.step",
                value: self.step,
                reason: "must be positive",
            });
        }
        if (self.end - self.start) / self.step > 1e6 {
            return Err(Error::Param {
                name: "grid.step",
                value: self.step,
                reason: "grid would exceed 1e6 points",
            });
        }
        Ok(())
    }

    /// Grid points in increasing order; the last point is clamped to `end`
    /// so accumulated float noise cannot push it past the stated bound.
    pub fn points(&self) -> Vec<f64> {
        let n = fp::floor((self.end - self.start) / self.step + 1e-9) as usize + 1;
        (0..n)
            .map(|i| f64::min(self.start + i as f64 * self.step, self.end))
            .collect()
    }
}

/// Per-point outcome of a claimed inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::Violated => "Violated",
            Verdict::Indeterminate => "Indeterminate",
        })
    }
}

/// Verdict from a signed margin: Indeterminate iff `|margin| <= margin_tol`,
/// Holds iff `margin > margin_tol`.
pub fn classify_margin(margin: f64, margin_tol: f64) -> Verdict {
    if fp::abs(margin) <= margin_tol {
        Verdict::Indeterminate
    } else if margin > 0.0 {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

/// One grid point: both sides, the oriented margin and its verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityRecord {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub verdict: Verdict,
}

impl InequalityRecord {
    fn new(r: f64, lhs: f64, rhs: f64, margin: f64, margin_tol: f64) -> Self {
        InequalityRecord {
            r,
            lhs,
            rhs,
            margin,
            verdict: classify_margin(margin, margin_tol),
        }
    }
}

/// Aggregated sweep result; records are ordered by grid index.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub theorem_id: String,
    pub params: Vec<(String, f64)>,
    pub grid: Grid,
    pub records: Vec<InequalityRecord>,
    pub min_margin: f64,
    pub n_violations: usize,
}

impl SweepReport {
    fn assemble(
        theorem_id: String,
        params: Vec<(String, f64)>,
        grid: Grid,
        records: Vec<InequalityRecord>,
    ) -> Self {
        let min_margin = records
            .iter()
            .map(|rec| rec.margin)
            .fold(f64::INFINITY, f64::min);
        let n_violations = records
            .iter()
            .filter(|rec| rec.verdict == Verdict::Violated)
            .count();
        SweepReport {
            theorem_id,
            params,
            grid,
            records,
            min_margin,
            n_violations,
        }
    }
}

/// Shared sweep options: evaluation control, the Holds/Violated separation,
/// and the override flag that skips the region gate (used by the search).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub eval: EvalConfig,
    pub margin_tol: f64,
    pub allow_out_of_region: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            eval: EvalConfig::default(),
            margin_tol: DEFAULT_MARGIN_TOL,
            allow_out_of_region: false,
        }
    }
}

impl SweepConfig {
    pub fn with_eval(mut self, eval: EvalConfig) -> Self {
        self.eval = eval;
        self
    }

    pub fn with_override(mut self) -> Self {
        self.allow_out_of_region = true;
        self
    }
}

fn ensure_branch(
    theorem: &'static str,
    expected: Branch,
    verdict: &RegionVerdict,
    allow: bool,
) -> Result<()> {
    if allow || verdict.branch == expected {
        Ok(())
    } else {
        Err(Error::RegionMismatch {
            theorem,
            expected,
            found: verdict.branch,
        })
    }
}

/// Inequality directions of the base theorem. `Ineq1`/`Ineq2` are the
/// increasing-branch claims, `Ineq3`/`Ineq4` the reversed (decreasing) ones;
/// the even-numbered pair uses the descending argument map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm21Direction {
    Ineq1,
    Ineq2,
    Ineq3,
    Ineq4,
}

impl Thm21Direction {
    pub fn required_branch(&self) -> Branch {
        match self {
            Thm21Direction::Ineq1 | Thm21Direction::Ineq2 => Branch::Increasing,
            Thm21Direction::Ineq3 | Thm21Direction::Ineq4 => Branch::Decreasing,
        }
    }
}

impl fmt::Display for Thm21Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Thm21Direction::Ineq1 => "ineq1",
            Thm21Direction::Ineq2 => "ineq2",
            Thm21Direction::Ineq3 => "ineq3",
            Thm21Direction::Ineq4 => "ineq4",
        })
    }
}

/// Directions for the power-series theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm22Direction {
    /// `λ_f(2√r/(1+r)) >= (1+r)·λ_f(r)`, requires `{aₙωₙ}` non-decreasing.
    Ineq5,
    /// The reversed claim, requires `{aₙωₙ}` non-increasing.
    Reversed,
}

impl fmt::Display for Thm22Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Thm22Direction::Ineq5 => "ineq5",
            Thm22Direction::Reversed => "ineq5-reversed",
        })
    }
}

/// Directions for the transformation-based theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm24Direction {
    Ineq6,
    Ineq7,
}

impl Thm24Direction {
    pub fn required_branch(&self) -> Branch {
        match self {
            Thm24Direction::Ineq6 => Branch::Increasing,
            Thm24Direction::Ineq7 => Branch::Decreasing,
        }
    }
}

impl fmt::Display for Thm24Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Thm24Direction::Ineq6 => "ineq6",
            Thm24Direction::Ineq7 => "ineq7",
        })
    }
}

/// Which decreasing-quotient family a sweep certifies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Thm23Kind {
    Bessel(BesselParams),
    Kummer(KummerParams),
}

impl Thm23Kind {
    fn label(&self) -> &'static str {
        match self {
            Thm23Kind::Bessel(_) => "2.3/bessel",
            Thm23Kind::Kummer(_) => "2.3/kummer",
        }
    }

    fn params(&self) -> Vec<(String, f64)> {
        match self {
            Thm23Kind::Bessel(bp) => [
                (String::from("kappa"), bp.kappa()),
                (String::from("c_sign"), bp.c_sign),
            ]
            .into_iter()
            .collect(),
            Thm23Kind::Kummer(kp) => [(String::from("p"), kp.p), (String::from("q"), kp.q)]
                .into_iter()
                .collect(),
        }
    }

    fn classify(&self) -> Result<RegionVerdict> {
        match self {
            Thm23Kind::Bessel(bp) => classify_bessel(bp),
            Thm23Kind::Kummer(kp) => classify_kummer(kp),
        }
    }

    fn eval(&self, x: f64, eval: &EvalConfig) -> Result<f64> {
        match self {
            Thm23Kind::Bessel(bp) => bessel_u(bp, x, eval)?.require_converged(),
            Thm23Kind::Kummer(kp) => kummer_phi(kp, x, eval)?.require_converged(),
        }
    }
}

fn ensure_unit_interval(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "r",
            value: r,
        })
    }
}

fn ascend_arg(r: f64) -> f64 {
    4.0 * r / ((1.0 + r) * (1.0 + r))
}

/// Single grid point of a base-theorem sweep.
pub fn thm21_point(
    t: &HyperTriple,
    direction: Thm21Direction,
    r: f64,
    eval: &EvalConfig,
    margin_tol: f64,
) -> Result<InequalityRecord> {
    ensure_unit_interval(r)?;
    let (lhs, rhs, margin) = match direction {
        Thm21Direction::Ineq1 | Thm21Direction::Ineq3 => {
            let lhs = gauss_2f1(t, ascend_arg(r), eval)?.require_converged()?;
            let rhs = (1.0 + r) * gauss_2f1(t, r * r, eval)?.require_converged()?;
            let margin = match direction {
                Thm21Direction::Ineq1 => lhs - rhs,
                _ => rhs - lhs,
            };
            (lhs, rhs, margin)
        }
        Thm21Direction::Ineq2 | Thm21Direction::Ineq4 => {
            let psi = (1.0 - r) / (1.0 + r);
            let lhs = gauss_2f1(t, psi * psi, eval)?.require_converged()?;
            let rhs =
                0.5 * (1.0 + r) * gauss_2f1(t, (1.0 - r) * (1.0 + r), eval)?.require_converged()?;
            let margin = match direction {
                Thm21Direction::Ineq2 => rhs - lhs,
                _ => lhs - rhs,
            };
            (lhs, rhs, margin)
        }
    };
    Ok(InequalityRecord::new(r, lhs, rhs, margin, margin_tol))
}

/// Sweeps one direction of the base theorem over the grid. Without the
/// override flag the parameters must classify into the direction's branch.
pub fn sweep_thm21(
    t: &HyperTriple,
    direction: Thm21Direction,
    grid: &Grid,
    cfg: &SweepConfig,
) -> Result<SweepReport> {
    grid.validate()?;
    let verdict = classify_thm21(t)?;
    ensure_branch(
        "2.1",
        direction.required_branch(),
        &verdict,
        cfg.allow_out_of_region,
    )?;
    let records = grid
        .points()
        .into_iter()
        .map(|r| thm21_point(t, direction, r, &cfg.eval, cfg.margin_tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::assemble(
        format!("2.1/{direction}"),
        triple_params(t),
        *grid,
        records,
    ))
}

fn triple_params(t: &HyperTriple) -> Vec<(String, f64)> {
    [
        (String::from("a"), t.a),
        (String::from("b"), t.b),
        (String::from("c"), t.c),
    ]
    .into_iter()
    .collect()
}

fn polyval(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Checks that the window `{aₙωₙ}₀..N` is monotone in the claimed direction;
/// sequences monotone only from some later index are rejected, not shifted.
fn check_coefficient_window(coeffs: &[f64], direction: Thm22Direction) -> Result<()> {
    let mut omega = 1.0;
    let mut prev = coeffs[0];
    for (n, &a) in coeffs.iter().enumerate().skip(1) {
        let k = n as f64;
        let ratio = k / (k - 0.5);
        omega *= ratio * ratio;
        let w = a * omega;
        let tol = STEP_TOL * f64::max(1.0, f64::max(fp::abs(prev), fp::abs(w)));
        let bad = match direction {
            Thm22Direction::Ineq5 => w < prev - tol,
            Thm22Direction::Reversed => w > prev + tol,
        };
        if bad {
            return Err(Error::CoefficientMismatch { index: n });
        }
        prev = w;
    }
    Ok(())
}

/// Sweeps the power-series inequality for the explicit coefficient window
/// `a_0..a_N` (N <= 512), with `f(x) = Σ aₙxⁿ` and `λ_f(x) = f(x²)`.
/// The `{aₙωₙ}` monotonicity hypothesis is verified before any evaluation.
pub fn sweep_thm22(
    coeffs: &[f64],
    direction: Thm22Direction,
    grid: &Grid,
    cfg: &SweepConfig,
) -> Result<SweepReport> {
    grid.validate()?;
    if coeffs.is_empty() || coeffs.len() > MAX_COEFF_INDEX + 1 {
        return Err(Error::Param {
            name: "coeffs",
            value: coeffs.len() as f64,
            reason: "window must hold 1..=513 coefficients",
        });
    }
    if !cfg.allow_out_of_region {
        check_coefficient_window(coeffs, direction)?;
    }
    let records = grid
        .points()
        .into_iter()
        .map(|r| {
            let lhs = polyval(coeffs, ascend_arg(r));
            let rhs = (1.0 + r) * polyval(coeffs, r * r);
            let margin = match direction {
                Thm22Direction::Ineq5 => lhs - rhs,
                Thm22Direction::Reversed => rhs - lhs,
            };
            InequalityRecord::new(r, lhs, rhs, margin, cfg.margin_tol)
        })
        .collect();
    let params = [(String::from("n_coeffs"), coeffs.len() as f64)]
        .into_iter()
        .collect();
    Ok(SweepReport::assemble(
        format!("2.2/{direction}"),
        params,
        *grid,
        records,
    ))
}

/// Single grid point of a decreasing-quotient (Bessel/Kummer) sweep.
pub fn thm23_point(
    kind: &Thm23Kind,
    r: f64,
    eval: &EvalConfig,
    margin_tol: f64,
) -> Result<InequalityRecord> {
    ensure_unit_interval(r)?;
    let lhs = kind.eval(ascend_arg(r), eval)?;
    let rhs = (1.0 + r) * kind.eval(r * r, eval)?;
    // claim is lhs <= rhs
    Ok(InequalityRecord::new(r, lhs, rhs, rhs - lhs, margin_tol))
}

/// Sweeps the Landen inequality for a generalized Bessel or Kummer series.
/// The stricter preamble κ-bound gates the Bessel sweep.
pub fn sweep_thm23(kind: &Thm23Kind, grid: &Grid, cfg: &SweepConfig) -> Result<SweepReport> {
    grid.validate()?;
    let verdict = kind.classify()?;
    ensure_branch("2.3", Branch::Decreasing, &verdict, cfg.allow_out_of_region)?;
    let records = grid
        .points()
        .into_iter()
        .map(|r| thm23_point(kind, r, &cfg.eval, cfg.margin_tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::assemble(
        String::from(kind.label()),
        kind.params(),
        *grid,
        records,
    ))
}

/// Single grid point of a transformation-theorem sweep.
pub fn thm24_point(
    t: &HyperTriple,
    direction: Thm24Direction,
    r: f64,
    eval: &EvalConfig,
    margin_tol: f64,
) -> Result<InequalityRecord> {
    ensure_unit_interval(r)?;
    let lhs = gauss_2f1(t, ascend_arg(r), eval)?.require_converged()?;
    let rhs = fp::pow(1.0 + r, 2.0 * t.a) * gauss_2f1(t, r * r, eval)?.require_converged()?;
    let margin = match direction {
        Thm24Direction::Ineq6 => lhs - rhs,
        Thm24Direction::Ineq7 => rhs - lhs,
    };
    Ok(InequalityRecord::new(r, lhs, rhs, margin, margin_tol))
}

/// Sweeps one direction of the transformation-based theorem.
pub fn sweep_thm24(
    t: &HyperTriple,
    direction: Thm24Direction,
    grid: &Grid,
    cfg: &SweepConfig,
) -> Result<SweepReport> {
    grid.validate()?;
    let verdict = classify_thm24(t)?;
    ensure_branch(
        "2.4",
        direction.required_branch(),
        &verdict,
        cfg.allow_out_of_region,
    )?;
    let records = grid
        .points()
        .into_iter()
        .map(|r| thm24_point(t, direction, r, &cfg.eval, cfg.margin_tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::assemble(
        format!("2.4/{direction}"),
        triple_params(t),
        *grid,
        records,
    ))
}

/// True when `(a, b)` satisfies one of the proof-step hypothesis sets for
/// the comparison `F(a,b;2b;r²) <= F(a,a+1/2-b;b+1/2;r²)`: the two
/// Pochhammer cases `1 <= 2b <= a+1/2` and `0 < 2b <= a`, or the
/// decreasing-γₙ route `a >= b` with `2a+1/2 >= 3b`.
pub fn ineq9_in_region(a: f64, b: f64) -> bool {
    let two_b = 2.0 * b;
    let case_one = two_b >= 1.0 - BOUNDARY_TOL && two_b <= a + 0.5 + BOUNDARY_TOL;
    let case_two = two_b > 0.0 && two_b <= a + BOUNDARY_TOL;
    let gamma_route = b > 0.0 && a >= b - BOUNDARY_TOL && 2.0 * a + 0.5 >= 3.0 * b - BOUNDARY_TOL;
    case_one || case_two || gamma_route
}

/// Single grid point of the proof-step comparison.
pub fn ineq9_point(
    a: f64,
    b: f64,
    r: f64,
    eval: &EvalConfig,
    margin_tol: f64,
) -> Result<InequalityRecord> {
    ensure_unit_interval(r)?;
    let lhs_triple = HyperTriple { a, b, c: 2.0 * b };
    let rhs_triple = HyperTriple {
        a,
        b: a + 0.5 - b,
        c: b + 0.5,
    };
    let lhs = gauss_2f1(&lhs_triple, r * r, eval)?.require_converged()?;
    let rhs = gauss_2f1(&rhs_triple, r * r, eval)?.require_converged()?;
    // claim is lhs <= rhs
    Ok(InequalityRecord::new(r, lhs, rhs, rhs - lhs, margin_tol))
}

/// Sweeps the proof-step inequality `F(a,b;2b;r²) <= F(a,a+1/2-b;b+1/2;r²)`.
pub fn sweep_ineq9(a: f64, b: f64, grid: &Grid, cfg: &SweepConfig) -> Result<SweepReport> {
    grid.validate()?;
    if !(a > 0.0) {
        return Err(Error::Param {
            name: "a",
            value: a,
            reason: "must be positive",
        });
    }
    if !(b > 0.0) {
        return Err(Error::Param {
            name: "b",
            value: b,
            reason: "must be positive",
        });
    }
    if !cfg.allow_out_of_region && !ineq9_in_region(a, b) {
        return Err(Error::RegionMismatch {
            theorem: "ineq9",
            expected: Branch::Decreasing,
            found: Branch::Outside,
        });
    }
    let records = grid
        .points()
        .into_iter()
        .map(|r| ineq9_point(a, b, r, &cfg.eval, cfg.margin_tol))
        .collect::<Result<Vec<_>>>()?;
    let params = [(String::from("a"), a), (String::from("b"), b)]
        .into_iter()
        .collect();
    Ok(SweepReport::assemble(
        String::from("ineq9"),
        params,
        *grid,
        records,
    ))
}

/// The two closed-form reports from [`elementary_checks`].
#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryChecks {
    pub arcsin: SweepReport,
    pub log_power: SweepReport,
}

/// Certifies the two terminal elementary inequalities,
/// `(√r/2)·arcsin(2√r/(1+r)) < arcsin r` and
/// `((1+√r)/(1-√r))^{√r} > (1+r)/(1-r)`, via closed forms only.
pub fn elementary_checks(grid: &Grid, margin_tol: f64) -> Result<ElementaryChecks> {
    grid.validate()?;
    let points = grid.points();
    let arcsin_records = points
        .iter()
        .map(|&r| {
            let s = fp::sqrt(r);
            let lhs = 0.5 * s * fp::asin(2.0 * s / (1.0 + r));
            let rhs = fp::asin(r);
            InequalityRecord::new(r, lhs, rhs, rhs - lhs, margin_tol)
        })
        .collect();
    let log_power_records = points
        .iter()
        .map(|&r| {
            let s = fp::sqrt(r);
            let lhs = fp::pow((1.0 + s) / (1.0 - s), s);
            let rhs = (1.0 + r) / (1.0 - r);
            InequalityRecord::new(r, lhs, rhs, lhs - rhs, margin_tol)
        })
        .collect();
    Ok(ElementaryChecks {
        arcsin: SweepReport::assemble(
            String::from("elementary/arcsin"),
            Vec::new(),
            *grid,
            arcsin_records,
        ),
        log_power: SweepReport::assemble(
            String::from("elementary/log-power"),
            Vec::new(),
            *grid,
            log_power_records,
        ),
    })
}

/// Numerator of a quotient probe against the fixed denominator
/// `F(1/2,1/2;1;x)` (equivalently `(2/π)·K(√x)`).
#[derive(Debug, Clone, PartialEq)]
pub enum QuotientNumerator {
    Hyper(HyperTriple),
    Kummer(KummerParams),
    Bessel(BesselParams),
    /// Explicit window `a_0..a_N`, evaluated as the polynomial `Σ aₙxⁿ`.
    Coefficients(Vec<f64>),
}

/// Classifies `x ↦ f(x)/F(1/2,1/2;1;x)` over the grid by consecutive
/// comparisons, the numeric counterpart of the coefficient-ratio lemma.
pub fn quotient_probe(
    numerator: &QuotientNumerator,
    grid: &Grid,
    cfg: &EvalConfig,
) -> Result<Monotonicity> {
    grid.validate()?;
    if let QuotientNumerator::Coefficients(coeffs) = numerator {
        if coeffs.is_empty() || coeffs.len() > MAX_COEFF_INDEX + 1 {
            return Err(Error::Param {
                name: "coeffs",
                value: coeffs.len() as f64,
                reason: "window must hold 1..=513 coefficients",
            });
        }
    }
    let denom = HyperTriple {
        a: 0.5,
        b: 0.5,
        c: 1.0,
    };
    let mut values = Vec::new();
    for x in grid.points() {
        let numerator_value = match numerator {
            QuotientNumerator::Hyper(t) => gauss_2f1(t, x, cfg)?.require_converged()?,
            QuotientNumerator::Kummer(kp) => kummer_phi(kp, x, cfg)?.require_converged()?,
            QuotientNumerator::Bessel(bp) => bessel_u(bp, x, cfg)?.require_converged()?,
            QuotientNumerator::Coefficients(coeffs) => polyval(coeffs, x),
        };
        let denominator_value = gauss_2f1(&denom, x, cfg)?.require_converged()?;
        values.push(numerator_value / denominator_value);
    }
    Ok(classify_steps(&values).0)
}

/// What the counterexample search stress-tests.
///
/// Expected parameter names in the box: `a`,`b`,`c` for the hypergeometric
/// targets, `a`,`b` for `Ineq9`, `p`,`q` for the Kummer target and
/// `kappa`,`c_sign` for the Bessel target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchTarget {
    Thm21(Thm21Direction),
    Thm24(Thm24Direction),
    Ineq9,
    Thm23Kummer,
    Thm23Bessel,
}

impl SearchTarget {
    fn required_names(&self) -> &'static [&'static str] {
        match self {
            SearchTarget::Thm21(_) | SearchTarget::Thm24(_) => &["a", "b", "c"],
            SearchTarget::Ineq9 => &["a", "b"],
            SearchTarget::Thm23Kummer => &["p", "q"],
            SearchTarget::Thm23Bessel => &["kappa", "c_sign"],
        }
    }
}

/// Closed parameter interval; `lo == hi` pins the parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamRange {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
}

/// Rectangle of admissible parameters, sampled uniformly per coordinate.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParamBox {
    pub ranges: Vec<ParamRange>,
}

impl ParamBox {
    pub fn validate(&self) -> Result<()> {
        for range in &self.ranges {
            if !range.lo.is_finite() || !range.hi.is_finite() || range.lo > range.hi {
                return Err(Error::Param {
                    name: "param_box",
                    value: range.lo,
                    reason: "each range needs finite lo <= hi",
                });
            }
        }
        Ok(())
    }
}

/// A search task: the claimed inequality plus the box to sample from.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub target: SearchTarget,
    pub param_box: ParamBox,
}

/// First sampled parameter point (and grid point) violating the claim.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub sample_index: usize,
    pub params: Vec<(String, f64)>,
    pub record: InequalityRecord,
}

enum SampledTarget {
    Hyper(HyperTriple, Thm21Direction),
    Transf(HyperTriple, Thm24Direction),
    Proof(f64, f64),
    Kind(Thm23Kind),
}

/// Seeded uniform sampling over the box; each sample scans the full
/// `r`-grid in order and the first `Violated` record wins. Inadmissible
/// draws are skipped (they still consume budget and random draws, so the
/// outcome is a pure function of seed, budget and grid); evaluation errors
/// propagate.
pub fn search_counterexample(
    spec: &SearchSpec,
    seed: u64,
    budget: usize,
    grid: &Grid,
    cfg: &SweepConfig,
) -> Result<Option<Counterexample>> {
    grid.validate()?;
    spec.param_box.validate()?;
    if budget == 0 {
        return Err(Error::Param {
            name: "budget",
            value: 0.0,
            reason: "must be at least 1",
        });
    }
    for required in spec.target.required_names() {
        if !spec.param_box.ranges.iter().any(|rg| rg.name == *required) {
            return Err(Error::Param {
                name: "param_box",
                value: f64::NAN,
                reason: "missing a required parameter range",
            });
        }
    }
    let points = grid.points();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample_index in 0..budget {
        let draws: Vec<(String, f64)> = spec
            .param_box
            .ranges
            .iter()
            .map(|rg| (rg.name.clone(), rng.gen_range(rg.lo..=rg.hi)))
            .collect();
        let value_of = |name: &str| -> f64 {
            draws
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| *v)
                .expect("required name checked above")
        };
        // admissibility of the draw; failures skip the sample
        let target = match spec.target {
            SearchTarget::Thm21(direction) => {
                match HyperTriple::new(value_of("a"), value_of("b"), value_of("c")) {
                    Ok(t) => SampledTarget::Hyper(t, direction),
                    Err(_) => continue,
                }
            }
            SearchTarget::Thm24(direction) => {
                match HyperTriple::new(value_of("a"), value_of("b"), value_of("c")) {
                    Ok(t) if t.a > 0.0 && t.b > 0.0 => SampledTarget::Transf(t, direction),
                    _ => continue,
                }
            }
            SearchTarget::Ineq9 => {
                let (a, b) = (value_of("a"), value_of("b"));
                if !(a > 0.0 && b > 0.0)
                    || HyperTriple::new(a, b, 2.0 * b).is_err()
                    || HyperTriple::new(a, a + 0.5 - b, b + 0.5).is_err()
                {
                    continue;
                }
                SampledTarget::Proof(a, b)
            }
            SearchTarget::Thm23Kummer => match KummerParams::new(value_of("p"), value_of("q")) {
                Ok(kp) => SampledTarget::Kind(Thm23Kind::Kummer(kp)),
                Err(_) => continue,
            },
            SearchTarget::Thm23Bessel => {
                match BesselParams::from_kappa(value_of("kappa"), value_of("c_sign")) {
                    Ok(bp) => SampledTarget::Kind(Thm23Kind::Bessel(bp)),
                    Err(_) => continue,
                }
            }
        };
        for &r in &points {
            let record = match &target {
                SampledTarget::Hyper(t, direction) => {
                    thm21_point(t, *direction, r, &cfg.eval, cfg.margin_tol)?
                }
                SampledTarget::Transf(t, direction) => {
                    thm24_point(t, *direction, r, &cfg.eval, cfg.margin_tol)?
                }
                SampledTarget::Proof(a, b) => ineq9_point(*a, *b, r, &cfg.eval, cfg.margin_tol)?,
                SampledTarget::Kind(kind) => thm23_point(kind, r, &cfg.eval, cfg.margin_tol)?,
            };
            if record.verdict == Verdict::Violated {
                return Ok(Some(Counterexample {
                    sample_index,
                    params: draws,
                    record,
                }));
            }
        }
    }
    Ok(None)
}
