//! Parameter-region predicates for the monotone-quotient theorems and probes
//! of the proof-level coefficient-ratio sequences (αₙ, βₙ, γₙ, ωₙ, Δₙ).
//!
//! All inequalities are non-strict. A comparison that holds with equality
//! within [`BOUNDARY_TOL`] raises the verdict's `boundary` flag, so callers
//! can expect zero margins from the corresponding sweeps.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::fp;
use crate::specialfn::{is_nonpositive_integer, ln_gamma, BesselParams, HyperTriple, KummerParams};
use crate::{Error, Result};

/// Equality window for the non-strict region comparisons.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Sequence probes accept at most this many steps.
pub const MAX_PROBE_LEN: usize = 10_000;

/// Which monotone branch (if any) a parameter set satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Increasing,
    Decreasing,
    Outside,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Increasing => "Increasing",
            Branch::Decreasing => "Decreasing",
            Branch::Outside => "Outside",
        })
    }
}

/// Outcome of a region classification; `fired_condition` is empty exactly
/// when the branch is [`Branch::Outside`].
#[derive(Debug, Clone, PartialEq)]
pub struct RegionVerdict {
    pub branch: Branch,
    pub fired_condition: String,
    /// True when some defining inequality held with equality within
    /// [`BOUNDARY_TOL`].
    pub boundary: bool,
}

impl RegionVerdict {
    fn outside() -> Self {
        RegionVerdict {
            branch: Branch::Outside,
            fired_condition: String::new(),
            boundary: false,
        }
    }
}

/// Monotonicity classification of a finite sequence window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Constant,
    NonMonotone,
}

impl fmt::Display for Monotonicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Monotonicity::Increasing => "Increasing",
            Monotonicity::Decreasing => "Decreasing",
            Monotonicity::Constant => "Constant",
            Monotonicity::NonMonotone => "NonMonotone",
        })
    }
}

/// Non-strict `x >= y`, reported as (holds, at-equality-within-tol).
fn ge(x: f64, y: f64) -> (bool, bool) {
    let at = fp::abs(x - y) <= BOUNDARY_TOL;
    (x >= y || at, at)
}

/// Non-strict `x <= y`, reported as (holds, at-equality-within-tol).
fn le(x: f64, y: f64) -> (bool, bool) {
    let at = fp::abs(x - y) <= BOUNDARY_TOL;
    (x <= y || at, at)
}

/// Both-sided `lo <= mid <= hi`.
fn between(lo: f64, mid: f64, hi: f64) -> (bool, bool) {
    let (l, bl) = ge(mid, lo);
    let (u, bu) = le(mid, hi);
    (l && u, bl || bu)
}

/// Hypothesis test for the base monotone-quotient theorem:
/// branch a needs `a+b >= c` and `4ab >= max{1,c}`, branch b needs
/// `a+b <= c` and `4ab <= min{1,c}`.
///
/// When both branches hold (all comparisons at equality, e.g. (1/2,1/2,1))
/// the increasing branch is reported with `boundary = true`; the quotient is
/// constant there.
pub fn classify_thm21(t: &HyperTriple) -> Result<RegionVerdict> {
    t.validate()?;
    let (a, b, c) = (t.a, t.b, t.c);
    let (inc_sum, b1) = ge(a + b, c);
    let (inc_prod, b2) = ge(4.0 * a * b, f64::max(1.0, c));
    if inc_sum && inc_prod {
        return Ok(RegionVerdict {
            branch: Branch::Increasing,
            fired_condition: String::from("2.1a: a+b >= c and 4ab >= max{1,c}"),
            boundary: b1 || b2,
        });
    }
    let (dec_sum, b3) = le(a + b, c);
    let (dec_prod, b4) = le(4.0 * a * b, f64::min(1.0, c));
    if dec_sum && dec_prod {
        return Ok(RegionVerdict {
            branch: Branch::Decreasing,
            fired_condition: String::from("2.1b: a+b <= c and 4ab <= min{1,c}"),
            boundary: b3 || b4,
        });
    }
    Ok(RegionVerdict::outside())
}

/// Hypothesis test for the transformation-based theorem. The five
/// sub-conditions are checked in order and the first satisfied one is named
/// in `fired_condition`; requires `a, b > 0`.
pub fn classify_thm24(t: &HyperTriple) -> Result<RegionVerdict> {
    t.validate()?;
    let (a, b, c) = (t.a, t.b, t.c);
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
    let conditions: [(Branch, &str, (bool, bool)); 5] = [
        (
            Branch::Increasing,
            "2.4a: max{1,c} <= 2b <= a+1/2",
            between(f64::max(1.0, c), 2.0 * b, a + 0.5),
        ),
        (
            Branch::Increasing,
            "2.4a: c <= 2b <= a",
            between(c, 2.0 * b, a),
        ),
        (
            Branch::Increasing,
            "2.4a: 3c <= 6b <= min{6a,4a+1}",
            between(3.0 * c, 6.0 * b, f64::min(6.0 * a, 4.0 * a + 1.0)),
        ),
        (
            Branch::Decreasing,
            "2.4b: a+1/2 <= 2b <= min{1,c}",
            between(a + 0.5, 2.0 * b, f64::min(1.0, c)),
        ),
        (
            Branch::Decreasing,
            "2.4b: max{6a,4a+1} <= 6b <= 3c",
            between(f64::max(6.0 * a, 4.0 * a + 1.0), 6.0 * b, 3.0 * c),
        ),
    ];
    for (branch, label, (holds, boundary)) in conditions {
        if holds {
            return Ok(RegionVerdict {
                branch,
                fired_condition: String::from(label),
                boundary,
            });
        }
    }
    Ok(RegionVerdict::outside())
}

/// The two published κ-bounds for the generalized Bessel quotient. The
/// preamble derivation states `κ >= max{0, -c, -(c+1)/4}` while the theorem
/// statement prints `κ >= max{-1, -c, -(c+1)/4}`; both are evaluated and
/// neither is assumed to be the intended one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaBounds {
    /// Threshold `max{0, -c, -(c+1)/4}` (preamble).
    pub preamble_threshold: f64,
    /// Threshold `max{-1, -c, -(c+1)/4}` (theorem statement).
    pub statement_threshold: f64,
    pub preamble_holds: bool,
    pub statement_holds: bool,
    pub boundary: bool,
}

/// Evaluates both published κ-bounds for `bp`.
pub fn bessel_kappa_bounds(bp: &BesselParams) -> KappaBounds {
    let c = bp.c_sign;
    let kappa = bp.kappa();
    let tail = f64::max(-c, -(c + 1.0) / 4.0);
    let preamble_threshold = f64::max(0.0, tail);
    let statement_threshold = f64::max(-1.0, tail);
    let (preamble_holds, b1) = ge(kappa, preamble_threshold);
    let (statement_holds, b2) = ge(kappa, statement_threshold);
    KappaBounds {
        preamble_threshold,
        statement_threshold,
        preamble_holds,
        statement_holds,
        boundary: b1 || b2,
    }
}

/// Region test for the generalized Bessel quotient.
///
/// The stricter preamble bound gates the decreasing branch (and therefore
/// the sweeps); the theorem-statement bound is reported alongside it. Use
/// [`bessel_kappa_bounds`] to inspect both bounds when the verdict is
/// `Outside`.
pub fn classify_bessel(bp: &BesselParams) -> Result<RegionVerdict> {
    bp.validate()?;
    let bounds = bessel_kappa_bounds(bp);
    if bounds.preamble_holds {
        Ok(RegionVerdict {
            branch: Branch::Decreasing,
            fired_condition: String::from(
                "2.3: kappa >= max{0,-c,-(c+1)/4} (preamble bound; statement bound \
                 max{-1,-c,-(c+1)/4} holds as well)",
            ),
            boundary: bounds.boundary,
        })
    } else {
        Ok(RegionVerdict::outside())
    }
}

/// Region test for the Kummer quotient: decreasing iff
/// `q >= max{0, 4p, p+3/4}`.
pub fn classify_kummer(kp: &KummerParams) -> Result<RegionVerdict> {
    kp.validate()?;
    let threshold = f64::max(0.0, f64::max(4.0 * kp.p, kp.p + 0.75));
    let (holds, boundary) = ge(kp.q, threshold);
    if holds {
        Ok(RegionVerdict {
            branch: Branch::Decreasing,
            fired_condition: String::from("2.3: q >= max{0,4p,p+3/4}"),
            boundary,
        })
    } else {
        Ok(RegionVerdict::outside())
    }
}

/// The quadratic controlling the sign of `α_{n+1}/α_n - 1`:
/// `Δₙ = (a+b-c)n² + (a+b-c+ab-1/4)n + ab - c/4`.
pub fn delta_n(t: &HyperTriple, n: usize) -> f64 {
    let (a, b, c) = (t.a, t.b, t.c);
    let k = n as f64;
    (a + b - c) * k * k + (a + b - c + a * b - 0.25) * k + a * b - c / 4.0
}

/// `ωₙ = [(1)ₙ/((1/2)ₙ)]²`, accumulated as a product of squared ratios.
pub fn omega_seq(n: usize) -> f64 {
    let mut acc = 1.0;
    for k in 1..=n {
        let r = k as f64 / (k as f64 - 0.5);
        acc *= r * r;
    }
    acc
}

/// `ωₙ` through the equivalent gamma-ratio formula
/// `π·[Γ(n+1)/Γ(n+1/2)]²`, used as an independent route.
pub fn omega_seq_gamma(n: usize) -> f64 {
    let k = n as f64;
    PI * fp::exp(2.0 * (ln_gamma(k + 1.0) - ln_gamma(k + 0.5)))
}

/// Identifier of a probed sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqId {
    Alpha,
    Beta,
    Gamma,
    Omega,
    Delta,
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqId::Alpha => "alpha",
            SeqId::Beta => "beta",
            SeqId::Gamma => "gamma",
            SeqId::Omega => "omega",
            SeqId::Delta => "delta",
        })
    }
}

/// A probed sequence together with its parameters.
///
/// * `Alpha`: `(a)ₙ(b)ₙ/(c)ₙ · (1)ₙ/((1/2)ₙ)²` — the base-theorem quotient.
/// * `Beta`: `(2b)ₙ/(c)ₙ` — the transformation-proof quotient.
/// * `Gamma`: `(b)ₙ(b+1/2)ₙ/((2b)ₙ(a+1/2-b)ₙ)`.
/// * `Omega`: `[(1)ₙ/((1/2)ₙ)]²`.
/// * `Delta`: the quadratic [`delta_n`] itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeqSpec {
    Alpha(HyperTriple),
    Beta(HyperTriple),
    Gamma { a: f64, b: f64 },
    Omega,
    Delta(HyperTriple),
}

impl SeqSpec {
    pub fn id(&self) -> SeqId {
        match self {
            SeqSpec::Alpha(_) => SeqId::Alpha,
            SeqSpec::Beta(_) => SeqId::Beta,
            SeqSpec::Gamma { .. } => SeqId::Gamma,
            SeqSpec::Omega => SeqId::Omega,
            SeqSpec::Delta(_) => SeqId::Delta,
        }
    }

    /// Parameter record for reporting.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match self {
            SeqSpec::Alpha(t) | SeqSpec::Beta(t) | SeqSpec::Delta(t) => {
                vec![("a", t.a), ("b", t.b), ("c", t.c)]
            }
            SeqSpec::Gamma { a, b } => vec![("a", *a), ("b", *b)],
            SeqSpec::Omega => Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SeqSpec::Alpha(t) | SeqSpec::Beta(t) => t.validate(),
            SeqSpec::Delta(_) | SeqSpec::Omega => Ok(()),
            SeqSpec::Gamma { a, b } => {
                if !(*b > 0.0) {
                    return Err(Error::Param {
                        name: "b",
                        value: *b,
                        reason: "must be positive",
                    });
                }
                // both denominators must stay clear of zero for every n
                if is_nonpositive_integer(2.0 * b) {
                    return Err(Error::Param {
                        name: "2b",
                        value: 2.0 * b,
                        reason: "must not be zero or a negative integer",
                    });
                }
                if is_nonpositive_integer(a + 0.5 - b) {
                    return Err(Error::Param {
                        name: "a+1/2-b",
                        value: a + 0.5 - b,
                        reason: "must not be zero or a negative integer",
                    });
                }
                Ok(())
            }
        }
    }
}

/// First-N behaviour of a named sequence with its monotonicity class.
/// `first_violation` is the first step index opposing the established
/// direction; it is present exactly when the class is `NonMonotone`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeqProbe {
    pub spec: SeqSpec,
    pub n_max: usize,
    pub classification: Monotonicity,
    pub first_violation: Option<usize>,
}

/// Comparison tolerance for consecutive sequence/quotient values.
pub const STEP_TOL: f64 = 1e-12;

/// Classifies `values` by consecutive comparisons; step `n` compares
/// `values[n+1]` against `values[n]` with tolerance `STEP_TOL` relative to
/// `max(1, |·|)`.
pub(crate) fn classify_steps(values: &[f64]) -> (Monotonicity, Option<usize>) {
    let mut direction = 0i8;
    let mut any_up = false;
    let mut any_down = false;
    let mut first_violation = None;
    for n in 0..values.len().saturating_sub(1) {
        let (prev, next) = (values[n], values[n + 1]);
        let tol = STEP_TOL * f64::max(1.0, f64::max(fp::abs(prev), fp::abs(next)));
        let step = if next > prev + tol {
            1
        } else if next < prev - tol {
            -1
        } else {
            0
        };
        if step == 0 {
            continue;
        }
        if direction == 0 {
            direction = step;
        } else if step != direction && first_violation.is_none() {
            first_violation = Some(n);
        }
        if step > 0 {
            any_up = true;
        } else {
            any_down = true;
        }
    }
    let class = match (any_up, any_down) {
        (false, false) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (true, true) => Monotonicity::NonMonotone,
    };
    (
        class,
        if class == Monotonicity::NonMonotone {
            first_violation
        } else {
            None
        },
    )
}

/// Evaluates the named sequence on `n ∈ [0, n_max]` and classifies it.
pub fn seq_probe(spec: &SeqSpec, n_max: usize) -> Result<SeqProbe> {
    if n_max == 0 || n_max > MAX_PROBE_LEN {
        return Err(Error::Param {
            name: "n_max",
            value: n_max as f64,
            reason: "must lie in 1..=10000",
        });
    }
    spec.validate()?;
    let mut values = Vec::with_capacity(n_max + 1);
    match *spec {
        SeqSpec::Alpha(t) => {
            let (a, b, c) = (t.a, t.b, t.c);
            let mut v = 1.0;
            values.push(v);
            for n in 0..n_max {
                let k = n as f64;
                v *= (a + k) * (b + k) * (1.0 + k) / ((c + k) * (0.5 + k) * (0.5 + k));
                values.push(v);
            }
        }
        SeqSpec::Beta(t) => {
            let (b, c) = (t.b, t.c);
            let mut v = 1.0;
            values.push(v);
            for n in 0..n_max {
                let k = n as f64;
                v *= (2.0 * b + k) / (c + k);
                values.push(v);
            }
        }
        SeqSpec::Gamma { a, b } => {
            let mut v = 1.0;
            values.push(v);
            for n in 0..n_max {
                let k = n as f64;
                v *= (b + k) * (b + 0.5 + k) / ((2.0 * b + k) * (a + 0.5 - b + k));
                values.push(v);
            }
        }
        SeqSpec::Omega => {
            let mut v = 1.0;
            values.push(v);
            for n in 0..n_max {
                let k = n as f64;
                let r = (1.0 + k) / (0.5 + k);
                v *= r * r;
                values.push(v);
            }
        }
        SeqSpec::Delta(t) => {
            for n in 0..=n_max {
                values.push(delta_n(&t, n));
            }
        }
    }
    let (classification, first_violation) = classify_steps(&values);
    Ok(SeqProbe {
        spec: *spec,
        n_max,
        classification,
        first_violation,
    })
}
