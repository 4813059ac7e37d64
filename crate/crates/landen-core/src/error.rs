use core::fmt;

use crate::regions::Branch;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the supported domain.
    Domain { name: &'static str, value: f64 },
    /// A parameter fails an admissibility requirement.
    Param {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// A series evaluation hit `max_terms` before meeting the tail criterion.
    SlowConvergence { terms: usize, tail_bound: f64 },
    /// The parameters do not satisfy the branch hypothesis claimed by a sweep
    /// direction (pass the override flag to sweep anyway).
    RegionMismatch {
        theorem: &'static str,
        expected: Branch,
        found: Branch,
    },
    /// A coefficient window is not monotone in the claimed direction.
    CoefficientMismatch { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { name, value } => {
                write!(f, "argument {name}={value} outside the supported domain")
            }
            Error::Param {
                name,
                value,
                reason,
            } => write!(f, "parameter {name}={value} inadmissible: {reason}"),
            Error::SlowConvergence { terms, tail_bound } => write!(
                f,
                "series did not converge within {terms} terms (tail bound {tail_bound:e})"
            ),
            Error::RegionMismatch {
                theorem,
                expected,
                found,
            } => write!(
                f,
                "{theorem} hypothesis not satisfied: direction claims the {expected} branch \
                 but the parameters classify as {found}"
            ),
            Error::CoefficientMismatch { index } => write!(
                f,
                "coefficient window is not monotone in the claimed direction \
                 (first mismatch at index {index})"
            ),
        }
    }
}

impl core::error::Error for Error {}
