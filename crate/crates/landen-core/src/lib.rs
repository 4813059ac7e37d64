//! Special-function evaluation and numerical certification of Landen-type
//! identities and inequalities.
//!
//! The crate is organised in four layers:
//!
//! * [`specialfn`] — direct series summation of the Gaussian hypergeometric
//!   function, the Kummer (confluent) hypergeometric function and the
//!   generalized Bessel series, plus AGM and closed-form oracles for the
//!   complete elliptic integral of the first kind.
//! * [`landen`] — the ascending/descending Landen argument maps and residual
//!   checks for the two classical identities and their two hypergeometric
//!   generalizations.
//! * [`regions`] — parameter-region classifiers for the monotone-quotient
//!   theorems together with probes of the underlying coefficient-ratio
//!   sequences.
//! * [`verify`] — grid sweeps that certify each inequality over `r ∈ (0,1)`,
//!   quotient monotonicity probes, and seeded counterexample search.
//!
//! Everything is pure `f64` arithmetic with no shared state, so all
//! operations are safe to call concurrently. The crate is `no_std`
//! (with `alloc`); float transcendentals come from `libm`.

#![cfg_attr(not(test), no_std)]
// Negated comparisons like `!(x >= 0.0)` are deliberate: they are true for
// NaN, so domain checks reject it in one test.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
mod fp;

pub mod landen;
pub mod regions;
pub mod specialfn;
pub mod verify;

pub use error::{Error, Result};
