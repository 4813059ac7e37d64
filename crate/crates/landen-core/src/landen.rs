//! Landen argument transformations and residual checks for the two classical
//! identities
//!
//! ```text
//! K(2√r/(1+r)) = (1+r)·K(r)        K((1-r)/(1+r)) = ((1+r)/2)·K(√(1-r²))
//! ```
//!
//! and for the hypergeometric transformation that generalizes them,
//!
//! ```text
//! F(a,b;2b;4r/(1+r)²) = (1+r)^{2a}·F(a, a+1/2-b; b+1/2; r²)
//! ```
//!
//! together with its complementary (descending) companion.

use crate::fp;
use crate::specialfn::{elliptic_k, gauss_2f1, EllipticMethod, EvalConfig, HyperTriple};
use crate::{Error, Result};

/// Both sides of an identity at one argument, with the normalized residual
/// `|lhs - rhs| / max(1, |rhs|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResidual {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_residual: f64,
}

impl IdentityResidual {
    fn new(r: f64, lhs: f64, rhs: f64) -> Self {
        IdentityResidual {
            r,
            lhs,
            rhs,
            rel_residual: fp::abs(lhs - rhs) / f64::max(1.0, fp::abs(rhs)),
        }
    }
}

/// Ascending Landen modulus map `r ↦ 2√r/(1+r)`; maps [0,1] onto [0,1] with
/// fixed points 0 and 1.
pub fn phi_ascend(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    Ok(2.0 * fp::sqrt(r) / (1.0 + r))
}

/// Descending Landen modulus map `r ↦ (1-r)/(1+r)`; an involution on [0,1].
pub fn psi_descend(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    Ok((1.0 - r) / (1.0 + r))
}

/// First Landen identity, `K(2√r/(1+r)) = (1+r)·K(r)`, both sides by AGM.
///
/// `r ≤ 0.97` keeps the transformed modulus comfortably inside the domain
/// guard; larger `r` propagates the guard's `DomainError`.
pub fn check_identity_first(r: f64, cfg: &EvalConfig) -> Result<IdentityResidual> {
    check_identity_first_via(r, EllipticMethod::Agm, cfg)
}

/// First Landen identity via an explicit evaluation route.
pub fn check_identity_first_via(
    r: f64,
    method: EllipticMethod,
    cfg: &EvalConfig,
) -> Result<IdentityResidual> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    let m = phi_ascend(r)?;
    let lhs = elliptic_k(m, method, cfg)?.require_converged()?;
    let rhs = (1.0 + r) * elliptic_k(r, method, cfg)?.require_converged()?;
    Ok(IdentityResidual::new(r, lhs, rhs))
}

/// Second Landen identity, `K((1-r)/(1+r)) = ((1+r)/2)·K(√(1-r²))`, both
/// sides by AGM.
pub fn check_identity_second(r: f64, cfg: &EvalConfig) -> Result<IdentityResidual> {
    check_identity_second_via(r, EllipticMethod::Agm, cfg)
}

/// Second Landen identity via an explicit evaluation route.
pub fn check_identity_second_via(
    r: f64,
    method: EllipticMethod,
    cfg: &EvalConfig,
) -> Result<IdentityResidual> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    let m = psi_descend(r)?;
    let lhs = elliptic_k(m, method, cfg)?.require_converged()?;
    let complement = fp::sqrt((1.0 - r) * (1.0 + r));
    let rhs = 0.5 * (1.0 + r) * elliptic_k(complement, method, cfg)?.require_converged()?;
    Ok(IdentityResidual::new(r, lhs, rhs))
}

fn ensure_transf_params(b: f64) -> Result<()> {
    HyperTriple::new(0.0, 0.0, 2.0 * b).map_err(|_| Error::Param {
        name: "2b",
        value: 2.0 * b,
        reason: "must be admissible as a c-parameter",
    })?;
    HyperTriple::new(0.0, 0.0, b + 0.5).map_err(|_| Error::Param {
        name: "b+1/2",
        value: b + 0.5,
        reason: "must be admissible as a c-parameter",
    })?;
    Ok(())
}

/// Generalized first Landen identity,
/// `F(a,b;2b;4r/(1+r)²) = (1+r)^{2a}·F(a, a+1/2-b; b+1/2; r²)`,
/// both sides by series.
pub fn check_transf(a: f64, b: f64, r: f64, cfg: &EvalConfig) -> Result<IdentityResidual> {
    ensure_transf_params(b)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    let y = 4.0 * r / ((1.0 + r) * (1.0 + r));
    let lhs_triple = HyperTriple { a, b, c: 2.0 * b };
    let rhs_triple = HyperTriple {
        a,
        b: a + 0.5 - b,
        c: b + 0.5,
    };
    let lhs = gauss_2f1(&lhs_triple, y, cfg)?.require_converged()?;
    let inner = gauss_2f1(&rhs_triple, r * r, cfg)?.require_converged()?;
    let rhs = fp::pow(1.0 + r, 2.0 * a) * inner;
    Ok(IdentityResidual::new(r, lhs, rhs))
}

/// Generalized second Landen identity,
/// `F(a,b;2b;1-r²) = ((1+r)/2)^{-2a}·F(a, a+1/2-b; b+1/2; ((1-r)/(1+r))²)`.
pub fn check_transf_complement(
    a: f64,
    b: f64,
    r: f64,
    cfg: &EvalConfig,
) -> Result<IdentityResidual> {
    ensure_transf_params(b)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    let psi = psi_descend(r)?;
    let lhs_triple = HyperTriple { a, b, c: 2.0 * b };
    let rhs_triple = HyperTriple {
        a,
        b: a + 0.5 - b,
        c: b + 0.5,
    };
    let lhs = gauss_2f1(&lhs_triple, (1.0 - r) * (1.0 + r), cfg)?.require_converged()?;
    let inner = gauss_2f1(&rhs_triple, psi * psi, cfg)?.require_converged()?;
    let rhs = fp::pow(0.5 * (1.0 + r), -2.0 * a) * inner;
    Ok(IdentityResidual::new(r, lhs, rhs))
}
