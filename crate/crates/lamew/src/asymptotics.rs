//! Large-order asymptotics and convergence domains for the Weierstrass-form
//! series.
//!
//! The Frobenius recurrence coefficients approach A_n → 1+ρ², B_n → −ρ² as
//! n → ∞, so the coefficient tail behaves like the constant-coefficient
//! recurrence ĉ_{n+1} = (1+ρ²)ĉ_n − ρ²ĉ_{n−1}. Its generating function
//!
//! ```text
//! Σ ĉ_n ξⁿ = 1 / (1 + ρ²ξ² − (1+ρ²)ξ) = 1 / ((1−ξ)(1−ρ²ξ))
//! ```
//!
//! is the closed-form asymptotic limit, and its geometric-convergence
//! condition |(1+ρ²)ξ − ρ²ξ²| < 1 is the series' convergence domain (for
//! 0 < ρ < 1 this reduces to 0 ≤ ξ < 1). For ρ ≈ 0 the ρ²ξ² term drops and
//! the limit degenerates to 1/(1 − (1+ρ²)ξ) on ξ < 1/(1+ρ²).

use crate::error::{LamewError, Result};
use crate::frobenius::LameParams;

/// Verdict of a convergence-domain predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainVerdict {
    /// True iff the point lies strictly inside the domain.
    pub inside: bool,
    /// Distance to the boundary: 1 − |(1+ρ²)ξ − ρ²ξ²|.
    pub margin: f64,
}

/// Closed-form large-order limit 1/(1 + ρ²ξ² − (1+ρ²)ξ) = 1/((1−ξ)(1−ρ²ξ)).
pub fn lame_asymptotic_limit(p: &LameParams, xi: f64) -> Result<f64> {
    let r2 = p.rho * p.rho;
    let denom = 1.0 + r2 * xi * xi - (1.0 + r2) * xi;
    if denom == 0.0 {
        return Err(LamewError::Pole(format!(
            "asymptotic limit has a pole at xi = {xi} (xi = 1 or xi = rho^-2)"
        )));
    }
    Ok(1.0 / denom)
}

/// Convergence predicate |(1+ρ²)ξ − ρ²ξ²| < 1; for 0 < ρ < 1 and ξ ≥ 0 this
/// is equivalent to ξ < 1.
pub fn convergence_domain(xi: f64, rho: f64) -> DomainVerdict {
    let r2 = rho * rho;
    let margin = 1.0 - ((1.0 + r2) * xi - r2 * xi * xi).abs();
    DomainVerdict { inside: margin > 0.0, margin }
}

/// Small-modulus degeneration 1/(1 − (1+ρ²)ξ), valid on ξ < 1/(1+ρ²).
pub fn lame_asymptotic_small_rho(p: &LameParams, xi: f64) -> Result<f64> {
    let r2 = p.rho * p.rho;
    let denom = 1.0 - (1.0 + r2) * xi;
    if denom == 0.0 {
        return Err(LamewError::Pole(format!(
            "small-rho limit has a pole at xi = {xi} = 1/(1+rho^2)"
        )));
    }
    Ok(1.0 / denom)
}

/// Domain predicate of the small-modulus limit: ξ < 1/(1+ρ²).
pub fn small_rho_domain(xi: f64, rho: f64) -> DomainVerdict {
    let r2 = rho * rho;
    let margin = 1.0 - (1.0 + r2) * xi;
    DomainVerdict { inside: margin > 0.0, margin }
}

/// Partial sum Σ_{n≤N} ĉ_n ξⁿ of the limiting-recurrence tail coefficients
/// ĉ_{n+1} = (1+ρ²)ĉ_n − ρ²ĉ_{n−1}, ĉ₀ = 1, ĉ₁ = 1+ρ².
pub fn tail_generating_function(rho: f64, xi: f64, n_max: usize) -> f64 {
    let r2 = rho * rho;
    let mut prev = 1.0_f64;
    let mut cur = 1.0 + r2;
    let mut sum = prev;
    let mut xp = xi;
    for _ in 0..n_max {
        sum += cur * xp;
        xp *= xi;
        let next = (1.0 + r2) * cur - r2 * prev;
        prev = cur;
        cur = next;
    }
    sum
}
