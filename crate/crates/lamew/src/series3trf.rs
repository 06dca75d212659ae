//! Nested-sum power series for the Lamé functions in Weierstrass form.
//!
//! The three-term recurrence of module `frobenius` admits a closed-form
//! solution organized by the number of "A-steps": the Taylor coefficients of
//! ξ^λ Σ c_n ξⁿ regroup into a double expansion in
//!
//! ```text
//! μ̂ = (1+ρ²) ξ        (one recurrence A-step per power)
//! η  = −ρ² ξ²          (one B-step pair per power)
//! ```
//!
//! whose inner structure is the generic nested chain of module `nested` with
//!
//! ```text
//! p₀ = −α/4 + λ/2          q₀ = α/4 + 1/4 + λ/2
//! r₀ = 1 + λ/2             s₀ = 3/4 + λ/2
//! γ₀ = λ                   Q  = λ²/4 − h/(16(1+ρ²))
//! c₁ = 1/2 + λ/2           c₂ = 1/4 + λ/2
//! ```
//!
//! λ = 0 gives the first-kind solution Lf, λ = 1/2 the second-kind Ls (with a
//! √ξ prefactor). When α takes one of the quantized values α = 2(2α_j + j + λ)
//! or α = −2(2α_j + j + λ) − 1, the η-direction chains terminate and the
//! solution collapses to the "type 1" polynomial family (polynomial in η at
//! every second level, still infinite in the μ̂ direction).

use crate::error::{LamewError, Result};
use crate::frobenius::{LameParams, SeriesPoly};
use crate::nested::{self, NestedParams};

/// Which indicial exponent the solution is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// λ = 0 (Lf).
    FirstKind,
    /// λ = 1/2 (Ls).
    SecondKind,
}

impl Kind {
    /// The indicial exponent λ.
    pub fn lambda(self) -> f64 {
        match self {
            Kind::FirstKind => 0.0,
            Kind::SecondKind => 0.5,
        }
    }
}

/// Which solution family is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Generic α: every inner chain is infinite (capped at `n_inner`).
    InfiniteSeries,
    /// Quantized α: η-chains terminate (type-1 polynomial).
    PolyType1,
}

/// Truncation and branch selection for a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionSpec {
    pub kind: Kind,
    pub family: Family,
    /// Truncation order of the outer (μ̂) sum.
    pub n_mu: usize,
    /// Cap on each inner index for non-terminating chains.
    pub n_inner: usize,
}

impl SolutionSpec {
    /// Default truncations n_mu = 8, n_inner = 12.
    pub fn new(kind: Kind, family: Family) -> Self {
        Self { kind, family, n_mu: 8, n_inner: 12 }
    }
}

/// Sign branch of the quantization condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// A type-1 polynomial quantization: the level-j chain terminates after
/// alpha_j + 1 terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Type1Quantization {
    pub j: usize,
    pub alpha_j: usize,
    pub branch: Branch,
    /// Indicial exponent, 0 or 1/2.
    pub lambda: f64,
}

/// The quantized α of the chosen branch:
/// Plus → α = 2(2α_j + j + λ); Minus → α = −2(2α_j + j + λ) − 1.
pub fn quantized_alpha(q: &Type1Quantization) -> f64 {
    let base = 2.0 * (2.0 * q.alpha_j as f64 + q.j as f64 + q.lambda);
    match q.branch {
        Branch::Plus => base,
        Branch::Minus => -base - 1.0,
    }
}

/// Result of an infinite-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    /// Set when α is at (or numerically near) a quantized value: some inner
    /// Pochhammer chain terminates, silently truncating the sums; the caller
    /// should prefer the polynomial evaluator.
    pub quantized_alpha_warning: bool,
}

/// The nested-chain parameters of the Lamé expansion at exponent λ.
pub(crate) fn lame_nested_params(p: &LameParams, lambda: f64) -> NestedParams {
    let hl = lambda / 2.0;
    NestedParams {
        p0: -p.alpha / 4.0 + hl,
        q0: p.alpha / 4.0 + 0.25 + hl,
        r0: 1.0 + hl,
        s0: 0.75 + hl,
        gamma0: lambda,
        qc: lambda * lambda / 4.0 - p.h / (16.0 * (1.0 + p.rho * p.rho)),
        c1: 0.5 + hl,
        c2: 0.25 + hl,
    }
}

/// The expansion variables (μ̂, η) = ((1+ρ²)ξ, −ρ²ξ²).
fn expansion_variables(p: &LameParams, xi: f64) -> (f64, f64) {
    let r2 = p.rho * p.rho;
    ((1.0 + r2) * xi, -r2 * xi * xi)
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda != 0.0 && lambda != 0.5 {
        return Err(LamewError::Domain(format!(
            "indicial exponent must be 0 or 1/2, got {lambda}"
        )));
    }
    Ok(())
}

/// True when some chain level up to n_mu terminates (α at a quantized value).
fn alpha_is_quantized(params: &NestedParams, n_mu: usize) -> bool {
    (0..=n_mu).any(|k| params.level_cap(k).is_some())
}

fn eval_infinite(p: &LameParams, spec: &SolutionSpec, xi: f64, lambda: f64) -> Result<SeriesValue> {
    let (outer, inner) = expansion_variables(p, xi);
    if inner.abs() >= 1.0 {
        return Err(LamewError::Divergence(format!(
            "|eta| = {} >= 1: the inner series diverges at xi = {xi}",
            inner.abs()
        )));
    }
    if lambda == 0.5 && xi < 0.0 {
        return Err(LamewError::Branch(format!(
            "xi^(1/2) undefined for xi = {xi} < 0"
        )));
    }
    let params = lame_nested_params(p, lambda);
    let value = nested::eval_nested(&params, outer, inner, spec.n_mu, spec.n_inner)?;
    Ok(SeriesValue {
        value: xi.powf(lambda) * value,
        quantized_alpha_warning: alpha_is_quantized(&params, spec.n_mu),
    })
}

/// First-kind (λ = 0) infinite-series solution at the point ξ.
pub fn lf_infinite(p: &LameParams, spec: &SolutionSpec, xi: f64) -> Result<SeriesValue> {
    eval_infinite(p, spec, xi, 0.0)
}

/// Second-kind (λ = 1/2) infinite-series solution at the point ξ ≥ 0.
pub fn ls_infinite(p: &LameParams, spec: &SolutionSpec, xi: f64) -> Result<SeriesValue> {
    eval_infinite(p, spec, xi, 0.5)
}

/// Type-1 polynomial solution at quantized α.
///
/// Requires p.alpha = quantized_alpha(q). Levels whose Pochhammer parameter is
/// a non-positive integer terminate exactly; the remaining levels are capped
/// at a fixed inner depth (12), and the outer μ̂-sum at n_mu.
pub fn lf_poly_type1(
    p: &LameParams,
    q: &Type1Quantization,
    n_mu: usize,
    xi: f64,
) -> Result<f64> {
    check_lambda(q.lambda)?;
    let alpha = quantized_alpha(q);
    if (p.alpha - alpha).abs() > 1e-12 {
        return Err(LamewError::Quantization {
            level: q.j,
            message: format!(
                "params carry alpha = {}, quantization requires alpha = {alpha}",
                p.alpha
            ),
        });
    }
    let params = lame_nested_params(p, q.lambda);
    // Consistency of the quantization bookkeeping: the level-j chain must
    // terminate exactly after alpha_j + 1 terms.
    match params.level_cap(q.j) {
        Some(cap) if cap == q.alpha_j => {}
        other => {
            return Err(LamewError::Quantization {
                level: q.j,
                message: format!(
                    "expected termination index {} at level {}, found {other:?}",
                    q.alpha_j, q.j
                ),
            });
        }
    }
    let (outer, inner) = expansion_variables(p, xi);
    let value = nested::eval_nested(&params, outer, inner, n_mu, 12)?;
    Ok(xi.powf(q.lambda) * value)
}

/// Plain-ξ Taylor coefficients d₀..d_N of the truncated nested expansion:
/// d_m collects every chain contribution with n + 2i = m, so the result is
/// exact (for the given m range) rather than limited by n_mu.
pub fn expand_to_xi_coeffs(p: &LameParams, spec: &SolutionSpec, n: usize) -> Result<SeriesPoly> {
    let lambda = spec.kind.lambda();
    let params = lame_nested_params(p, lambda);
    // The outer chain must reach order N for d_N to be complete; the inner
    // index contributes 2 per step, so N/2 suffices there.
    let table = nested::chain_table(&params, n, n / 2 + 1)?;
    let r2 = p.rho * p.rho;
    let mut coeffs = vec![0.0_f64; n + 1];
    for (lvl, row) in table.t.iter().enumerate() {
        let mut weight = (1.0 + r2).powi(lvl as i32);
        for (i, &t) in row.iter().enumerate() {
            let m = lvl + 2 * i;
            if m <= n {
                coeffs[m] += t * weight;
            }
            weight *= -r2;
        }
    }
    Ok(SeriesPoly { lambda, coeffs })
}

/// The level-0 accessory factor in the book-keeping of the μ = −ρ²ξ variable:
///
/// ```text
/// [−(1+ρ⁻²)(i+λ/2)² + h/(16ρ²)] / [(i+1/2+λ/2)(i+1/4+λ/2)]
/// ```
///
/// Multiplied by (−ρ²), this equals the recurrence coefficient A_{2i} of the
/// Frobenius oracle — the identity pinning the μ/η bookkeeping.
pub fn remark_a_factor(p: &LameParams, lambda: f64, i: usize) -> Result<f64> {
    check_lambda(lambda)?;
    let m = i as f64 + lambda / 2.0;
    let r2 = p.rho * p.rho;
    let numer = -(1.0 + 1.0 / r2) * m * m + p.h / (16.0 * r2);
    let denom = (i as f64 + 0.5 + lambda / 2.0) * (i as f64 + 0.25 + lambda / 2.0);
    Ok(numer / denom)
}
