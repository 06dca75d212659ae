//! Heun-equation view: generic nested series, the Heun↔Lamé correspondence,
//! nine local-solution descriptors, and their asymptotic approximants.
//!
//! The Heun equation
//!
//! ```text
//! y'' + (γ/x + δ/(x−1) + ε/(x−a)) y' + (αβx − q)/(x(x−1)(x−a)) y = 0,
//! ε = α + β − γ − δ + 1,
//! ```
//!
//! admits the same nested-chain expansion as the Lamé series (module
//! `nested`), in the variables η̂ = (1+a)x/a (outer) and z = −x²/a (inner),
//! with chain data
//!
//! ```text
//! p₀ = α/2,  q₀ = β/2,  r₀ = 1,  s₀ = 1/2 + γ/2,  c₁ = 1/2,  c₂ = γ/2,
//! Γ₀ = (α + β − δ + a(δ + γ − 1)) / (2(1+a)),      Q = q / (4(1+a)).
//! ```
//!
//! (The printed convention for the accessory constant is q/(2(1+a)); the value
//! that satisfies the equation — cross-checked against the Heun Frobenius
//! recurrence c₁ = q/(aγ) — is half of it, and that is what the evaluator
//! uses. Both are exposed: see [`HeunSeriesCoeffs`].)
//!
//! Under the correspondence a = ρ⁻², q = −hρ⁻²/4, α = (α_L+1)/2, β = −α_L/2,
//! γ = δ = 1/2, x = ξ, the Heun series specializes to the Lamé series of
//! module `series3trf`. Nine further local solutions — obtained by composing
//! the classical index/variable transformations of the Heun equation — are
//! encoded here as data descriptors consumed by one generic evaluator.

use crate::asymptotics::DomainVerdict;
use crate::error::{LamewError, Result};
use crate::frobenius::LameParams;
use crate::nested::{self, NestedParams};

/// Parameters of the Heun equation; ε is derived from the constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunParams {
    pub a: f64,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    /// ε = α + β − γ − δ + 1.
    pub epsilon: f64,
}

impl HeunParams {
    /// Builds the parameter set, deriving ε and rejecting a ∈ {0, 1}.
    pub fn new(a: f64, q: f64, alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        if a == 0.0 || a == 1.0 {
            return Err(LamewError::Domain(format!(
                "singularity parameter a must differ from 0 and 1, got {a}"
            )));
        }
        Ok(Self { a, q, alpha, beta, gamma, delta, epsilon: alpha + beta - gamma - delta + 1.0 })
    }
}

/// Accessory-factor data of the nested Heun series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunSeriesCoeffs {
    /// Γ₀ of the infinite family.
    pub gamma0: f64,
    /// The printed-convention accessory constant q/(2(1+a)). The series
    /// evaluator uses half of this value.
    pub q_printed: f64,
}

impl HeunSeriesCoeffs {
    /// Γ_k = k/2 + Γ₀.
    pub fn gamma_k(&self, k: usize) -> f64 {
        k as f64 / 2.0 + self.gamma0
    }
}

/// Γ₀ and the printed accessory constant for the infinite family.
pub fn heun_series_coeffs(hp: &HeunParams) -> Result<HeunSeriesCoeffs> {
    let two_1a = 2.0 * (1.0 + hp.a);
    if two_1a == 0.0 {
        return Err(LamewError::Singular("a = −1 degenerates the expansion".into()));
    }
    Ok(HeunSeriesCoeffs {
        gamma0: (hp.alpha + hp.beta - hp.delta + hp.a * (hp.delta + hp.gamma - 1.0)) / two_1a,
        q_printed: hp.q / two_1a,
    })
}

/// Nested-chain parameters of the Heun expansion about x = 0.
pub(crate) fn heun_nested_params(hp: &HeunParams) -> Result<NestedParams> {
    let coeffs = heun_series_coeffs(hp)?;
    Ok(NestedParams {
        p0: hp.alpha / 2.0,
        q0: hp.beta / 2.0,
        r0: 1.0,
        s0: 0.5 + hp.gamma / 2.0,
        gamma0: coeffs.gamma0,
        qc: coeffs.q_printed / 2.0,
        c1: 0.5,
        c2: hp.gamma / 2.0,
    })
}

/// Expansion variables (η̂, z) = ((1+a)x/a, −x²/a).
pub(crate) fn heun_expansion_variables(hp: &HeunParams, x: f64) -> (f64, f64) {
    ((1.0 + hp.a) * x / hp.a, -x * x / hp.a)
}

/// First-kind Heun local solution at x = 0 for the infinite family.
pub fn heun_hf_infinite(hp: &HeunParams, n_mu: usize, n_inner: usize, x: f64) -> Result<f64> {
    let (outer, inner) = heun_expansion_variables(hp, x);
    if (inner + outer).abs() >= 1.0 || inner.abs() >= 1.0 {
        return Err(LamewError::Divergence(format!(
            "series diverges at x = {x}: |z + eta| = {}",
            (inner + outer).abs()
        )));
    }
    let params = heun_nested_params(hp)?;
    nested::eval_nested(&params, outer, inner, n_mu, n_inner)
}

/// Type-1 polynomial Heun local solution (α quantized to −2α_j − j).
pub fn heun_hf_poly1(
    hp: &HeunParams,
    j: usize,
    alpha_j: usize,
    n_mu: usize,
    x: f64,
) -> Result<f64> {
    let required = -2.0 * alpha_j as f64 - j as f64;
    if (hp.alpha - required).abs() > 1e-12 {
        return Err(LamewError::Quantization {
            level: j,
            message: format!("alpha = {}, polynomial type 1 requires {required}", hp.alpha),
        });
    }
    let params = heun_nested_params(hp)?;
    match params.level_cap(j) {
        Some(cap) if cap == alpha_j => {}
        other => {
            return Err(LamewError::Quantization {
                level: j,
                message: format!("expected termination index {alpha_j}, found {other:?}"),
            });
        }
    }
    let (outer, inner) = heun_expansion_variables(hp, x);
    nested::eval_nested(&params, outer, inner, n_mu, 12)
}

/// Reference Taylor coefficients of the x = 0 exponent-0 Frobenius solution,
/// from the three-term recurrence
///
/// ```text
/// a(n+1)(n+γ) c_{n+1} = [(1+a)n(n−1) + (γ(1+a)+δa+ε)n + q] c_n
///                       − [(n−1)(n−2) + (γ+δ+ε)(n−1) + αβ] c_{n−1}.
/// ```
pub fn heun_frobenius_coefficients(hp: &HeunParams, n_max: usize) -> Result<Vec<f64>> {
    if hp.gamma <= 0.0 && (hp.gamma - hp.gamma.round()).abs() < 1e-12 {
        return Err(LamewError::Pole(format!(
            "gamma = {} is a non-positive integer",
            hp.gamma
        )));
    }
    let mut coeffs = vec![1.0_f64];
    let mut prev = 0.0_f64;
    let mut cur = 1.0_f64;
    for n in 0..n_max {
        let nf = n as f64;
        let p_n = (1.0 + hp.a) * nf * (nf - 1.0)
            + (hp.gamma * (1.0 + hp.a) + hp.delta * hp.a + hp.epsilon) * nf
            + hp.q;
        let r_n = (nf - 1.0) * (nf - 2.0)
            + (hp.gamma + hp.delta + hp.epsilon) * (nf - 1.0)
            + hp.alpha * hp.beta;
        let next = (p_n * cur - r_n * prev) / (hp.a * (nf + 1.0) * (nf + hp.gamma));
        coeffs.push(next);
        prev = cur;
        cur = next;
    }
    Ok(coeffs)
}

// ---------------------------------------------------------------------------
// The nine local-solution descriptors.
// ---------------------------------------------------------------------------

/// Base of a prefactor power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefactorBase {
    /// ξ
    Xi,
    /// 1 − ξ
    OneMinusXi,
    /// 1 − ρ²ξ
    OneMinusRhoSqXi,
    /// (ξ − ρ⁻²)/(1 − ρ⁻²)
    ShiftedXiRatio,
}

/// Independent-variable map ξ ↦ ς.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarMap {
    /// ς = ξ
    Identity,
    /// ς = 1 − ξ
    OneMinusXi,
    /// ς = 1/ξ
    InverseXi,
    /// ς = (1 − ρ⁻²)ξ/(ξ − ρ⁻²)
    MoebiusToA,
    /// ς = (ξ − 1)/ξ
    XiMinusOneOverXi,
    /// ς = (ξ − 1)/(ρ²(ξ − ρ⁻²))
    MoebiusOneToZero,
}

/// Asymptotic regimes of the nested Heun series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticRegime {
    /// lim = 1/(1 − (−ς²/a + (1+a)ς/a)).
    Generic,
    /// a ≈ −1: lim = (1 + ς)/(1 + ς²/a).
    ANearMinus1,
    /// |a| ≫ 1: lim = 1/(1 − (1+a)ς/a).
    AbsALarge,
}

/// One of the nine local-solution recipes: prefactors, variable map, and the
/// parameter transformation consumed by the generic evaluator.
#[derive(Debug, Clone, Copy)]
pub struct TransformDescriptor {
    pub id: u8,
    /// (base, constant exponent part, coefficient of α in the exponent).
    pub prefactors: &'static [(PrefactorBase, f64, f64)],
    pub var_map: VarMap,
    /// Regimes with a printed asymptotic instantiation for this descriptor.
    pub allowed_regimes: &'static [AsymptoticRegime],
    /// Quantization offsets (plus, minus) of the type-1 polynomial header:
    /// α = 2(2α_j + j + plus) or α = −2(2α_j + j + minus). None when the
    /// descriptor is printed for the infinite family only.
    pub poly_quantization: Option<(f64, f64)>,
    /// Convergence-domain provenance note for the CSV export.
    pub domain_note: &'static str,
}

const GENERIC_ONLY: &[AsymptoticRegime] = &[AsymptoticRegime::Generic];
const GENERIC_LARGE: &[AsymptoticRegime] =
    &[AsymptoticRegime::Generic, AsymptoticRegime::AbsALarge];
const ALL_REGIMES: &[AsymptoticRegime] = &[
    AsymptoticRegime::Generic,
    AsymptoticRegime::ANearMinus1,
    AsymptoticRegime::AbsALarge,
];

/// The descriptor table. Index i holds descriptor id i+1.
pub static DESCRIPTORS: [TransformDescriptor; 9] = [
    TransformDescriptor {
        id: 1,
        prefactors: &[(PrefactorBase::OneMinusXi, 0.5, 0.0)],
        var_map: VarMap::Identity,
        allowed_regimes: GENERIC_LARGE,
        poly_quantization: Some((0.5, 1.0)),
        domain_note: "series in xi about 0; converges for |(1+rho^2)xi - rho^2 xi^2| < 1",
    },
    TransformDescriptor {
        id: 2,
        prefactors: &[(PrefactorBase::Xi, 0.5, 0.0), (PrefactorBase::OneMinusXi, 0.5, 0.0)],
        var_map: VarMap::Identity,
        allowed_regimes: GENERIC_LARGE,
        poly_quantization: Some((1.0, 1.5)),
        domain_note: "series in xi about 0; converges for |(1+rho^2)xi - rho^2 xi^2| < 1",
    },
    TransformDescriptor {
        id: 3,
        prefactors: &[],
        var_map: VarMap::OneMinusXi,
        allowed_regimes: ALL_REGIMES,
        poly_quantization: Some((0.0, 0.5)),
        domain_note: "series in 1-xi about xi=1",
    },
    TransformDescriptor {
        id: 4,
        prefactors: &[(PrefactorBase::OneMinusXi, 0.5, 0.0)],
        var_map: VarMap::OneMinusXi,
        allowed_regimes: ALL_REGIMES,
        poly_quantization: Some((0.5, 1.0)),
        domain_note: "series in 1-xi about xi=1",
    },
    TransformDescriptor {
        id: 5,
        prefactors: &[(PrefactorBase::Xi, -0.5, -0.5)],
        var_map: VarMap::InverseXi,
        allowed_regimes: GENERIC_ONLY,
        poly_quantization: None,
        domain_note: "series in 1/xi about xi=infinity",
    },
    TransformDescriptor {
        id: 6,
        prefactors: &[(PrefactorBase::OneMinusRhoSqXi, 0.0, 0.5)],
        var_map: VarMap::MoebiusToA,
        allowed_regimes: ALL_REGIMES,
        poly_quantization: None,
        domain_note: "series in (1-rho^-2)xi/(xi-rho^-2) about 0",
    },
    TransformDescriptor {
        id: 7,
        prefactors: &[
            (PrefactorBase::OneMinusXi, 0.5, 0.0),
            (PrefactorBase::OneMinusRhoSqXi, -0.5, 0.5),
        ],
        var_map: VarMap::MoebiusToA,
        allowed_regimes: ALL_REGIMES,
        poly_quantization: None,
        domain_note: "series in (1-rho^-2)xi/(xi-rho^-2) about 0",
    },
    TransformDescriptor {
        id: 8,
        prefactors: &[(PrefactorBase::Xi, -0.5, -0.5)],
        var_map: VarMap::XiMinusOneOverXi,
        allowed_regimes: GENERIC_ONLY,
        poly_quantization: None,
        domain_note: "series in (xi-1)/xi about xi=1 (from above)",
    },
    TransformDescriptor {
        id: 9,
        prefactors: &[(PrefactorBase::ShiftedXiRatio, -0.5, -0.5)],
        var_map: VarMap::MoebiusOneToZero,
        allowed_regimes: GENERIC_LARGE,
        poly_quantization: None,
        domain_note: "series in (xi-1)/(rho^2(xi-rho^-2)) about xi=1",
    },
];

/// Looks up a descriptor by id 1..=9.
pub fn descriptor(id: u8) -> Result<&'static TransformDescriptor> {
    DESCRIPTORS
        .get(id.wrapping_sub(1) as usize)
        .ok_or_else(|| LamewError::Domain(format!("descriptor id must be 1..=9, got {id}")))
}

/// The base Heun↔Lamé correspondence: a = ρ⁻², q = −hρ⁻²/4, α = (α_L+1)/2,
/// β = −α_L/2, γ = δ = 1/2, x = ξ.
pub fn base_heun_params(p: &LameParams) -> HeunParams {
    HeunParams::new(p.b, -p.h * p.b / 4.0, (p.alpha + 1.0) / 2.0, -p.alpha / 2.0, 0.5, 0.5)
        .expect("b = rho^-2 > 1 is a valid singularity parameter")
}

/// Applies the descriptor's classical parameter transformation to a Heun
/// tuple. Each rule is the composition of index shifts and Möbius moves that
/// produces the corresponding local solution.
pub fn transform_params(id: u8, hp: &HeunParams) -> Result<HeunParams> {
    let HeunParams { a, q, alpha, beta, gamma, delta, epsilon } = *hp;
    let t = match id {
        1 => (a, q - (delta - 1.0) * gamma * a, alpha - delta + 1.0, beta - delta + 1.0, gamma, 2.0 - delta),
        2 => (
            a,
            q - (gamma + delta - 2.0) * a - (gamma - 1.0) * epsilon,
            alpha - gamma - delta + 2.0,
            beta - gamma - delta + 2.0,
            2.0 - gamma,
            2.0 - delta,
        ),
        3 => (1.0 - a, -q + alpha * beta, alpha, beta, delta, gamma),
        4 => (
            1.0 - a,
            -q + (delta - 1.0) * gamma * a + (alpha - delta + 1.0) * (beta - delta + 1.0),
            alpha - delta + 1.0,
            beta - delta + 1.0,
            2.0 - delta,
            gamma,
        ),
        5 => (
            1.0 / a,
            (q + alpha * ((alpha - gamma - delta + 1.0) * a - beta + delta)) / a,
            alpha,
            alpha - gamma + 1.0,
            alpha - beta + 1.0,
            delta,
        ),
        6 => (1.0 - a, -q + gamma * beta, -alpha + gamma + delta, beta, gamma, delta),
        7 => (
            1.0 - a,
            -q + gamma * ((delta - 1.0) * a + beta - delta + 1.0),
            -alpha + gamma + 1.0,
            beta - delta + 1.0,
            gamma,
            2.0 - delta,
        ),
        8 => (
            (a - 1.0) / a,
            (-q + alpha * (delta * a + beta - delta)) / a,
            alpha,
            alpha - gamma + 1.0,
            delta,
            alpha - beta + 1.0,
        ),
        9 => (a, q - (beta - delta) * alpha, alpha, -beta + gamma + delta, delta, gamma),
        other => {
            return Err(LamewError::Domain(format!("descriptor id must be 1..=9, got {other}")))
        }
    };
    HeunParams::new(t.0, t.1, t.2, t.3, t.4, t.5)
}

/// The transformed Heun tuple of a descriptor at the given Lamé parameters.
pub fn heun_params_for(id: u8, p: &LameParams) -> Result<HeunParams> {
    transform_params(id, &base_heun_params(p))
}

/// Evaluates the variable map ς(ξ).
pub fn variable_map(map: VarMap, xi: f64, rho: f64) -> f64 {
    let b = 1.0 / (rho * rho);
    match map {
        VarMap::Identity => xi,
        VarMap::OneMinusXi => 1.0 - xi,
        VarMap::InverseXi => 1.0 / xi,
        VarMap::MoebiusToA => (1.0 - b) * xi / (xi - b),
        VarMap::XiMinusOneOverXi => (xi - 1.0) / xi,
        VarMap::MoebiusOneToZero => (xi - 1.0) / (rho * rho * (xi - b)),
    }
}

/// Real principal power with branch checking.
fn real_pow(base: f64, exp: f64) -> Result<f64> {
    if base > 0.0 {
        Ok(base.powf(exp))
    } else if (exp - exp.round()).abs() < 1e-12 {
        Ok(base.powi(exp.round() as i32))
    } else {
        Err(LamewError::Branch(format!(
            "negative base {base} with non-integer exponent {exp}"
        )))
    }
}

/// Evaluates the descriptor's prefactor at ξ.
pub fn prefactor(d: &TransformDescriptor, p: &LameParams, xi: f64) -> Result<f64> {
    let mut acc = 1.0;
    for &(base, c, k) in d.prefactors {
        let value = match base {
            PrefactorBase::Xi => xi,
            PrefactorBase::OneMinusXi => 1.0 - xi,
            PrefactorBase::OneMinusRhoSqXi => 1.0 - p.rho * p.rho * xi,
            PrefactorBase::ShiftedXiRatio => (xi - p.b) / (1.0 - p.b),
        };
        acc *= real_pow(value, c + k * p.alpha)?;
    }
    Ok(acc)
}

/// Evaluates the descriptor's local solution at ξ:
/// prefactor(ξ) × nested-series(transformed params, ς(ξ)).
pub fn local_solution(
    d: &TransformDescriptor,
    p: &LameParams,
    n_mu: usize,
    n_inner: usize,
    xi: f64,
) -> Result<f64> {
    let verdict = heun_domain(d, AsymptoticRegime::Generic, xi, p.rho);
    if !verdict.inside {
        return Err(LamewError::Domain(format!(
            "descriptor {} series diverges at xi = {xi} (margin {})",
            d.id, verdict.margin
        )));
    }
    let hp = heun_params_for(d.id, p)?;
    let sigma = variable_map(d.var_map, xi, p.rho);
    let series = heun_hf_infinite(&hp, n_mu, n_inner, sigma)?;
    Ok(prefactor(d, p, xi)? * series)
}

/// Convergence predicate of a regime's approximant at (ξ, ρ):
/// margin = 1 − |condition expression|.
pub fn heun_domain(d: &TransformDescriptor, regime: AsymptoticRegime, xi: f64, rho: f64) -> DomainVerdict {
    let p = LameParams::new(rho, 0.0, 0.0).expect("validated modulus");
    let a = heun_params_for(d.id, &p).map(|hp| hp.a).unwrap_or(f64::NAN);
    let sigma = variable_map(d.var_map, xi, rho);
    let expr = match regime {
        AsymptoticRegime::Generic => -sigma * sigma / a + (1.0 + a) * sigma / a,
        AsymptoticRegime::ANearMinus1 => sigma * sigma / a,
        AsymptoticRegime::AbsALarge => (1.0 + a) * sigma / a,
    };
    let margin = 1.0 - expr.abs();
    DomainVerdict { inside: margin > 0.0, margin }
}

/// The closed-form asymptotic approximant of the descriptor's Heun series
/// (without the prefactor) in the requested regime.
pub fn heun_asymptotic(
    d: &TransformDescriptor,
    regime: AsymptoticRegime,
    p: &LameParams,
    xi: f64,
) -> Result<f64> {
    let verdict = heun_domain(d, regime, xi, p.rho);
    if !verdict.inside {
        return Err(LamewError::Domain(format!(
            "descriptor {} regime condition violated at xi = {xi} (margin {})",
            d.id, verdict.margin
        )));
    }
    let a = heun_params_for(d.id, p)?.a;
    let sigma = variable_map(d.var_map, xi, p.rho);
    let value = match regime {
        AsymptoticRegime::Generic => {
            1.0 / (1.0 - (-sigma * sigma / a + (1.0 + a) * sigma / a))
        }
        AsymptoticRegime::ANearMinus1 => (1.0 + sigma) / (1.0 + sigma * sigma / a),
        AsymptoticRegime::AbsALarge => 1.0 / (1.0 - (1.0 + a) * sigma / a),
    };
    Ok(value)
}

/// Printed instantiation of the descriptor's Hl tuple (a, q, α, β, γ, δ) at
/// the given Lamé parameters, kept as independent data against which the
/// generic transformation is tested. Two typos in the source tables are
/// corrected here (the A.4 accessory sign and the A.9 β sign); both corrected
/// values are what the equation itself requires.
pub fn printed_tuple(id: u8, p: &LameParams) -> Result<(f64, f64, f64, f64, f64, f64)> {
    let (rho, h, al) = (p.rho, p.h, p.alpha);
    let bi = 1.0 / (rho * rho); // rho^-2
    let r2 = rho * rho;
    Ok(match id {
        1 => (bi, -(h - 1.0) * bi / 4.0, al / 2.0 + 1.0, -al / 2.0 + 0.5, 0.5, 1.5),
        2 => (bi, -((h - 4.0) * bi - 1.0) / 4.0, al / 2.0 + 1.5, -al / 2.0 + 1.0, 1.5, 1.5),
        3 => (1.0 - bi, (h * bi - al * (al + 1.0)) / 4.0, (al + 1.0) / 2.0, -al / 2.0, 0.5, 0.5),
        4 => (
            1.0 - bi,
            ((h - 1.0) * bi - (al - 1.0) * (al + 2.0)) / 4.0,
            al / 2.0 + 1.0,
            -al / 2.0 + 0.5,
            1.5,
            0.5,
        ),
        5 => (
            r2,
            -(h - (1.0 + r2) * (al + 1.0) * (al + 1.0)) / 4.0,
            (al + 1.0) / 2.0,
            (al + 2.0) / 2.0,
            al + 1.5,
            0.5,
        ),
        6 => (1.0 - bi, (h * bi - al) / 4.0, -al / 2.0 + 0.5, -al / 2.0, 0.5, 0.5),
        7 => (
            1.0 - bi,
            ((h - 1.0) * bi + 1.0 - al) / 4.0,
            -al / 2.0 + 1.0,
            -al / 2.0 + 0.5,
            0.5,
            1.5,
        ),
        8 => (
            1.0 - r2,
            (h + (al + 1.0) * (1.0 - (al + 1.0) * r2)) / 4.0,
            (al + 1.0) / 2.0,
            (al + 2.0) / 2.0,
            0.5,
            al + 1.5,
        ),
        9 => (bi, -(h * bi - (al + 1.0) * (al + 1.0)) / 4.0, (al + 1.0) / 2.0, (al + 2.0) / 2.0, 0.5, 0.5),
        other => {
            return Err(LamewError::Domain(format!("descriptor id must be 1..=9, got {other}")))
        }
    })
}

/// Printed where-block values (η/ς coefficient, z/ς² coefficient, Γ₀, and the
/// printed-convention Q) of the descriptor's series, as independent data.
pub fn printed_where_block(id: u8, p: &LameParams) -> Result<(f64, f64, f64, f64)> {
    let (rho, h, al) = (p.rho, p.h, p.alpha);
    let bi = 1.0 / (rho * rho);
    let r2 = rho * rho;
    Ok(match id {
        1 => (1.0 + r2, -r2, 1.0 / (2.0 * (1.0 + r2)), (1.0 - h) / (8.0 * (1.0 + r2))),
        2 => (
            1.0 + r2,
            -r2,
            (2.0 + r2) / (2.0 * (1.0 + r2)),
            (4.0 + r2 - h) / (8.0 * (1.0 + r2)),
        ),
        3 => (
            (2.0 - bi) / (1.0 - bi),
            -1.0 / (1.0 - bi),
            0.0,
            (h * bi - al * (al + 1.0)) / (8.0 * (2.0 - bi)),
        ),
        4 => (
            (2.0 - bi) / (1.0 - bi),
            -1.0 / (1.0 - bi),
            0.5,
            ((h - 1.0) * bi - (al - 1.0) * (al + 2.0)) / (8.0 * (2.0 - bi)),
        ),
        5 => (
            1.0 + bi,
            -bi,
            (al + 1.0) / 2.0,
            -(h / (1.0 + r2) - (al + 1.0) * (al + 1.0)) / 8.0,
        ),
        6 => (
            (2.0 - bi) / (1.0 - bi),
            -1.0 / (1.0 - bi),
            -al / (2.0 * (2.0 - bi)),
            (h * bi - al) / (8.0 * (2.0 - bi)),
        ),
        7 => (
            (2.0 - bi) / (1.0 - bi),
            -1.0 / (1.0 - bi),
            -(al - 1.0 + bi) / (2.0 * (2.0 - bi)),
            ((h - 1.0) * bi + 1.0 - al) / (8.0 * (2.0 - bi)),
        ),
        8 => (
            (2.0 - r2) / (1.0 - r2),
            -1.0 / (1.0 - r2),
            (1.0 - r2) * (al + 1.0) / (2.0 * (2.0 - r2)),
            (h + (al + 1.0) * (1.0 - (al + 1.0) * r2)) / (8.0 * (2.0 - r2)),
        ),
        9 => (
            1.0 + r2,
            -r2,
            (al + 1.0) / (2.0 * (1.0 + bi)),
            (-h * bi + (al + 1.0) * (al + 1.0)) / (8.0 * (1.0 + bi)),
        ),
        other => {
            return Err(LamewError::Domain(format!("descriptor id must be 1..=9, got {other}")))
        }
    })
}

/// Documented CSV export of the descriptor table.
pub fn descriptor_table_csv() -> String {
    let mut out = String::from("id,prefactor,variable_map,poly_quantization,regimes,domain_note\n");
    for d in &DESCRIPTORS {
        let pf: Vec<String> = d
            .prefactors
            .iter()
            .map(|&(base, c, k)| {
                let b = match base {
                    PrefactorBase::Xi => "xi",
                    PrefactorBase::OneMinusXi => "(1-xi)",
                    PrefactorBase::OneMinusRhoSqXi => "(1-rho^2*xi)",
                    PrefactorBase::ShiftedXiRatio => "((xi-rho^-2)/(1-rho^-2))",
                };
                format!("{b}^({c}{k:+}*alpha)")
            })
            .collect();
        let pf = if pf.is_empty() { "1".to_string() } else { pf.join("*") };
        let vm = match d.var_map {
            VarMap::Identity => "xi",
            VarMap::OneMinusXi => "1-xi",
            VarMap::InverseXi => "1/xi",
            VarMap::MoebiusToA => "(1-rho^-2)xi/(xi-rho^-2)",
            VarMap::XiMinusOneOverXi => "(xi-1)/xi",
            VarMap::MoebiusOneToZero => "(xi-1)/(rho^2(xi-rho^-2))",
        };
        let pq = match d.poly_quantization {
            Some((plus, minus)) => format!("2(2aj+j+{plus}) | -2(2aj+j+{minus})"),
            None => "infinite only".to_string(),
        };
        let regimes: Vec<&str> = d
            .allowed_regimes
            .iter()
            .map(|r| match r {
                AsymptoticRegime::Generic => "generic",
                AsymptoticRegime::ANearMinus1 => "a~-1",
                AsymptoticRegime::AbsALarge => "|a|>>1",
            })
            .collect();
        out.push_str(&format!(
            "{},{},{},{},{},\"{}\"\n",
            d.id,
            pf,
            vm,
            pq,
            regimes.join("|"),
            d.domain_note
        ));
    }
    out
}
