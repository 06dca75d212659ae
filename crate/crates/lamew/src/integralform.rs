//! Quadrature verification of the order-1 integral representations.
//!
//! The first outer order of the nested series (the n = 1 term) admits a
//! closed integral representation: two Euler-type integrals over [0, 1] and
//! one contour integral around v = 0,
//!
//! ```text
//! y₁ = μ ∫₀¹ dt t^{e_t} ∫₀¹ du u^{e_u}  (1/2πi) ∮ (dv/v) ((v−1)/v)^{A₁}
//!        · D^{−d}  Op[ ₂F₁(−A₀, b; c; w) ],
//!
//! D = 1 − η v (1−t)(1−u),      w = η v t u / ((v−1) D),
//! Op = c_a (w ∂_w + s)² + c_b   (acting on w, applied termwise),
//! ```
//!
//! where η is the inner expansion variable and A₀, A₁ are the (snapped)
//! termination indices of the level-0 and level-1 chains. Expanding the
//! contour integral by residues at v = 0 collapses the triple integral to the
//! exact finite double sum implemented in [`y1_series_reference`] /
//! [`heun_y1_reference`]; evaluating it by quadrature instead provides an
//! independent numerical check of the whole nested machinery.
//!
//! Quadrature: the endpoint-singular factors t^{e_t}, u^{e_u} are removed by
//! the substitution t = s^p with p(1 + e_t) − 1 a non-negative integer, after
//! which Gauss–Legendre applies; the contour integral of a periodic analytic
//! integrand is computed with the (geometrically convergent) trapezoid rule.

use num_complex::Complex64;

use crate::error::{LamewError, Result};
use crate::frobenius::LameParams;
use crate::heunlocal::{heun_series_coeffs, HeunParams};
use crate::hypergeo::pochhammer;
use crate::series3trf;

/// Quadrature resolution: Gauss–Legendre order per Euler variable, number of
/// trapezoid points on the contour, and the contour radius |v|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub n_gl: usize,
    pub n_contour: usize,
    pub radius: f64,
}

impl QuadratureSpec {
    /// Validates the resolution: at least 2 Gauss nodes, at least 8 contour
    /// points, and 0 < radius < 1 (the contour must separate v = 0 from the
    /// singularity at v = 1).
    pub fn new(n_gl: usize, n_contour: usize, radius: f64) -> Result<Self> {
        if n_gl < 2 || n_contour < 8 {
            return Err(LamewError::Quadrature(format!(
                "resolution too low: n_gl = {n_gl}, n_contour = {n_contour}"
            )));
        }
        if !(radius > 0.0 && radius < 1.0) {
            return Err(LamewError::Quadrature(format!(
                "contour radius must lie in (0, 1), got {radius}"
            )));
        }
        Ok(Self { n_gl, n_contour, radius })
    }
}

/// Gauss–Legendre nodes and weights on (0, 1), by Newton iteration on the
/// Legendre three-term recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for k in 0..n {
        // Standard initial guess for the k-th root of P_n on (−1, 1).
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) via the recurrence.
            let mut p_prev = 1.0_f64;
            let mut p_cur = x;
            for j in 2..=n {
                let jf = j as f64;
                let p_next = ((2.0 * jf - 1.0) * x * p_cur - (jf - 1.0) * p_prev) / jf;
                p_prev = p_cur;
                p_cur = p_next;
            }
            dp = n as f64 * (x * p_cur - p_prev) / (x * x - 1.0);
            let dx = p_cur / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map from (−1, 1) to (0, 1).
        rule.push(((x + 1.0) / 2.0, w / 2.0));
    }
    rule
}

/// Smallest p ∈ 1..=16 such that t = s^p turns ∫₀¹ t^e f(t) dt into a smooth
/// integral: p(1 + e) − 1 must be a non-negative integer.
pub fn substitution_power(e: f64) -> Result<u32> {
    for p in 1..=16u32 {
        let m = p as f64 * (1.0 + e) - 1.0;
        if m >= -1e-12 && (m - m.round()).abs() < 1e-12 {
            return Ok(p);
        }
    }
    Err(LamewError::Quadrature(format!(
        "no substitution power up to 16 regularizes the exponent {e}"
    )))
}

/// The depth-n plug-in variable of the contour representation:
/// starting from w = base, each application performs
/// w ← w v t u / ((v−1)(1 − w v (1−t)(1−u))).
pub fn w_value(base: Complex64, v: Complex64, t: f64, u: f64, depth: usize) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let mut w = base;
    for _ in 0..depth {
        let d = one - w * v * (1.0 - t) * (1.0 - u);
        w = w * v * t * u / ((v - one) * d);
    }
    w
}

/// Termwise Euler operator c_a (w∂_w + s)² + c_b.
#[derive(Debug, Clone, Copy)]
struct EulerOperator {
    c_a: f64,
    shift: f64,
    c_b: f64,
}

impl EulerOperator {
    fn factor(&self, i: usize) -> f64 {
        let m = i as f64 + self.shift;
        self.c_a * m * m + self.c_b
    }
}

/// Structural data of one order-1 integral: Euler exponents, level-0
/// hypergeometric parameters, termination indices, D exponent, and operator.
#[derive(Debug, Clone, Copy)]
struct IntegralCore {
    e_t: f64,
    e_u: f64,
    /// Level-0 series ₂F₁(−a0, b2; c2; w), terminating after a0 + 1 terms.
    a0: usize,
    b2: f64,
    c2: f64,
    /// Winding/truncation index of the ((v−1)/v)^{A₁} factor.
    a1: usize,
    /// Exponent d of D^{−d}.
    d_exp: f64,
    op: EulerOperator,
}

/// Taylor coefficients P_i of the terminating level-0 series.
fn level0_coeffs(core: &IntegralCore) -> Vec<f64> {
    (0..=core.a0)
        .map(|i| {
            pochhammer(-(core.a0 as f64), i) * pochhammer(core.b2, i)
                / (pochhammer(1.0, i) * pochhammer(core.c2, i))
        })
        .collect()
}

/// Evaluates the triple quadrature. `inner` is the expansion variable η; the
/// caller multiplies by its own outer prefactor.
fn integrate(core: &IntegralCore, inner: f64, quad: &QuadratureSpec) -> Result<f64> {
    let coeffs = level0_coeffs(core);
    let p_t = substitution_power(core.e_t)?;
    let p_u = substitution_power(core.e_u)?;
    let rule = gauss_legendre(quad.n_gl);
    let one = Complex64::new(1.0, 0.0);

    // Contour nodes v_k = radius e^{2πik/N} and the constant winding factors.
    let contour: Vec<Complex64> = (0..quad.n_contour)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / quad.n_contour as f64;
            Complex64::from_polar(quad.radius, theta)
        })
        .collect();
    let winding: Vec<Complex64> = contour
        .iter()
        .map(|&v| ((v - one) / v).powi(core.a1 as i32))
        .collect();

    let mut total = Complex64::new(0.0, 0.0);
    for &(s_t, w_t) in &rule {
        let t = s_t.powi(p_t as i32);
        // Jacobian of t = s^p against the weight t^{e_t}: p s^{p(1+e)−1}.
        let jac_t = p_t as f64 * s_t.powf(p_t as f64 * (1.0 + core.e_t) - 1.0);
        for &(s_u, w_u) in &rule {
            let u = s_u.powi(p_u as i32);
            let jac_u = p_u as f64 * s_u.powf(p_u as f64 * (1.0 + core.e_u) - 1.0);

            let mut ring = Complex64::new(0.0, 0.0);
            for (&v, &x_factor) in contour.iter().zip(&winding) {
                let d = one - inner * v * (1.0 - t) * (1.0 - u);
                let w = inner * v * t * u / ((v - one) * d);
                // Op applied termwise to the terminating series at w.
                let mut op_f = Complex64::new(0.0, 0.0);
                let mut w_pow = one;
                for (i, &c) in coeffs.iter().enumerate() {
                    op_f += c * core.op.factor(i) * w_pow;
                    w_pow *= w;
                }
                ring += x_factor * d.powf(-core.d_exp) * op_f;
            }
            ring /= quad.n_contour as f64;
            total += w_t * w_u * jac_t * jac_u * ring;
        }
    }

    if total.im.abs() > 1e-8 * (1.0 + total.re.abs()) {
        return Err(LamewError::Quadrature(format!(
            "contour average has a non-negligible imaginary part: {}",
            total.im
        )));
    }
    Ok(total.re)
}

/// Snapped level-0 termination index A₀ = max(⌊α/4 − λ/2⌋, 0).
pub fn lame_a0(alpha: f64, lambda: f64) -> usize {
    (alpha / 4.0 - lambda / 2.0).floor().max(0.0) as usize
}

/// Snapped level-1 termination index A₁ = max(⌊α/4 − (1+λ)/2⌋, 0).
pub fn lame_a1(alpha: f64, lambda: f64) -> usize {
    (alpha / 4.0 - (1.0 + lambda) / 2.0).floor().max(0.0) as usize
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda != 0.0 && lambda != 0.5 {
        return Err(LamewError::Domain(format!(
            "indicial exponent must be 0 or 1/2, got {lambda}"
        )));
    }
    Ok(())
}

fn lame_core(p: &LameParams, lambda: f64) -> IntegralCore {
    let a0 = lame_a0(p.alpha, lambda);
    let a1 = lame_a1(p.alpha, lambda);
    IntegralCore {
        e_t: (lambda - 1.5) / 2.0,
        e_u: (lambda - 1.0) / 2.0,
        a0,
        b2: a0 as f64 + 0.25 + lambda,
        c2: 0.75 + lambda,
        a1,
        d_exp: a1 as f64 + 1.25 + lambda,
        op: EulerOperator {
            c_a: -(1.0 + p.b),
            shift: lambda / 2.0,
            c_b: p.h / (16.0 * p.rho * p.rho),
        },
    }
}

/// The order-1 term by quadrature: μ × triple integral, μ = −ρ²ξ.
pub fn y1_integral(p: &LameParams, lambda: f64, xi: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_lambda(lambda)?;
    let core = lame_core(p, lambda);
    let inner = -p.rho * p.rho * xi * xi;
    if inner.abs() >= 1.0 {
        return Err(LamewError::Divergence(format!(
            "|eta| = {} >= 1 at xi = {xi}: the contour kernel is singular",
            inner.abs()
        )));
    }
    let mu = -p.rho * p.rho * xi;
    Ok(mu * integrate(&core, inner, quad)?)
}

/// The order-1 term as an exact finite double sum: the residue expansion of
/// [`y1_integral`],
///
/// ```text
/// y₁ = μ Σ_{i₀ ≤ min(A₀,A₁)} Â(i₀) Π₀(i₀) Σ_{i₁=i₀}^{A₁} Π_{l=i₀}^{i₁−1} g₁(l) · η^{i₁},
/// ```
///
/// with Â the normalized accessory factor ([`series3trf::remark_a_factor`])
/// and snapped level parameters throughout.
pub fn y1_series_reference(p: &LameParams, lambda: f64, xi: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let core = lame_core(p, lambda);
    let eta = -p.rho * p.rho * xi * xi;
    let mu = -p.rho * p.rho * xi;
    let hl = lambda / 2.0;
    let g1 = |l: usize| -> f64 {
        let lf = l as f64;
        (-(core.a1 as f64) + lf) * (core.a1 as f64 + 1.25 + lambda + lf)
            / ((1.5 + hl + lf) * (1.25 + hl + lf))
    };
    let pi0 = |i: usize| -> f64 {
        pochhammer(-(core.a0 as f64), i) * pochhammer(core.b2, i)
            / (pochhammer(1.0 + hl, i) * pochhammer(0.75 + hl, i))
    };
    let mut sum = 0.0_f64;
    for i0 in 0..=core.a0.min(core.a1) {
        let mut inner_sum = 0.0_f64;
        let mut ratio = 1.0_f64;
        let mut eta_pow = eta.powi(i0 as i32);
        for i1 in i0..=core.a1 {
            if i1 > i0 {
                ratio *= g1(i1 - 1);
                eta_pow *= eta;
            }
            inner_sum += ratio * eta_pow;
        }
        sum += series3trf::remark_a_factor(p, lambda, i0)? * pi0(i0) * inner_sum;
    }
    Ok(mu * sum)
}

fn heun_core(hp: &HeunParams) -> Result<IntegralCore> {
    let coeffs = heun_series_coeffs(hp)?;
    let a0 = (-hp.alpha / 2.0).floor().max(0.0) as usize;
    let a1 = (-hp.alpha / 2.0 - 0.5).floor().max(0.0) as usize;
    let sum_pq = (hp.alpha + hp.beta) / 2.0;
    Ok(IntegralCore {
        e_t: -0.5,
        e_u: (hp.gamma - 2.0) / 2.0,
        a0,
        b2: a0 as f64 + sum_pq,
        c2: (hp.gamma + 1.0) / 2.0,
        a1,
        d_exp: a1 as f64 + sum_pq + 1.0,
        op: EulerOperator {
            c_a: 1.0,
            shift: coeffs.gamma0 / 2.0,
            c_b: coeffs.q_printed / 2.0 - coeffs.gamma0 * coeffs.gamma0 / 4.0,
        },
    })
}

/// The order-1 term of the Heun expansion by quadrature, with outer prefactor
/// (1+a)x/a and inner variable z = −x²/a.
pub fn heun_y1_integral(hp: &HeunParams, x: f64, quad: &QuadratureSpec) -> Result<f64> {
    let core = heun_core(hp)?;
    let inner = -x * x / hp.a;
    if inner.abs() >= 1.0 {
        return Err(LamewError::Divergence(format!(
            "|z| = {} >= 1 at x = {x}: the contour kernel is singular",
            inner.abs()
        )));
    }
    let outer = (1.0 + hp.a) * x / hp.a;
    Ok(outer * integrate(&core, inner, quad)?)
}

/// Residue expansion of [`heun_y1_integral`] as an exact finite double sum.
pub fn heun_y1_reference(hp: &HeunParams, x: f64) -> Result<f64> {
    let core = heun_core(hp)?;
    let coeffs = heun_series_coeffs(hp)?;
    let z = -x * x / hp.a;
    let outer = (1.0 + hp.a) * x / hp.a;
    let g1 = |l: usize| -> f64 {
        let lf = l as f64;
        (-(core.a1 as f64) + lf) * (core.d_exp + lf)
            / ((1.5 + lf) * (1.0 + hp.gamma / 2.0 + lf))
    };
    let pi0 = |i: usize| -> f64 {
        pochhammer(-(core.a0 as f64), i) * pochhammer(core.b2, i)
            / (pochhammer(1.0, i) * pochhammer(core.c2, i))
    };
    let afac = |i: usize| -> f64 {
        let m = i as f64;
        (m * (m + coeffs.gamma0) + coeffs.q_printed / 2.0)
            / ((m + 0.5) * (m + hp.gamma / 2.0))
    };
    let mut sum = 0.0_f64;
    for i0 in 0..=core.a0.min(core.a1) {
        let mut inner_sum = 0.0_f64;
        let mut ratio = 1.0_f64;
        let mut z_pow = z.powi(i0 as i32);
        for i1 in i0..=core.a1 {
            if i1 > i0 {
                ratio *= g1(i1 - 1);
                z_pow *= z;
            }
            inner_sum += ratio * z_pow;
        }
        sum += afac(i0) * pi0(i0) * inner_sum;
    }
    Ok(outer * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(n_gl: usize, n_contour: usize, radius: f64) -> QuadratureSpec {
        QuadratureSpec::new(n_gl, n_contour, radius).unwrap()
    }

    fn lame(rho: f64, h: f64, alpha: f64) -> LameParams {
        LameParams::new(rho, h, alpha).unwrap()
    }

    #[test]
    fn gauss_legendre_exactness() {
        // An n-point rule integrates polynomials up to degree 2n−1 exactly.
        let rule = gauss_legendre(4);
        let total: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert!((total - 1.0).abs() < 1e-14, "weights must sum to 1");
        for deg in 0..=7 {
            let got: f64 = rule.iter().map(|&(x, w)| w * x.powi(deg)).sum();
            let want = 1.0 / (deg as f64 + 1.0);
            assert!(
                (got - want).abs() < 1e-14,
                "degree {deg}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn substitution_powers() {
        assert_eq!(substitution_power(-0.75).unwrap(), 4);
        assert_eq!(substitution_power(-0.5).unwrap(), 2);
        assert_eq!(substitution_power(-0.25).unwrap(), 4);
        assert_eq!(substitution_power(0.0).unwrap(), 1);
        assert!(substitution_power(-0.99999).is_err());
    }

    #[test]
    fn substituted_quadrature_handles_endpoint_singularity() {
        // ∫₀¹ t^{−3/4} dt = 4 via t = s⁴.
        let e = -0.75;
        let p = substitution_power(e).unwrap();
        let rule = gauss_legendre(16);
        let got: f64 = rule
            .iter()
            .map(|&(s, w)| w * p as f64 * s.powf(p as f64 * (1.0 + e) - 1.0))
            .sum();
        assert!((got - 4.0).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn w_value_matches_closed_form() {
        let eta = Complex64::new(-0.03, 0.0);
        let v = Complex64::from_polar(0.4, 1.1);
        let (t, u) = (0.3, 0.7);
        let one = Complex64::new(1.0, 0.0);
        let d = one - eta * v * (1.0 - t) * (1.0 - u);
        let want = eta * v * t * u / ((v - one) * d);
        let got = w_value(eta, v, t, u, 1);
        assert!((got - want).norm() < 1e-15);
        assert_eq!(w_value(eta, v, t, u, 0), eta);
    }

    #[test]
    fn alpha_zero_closed_form() {
        // α = 0, λ = 0: y₁ = −hξ/2 exactly.
        let p = lame(0.5, 1.7, 0.0);
        let xi = 0.15;
        let q = quad(24, 96, 0.4);
        let got = y1_integral(&p, 0.0, xi, &q).unwrap();
        let want = -p.h * xi / 2.0;
        assert!(
            (got - want).abs() < 1e-10 * want.abs().max(1.0),
            "integral {got} vs closed form {want}"
        );
        let reference = y1_series_reference(&p, 0.0, xi).unwrap();
        assert!((reference - want).abs() < 1e-14 * want.abs());
    }

    #[test]
    fn vanishes_when_operator_vanishes() {
        // α = 0, λ = 0, h = 0 makes the operator annihilate the constant.
        let p = lame(0.6, 0.0, 0.0);
        let q = quad(16, 64, 0.4);
        let got = y1_integral(&p, 0.0, 0.1, &q).unwrap();
        assert!(got.abs() < 1e-13, "got {got}");
    }

    #[test]
    fn linear_in_h_at_alpha_zero() {
        let q = quad(20, 64, 0.4);
        let xi = 0.12;
        let base = y1_integral(&lame(0.5, 1.0, 0.0), 0.0, xi, &q).unwrap();
        let scaled = y1_integral(&lame(0.5, 3.5, 0.0), 0.0, xi, &q).unwrap();
        assert!(
            (scaled - 3.5 * base).abs() < 1e-11 * scaled.abs().max(1.0),
            "the α = 0 integral must be linear in h"
        );
    }

    #[test]
    fn integral_matches_reference_first_kind() {
        // α = 6 gives A₀ = A₁ = 1: a genuinely nested configuration.
        let p = lame(0.5, 0.9, 6.0);
        let q = quad(48, 192, 0.4);
        for &xi in &[0.05, 0.1, 0.18] {
            let got = y1_integral(&p, 0.0, xi, &q).unwrap();
            let want = y1_series_reference(&p, 0.0, xi).unwrap();
            assert!(
                (got - want).abs() <= 1e-8 * want.abs().max(1e-6),
                "xi = {xi}: integral {got} vs reference {want}"
            );
        }
    }

    #[test]
    fn integral_matches_reference_second_kind() {
        // λ = 1/2, α = 10: A₁ = ⌊10/4 − 3/4⌋ = 1, A₀ = ⌊10/4 − 1/4⌋ = 2.
        let p = lame(0.4, -1.3, 10.0);
        let q = quad(48, 192, 0.4);
        let xi = 0.1;
        let got = y1_integral(&p, 0.5, xi, &q).unwrap();
        let want = y1_series_reference(&p, 0.5, xi).unwrap();
        assert!(
            (got - want).abs() <= 1e-8 * want.abs().max(1e-6),
            "integral {got} vs reference {want}"
        );
    }

    #[test]
    fn contour_radius_independence() {
        let p = lame(0.5, 1.1, 6.0);
        let xi = 0.1;
        let a = y1_integral(&p, 0.0, xi, &quad(48, 256, 0.4)).unwrap();
        let b = y1_integral(&p, 0.0, xi, &quad(48, 256, 0.6)).unwrap();
        assert!(
            (a - b).abs() <= 1e-8 * a.abs().max(1e-6),
            "radius 0.4 gives {a}, radius 0.6 gives {b}"
        );
    }

    #[test]
    fn resolution_doubling_stability() {
        let p = lame(0.5, 0.7, 6.0);
        let xi = 0.12;
        let coarse = y1_integral(&p, 0.0, xi, &quad(32, 128, 0.4)).unwrap();
        let fine = y1_integral(&p, 0.0, xi, &quad(64, 256, 0.4)).unwrap();
        assert!(
            (coarse - fine).abs() <= 1e-8 * fine.abs().max(1e-6),
            "doubling moved the value: {coarse} vs {fine}"
        );
    }

    #[test]
    fn heun_alpha_zero_closed_form() {
        // α = 0: y₁ = qx/(aγ) exactly.
        let hp = HeunParams::new(3.0, 1.2, 0.0, -0.4, 0.5, 0.9).unwrap();
        let x = 0.15;
        let q = quad(24, 96, 0.4);
        let got = heun_y1_integral(&hp, x, &q).unwrap();
        let want = hp.q * x / (hp.a * hp.gamma);
        assert!(
            (got - want).abs() < 1e-10 * want.abs().max(1.0),
            "integral {got} vs closed form {want}"
        );
        let reference = heun_y1_reference(&hp, x).unwrap();
        assert!((reference - want).abs() < 1e-13 * want.abs().max(1.0));
    }

    #[test]
    fn heun_integral_matches_reference() {
        // α = −3: A₀ = ⌊3/2⌋ = 1, A₁ = ⌊1⌋ = 1.
        let hp = HeunParams::new(2.5, 0.8, -3.0, 0.6, 1.5, 1.1).unwrap();
        let x = 0.12;
        let q = quad(48, 192, 0.4);
        let got = heun_y1_integral(&hp, x, &q).unwrap();
        let want = heun_y1_reference(&hp, x).unwrap();
        assert!(
            (got - want).abs() <= 1e-8 * want.abs().max(1e-6),
            "integral {got} vs reference {want}"
        );
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(1, 64, 0.4).is_err());
        assert!(QuadratureSpec::new(16, 4, 0.4).is_err());
        assert!(QuadratureSpec::new(16, 64, 1.2).is_err());
        assert!(QuadratureSpec::new(16, 64, 0.4).is_ok());
    }
}
