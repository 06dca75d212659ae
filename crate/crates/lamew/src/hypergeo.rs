//! Gauss hypergeometric series and Pochhammer utilities.
//!
//! The nested series expansions used throughout this crate are built from
//! ₂F₁ blocks and "weighted" variants in which each term of the Gauss series
//! is multiplied by a quadratic in the summation index — the image of the
//! series under the Euler operator (w·d/dw + shift)².
//!
//! All sums run until the term magnitude drops below a relative tolerance or
//! a hard term cap is reached, whichever comes first.

use crate::error::{LamewError, Result};

/// Default relative tolerance for series truncation.
pub const DEFAULT_TOL: f64 = 1e-15;

/// Default hard cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Arguments of the Gauss hypergeometric function ₂F₁(a, b; c; w).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub w: f64,
}

/// Pochhammer symbol (x)_n = x(x+1)···(x+n−1), with (x)_0 = 1.
pub fn pochhammer(x: f64, n: usize) -> f64 {
    let mut acc = 1.0;
    for k in 0..n {
        acc *= x + k as f64;
    }
    acc
}

/// Checks that `c` is not a non-positive integer (where every (c)_i beyond
/// some index vanishes and the series is undefined).
fn check_lower_parameter(c: f64) -> Result<()> {
    if c <= 0.0 && (c - c.round()).abs() < 1e-12 {
        return Err(LamewError::Pole(format!(
            "lower parameter c = {c} is a non-positive integer"
        )));
    }
    Ok(())
}

/// Gauss hypergeometric series ₂F₁(a, b; c; w) = Σ_i (a)_i(b)_i/((c)_i i!) wⁱ.
///
/// Converges for |w| < 1; terminating when a or b is a non-positive integer.
/// Returns a divergence error when |w| ≥ 1 and the series does not terminate.
pub fn gauss_2f1(args: HypergeometricArgs, max_terms: usize, tol: f64) -> Result<f64> {
    check_lower_parameter(args.c)?;
    let terminates = is_nonpositive_integer(args.a) || is_nonpositive_integer(args.b);
    if args.w.abs() >= 1.0 && !terminates {
        return Err(LamewError::Divergence(format!(
            "2F1 series diverges for |w| = {} >= 1 with non-terminating parameters",
            args.w.abs()
        )));
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for i in 0..max_terms {
        let fi = i as f64;
        term *= (args.a + fi) * (args.b + fi) / ((args.c + fi) * (fi + 1.0)) * args.w;
        sum += term;
        if term.abs() <= tol * sum.abs().max(1.0) {
            break;
        }
    }
    Ok(sum)
}

/// Weighted Gauss series Σ_i (a)_i(b)_i/((c)_i i!) · (i + shift)² · wⁱ,
/// i.e. the action of (w·d/dw + shift)² on ₂F₁ term by term.
pub fn weighted_2f1(
    args: HypergeometricArgs,
    shift: f64,
    max_terms: usize,
    tol: f64,
) -> Result<f64> {
    check_lower_parameter(args.c)?;
    let terminates = is_nonpositive_integer(args.a) || is_nonpositive_integer(args.b);
    if args.w.abs() >= 1.0 && !terminates {
        return Err(LamewError::Divergence(format!(
            "weighted 2F1 series diverges for |w| = {} >= 1",
            args.w.abs()
        )));
    }
    let mut term = 1.0_f64; // (a)_i(b)_i/((c)_i i!) w^i
    let mut sum = shift * shift; // i = 0 contribution
    for i in 0..max_terms {
        let fi = i as f64;
        term *= (args.a + fi) * (args.b + fi) / ((args.c + fi) * (fi + 1.0)) * args.w;
        let weight = (fi + 1.0 + shift) * (fi + 1.0 + shift);
        let contrib = weight * term;
        sum += contrib;
        if contrib.abs() <= tol * sum.abs().max(1.0) {
            break;
        }
    }
    Ok(sum)
}

/// True when x is a non-positive integer within rounding slack.
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 1e-12 && (x - x.round()).abs() < 1e-12
}
