//! Jacobi elliptic sine and the complete elliptic integral of the first kind.
//!
//! Provides the change of variable z ↦ ξ = sn²(z,ρ) that links the Lamé
//! equation's Weierstrass form (independent variable z) to its algebraic form
//! (independent variable ξ). Both routines use the arithmetic–geometric mean
//! (AGM) iteration: quadratically convergent, no external dependencies.
//!
//! Convention: the modulus is ρ itself (not the parameter m = ρ²), with
//! 0 < ρ < 1 throughout.

use crate::error::{LamewError, Result};

/// Maximum AGM ladder depth; the iteration converges quadratically, so 24
/// steps reach well below f64 resolution for every modulus in (0,1).
const AGM_MAX_ITERS: usize = 24;

/// Convergence threshold on the descending co-modulus sequence.
const AGM_TOL: f64 = 1e-15;

/// Elliptic modulus ρ with 0 < ρ < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    rho: f64,
}

impl EllipticModulus {
    /// Constructs a modulus, rejecting values outside (0, 1).
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho < 1.0) {
            return Err(LamewError::Domain(format!(
                "elliptic modulus must satisfy 0 < rho < 1, got {rho}"
            )));
        }
        Ok(Self { rho })
    }

    /// The raw modulus value.
    pub fn rho(self) -> f64 {
        self.rho
    }
}

/// Complete elliptic integral of the first kind,
/// K(ρ) = ∫₀^{π/2} dθ / √(1 − ρ² sin²θ).
///
/// Computed by the AGM: with a₀ = 1, b₀ = √(1−ρ²), the common limit a_N of
/// the AGM iteration gives K = π / (2 a_N). Accurate to machine precision.
pub fn complete_k(rho: EllipticModulus) -> f64 {
    let mut a = 1.0_f64;
    let mut b = (1.0 - rho.rho() * rho.rho()).sqrt();
    for _ in 0..AGM_MAX_ITERS {
        if (a - b).abs() <= AGM_TOL * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    std::f64::consts::FRAC_PI_2 / a
}

/// Jacobi elliptic sine sn(z, ρ) for real z.
///
/// Uses the AGM ladder with the descending-amplitude recovery
/// φ_{n−1} = (φ_n + asin((c_n/a_n)·sin φ_n)) / 2 and sn = sin φ₀.
/// |result| ≤ 1; periodic with period 4K(ρ).
pub fn jacobi_sn(z: f64, rho: EllipticModulus) -> f64 {
    let r = rho.rho();
    // AGM ladder, storing the scale factors needed for the phase descent.
    let mut a_seq = [0.0_f64; AGM_MAX_ITERS + 1];
    let mut c_seq = [0.0_f64; AGM_MAX_ITERS + 1];
    let mut a = 1.0_f64;
    let mut b = (1.0 - r * r).sqrt();
    a_seq[0] = a;
    c_seq[0] = r;
    let mut n = 0;
    while n < AGM_MAX_ITERS && c_seq[n].abs() > AGM_TOL * a_seq[n] {
        let an = 0.5 * (a + b);
        let cn = 0.5 * (a - b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        n += 1;
        a_seq[n] = a;
        c_seq[n] = cn;
    }
    // Phase descent from the top of the ladder.
    let mut phi = (1u64 << n) as f64 * a_seq[n] * z;
    for k in (1..=n).rev() {
        let s = (c_seq[k] / a_seq[k]) * phi.sin();
        // |c_k/a_k| < 1, so asin is well defined; clamp guards rounding.
        phi = 0.5 * (phi + s.clamp(-1.0, 1.0).asin());
    }
    phi.sin()
}

/// The independent-variable map ξ(z) = sn²(z, ρ) ∈ [0, 1].
pub fn xi_of_z(z: f64, rho: EllipticModulus) -> f64 {
    let s = jacobi_sn(z, rho);
    (s * s).min(1.0)
}
