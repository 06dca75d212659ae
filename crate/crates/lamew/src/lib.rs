//! Numerical library for the Lamé equation in Weierstrass form,
//!
//! ```text
//! y''(z) = { α(α+1) ρ² sn²(z,ρ) − h } y(z),        0 < ρ < 1,
//! ```
//!
//! built around nested-sum power series obtained by solving the three-term
//! Frobenius recurrence in closed form. The crate provides:
//!
//! - [`elliptic`]: Jacobi sn and the quarter period K(ρ) (AGM based);
//! - [`hypergeo`]: Gauss ₂F₁ and index-weighted variants;
//! - [`frobenius`]: the three-term recurrence oracle, exact and
//!   finite-difference ODE residuals;
//! - [`series3trf`]: first/second-kind nested series (infinite and type-1
//!   polynomial families) with ξ-coefficient re-expansion;
//! - [`asymptotics`]: closed-form large-order limits and convergence-domain
//!   predicates;
//! - [`heunlocal`]: the Heun-equation view — generic nested series, nine
//!   local-solution descriptors, asymptotic approximants;
//! - [`integralform`]: quadrature verification of the order-1 contour/Euler
//!   integral representations against the exact sub-series.
//!
//! All public functions are pure and thread-safe.

pub mod asymptotics;
pub mod elliptic;
pub mod error;
pub mod frobenius;
pub mod heunlocal;
pub mod hypergeo;
pub mod integralform;
mod nested;
pub mod series3trf;
