//! Generic nested-series engine shared by the Lamé and Heun expansions.
//!
//! Every solution family in this crate has the same shape: a double expansion
//!
//! ```text
//! y = Σ_n outerⁿ Σ_i T_n(i) innerⁱ
//! ```
//!
//! in which the inner coefficients T_n(i) arise from an n-fold nested sum.
//! Level k of the nest carries a hypergeometric-type term ratio
//!
//! ```text
//! g_k(i) = (p_k + i)(q_k + i) / ((r_k + i)(s_k + i)),     x_k = x_0 + k/2
//! ```
//!
//! for x ∈ {p, q, r, s}, and the handoff from level k to level k+1 multiplies
//! by the quadratic "accessory factor"
//!
//! ```text
//! A_k(i) = (m(m + γ₀) + Q) / ((m + c₁)(m + c₂)),          m = i + k/2.
//! ```
//!
//! Concretely: T_0(i) = Π_{j<i} g_0(j), and for n ≥ 1
//!
//! ```text
//! T_n(i) = Σ_{j ≤ i} A_{n−1}(j) T_{n−1}(j) · Π_{l=j}^{i−1} g_n(l).
//! ```
//!
//! This module evaluates the chain by dynamic programming in O(n·i) per level
//! instead of the exponential literal nest. When a level's p or q parameter is
//! a non-positive integer the ratio g_k has a zero, so products spanning it
//! vanish exactly: chains fed from below the zero terminate naturally at the
//! index reported by [`NestedParams::level_cap`]. No truncation is imposed —
//! the DP products reproduce the exact vanishing pattern on their own, which
//! keeps the table identical to the untruncated Frobenius solution even at
//! quantized parameter values (where feeds entering above the zero survive).

use crate::error::{LamewError, Result};

/// Base parameters of a nested expansion; see the module docs for roles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct NestedParams {
    pub p0: f64,
    pub q0: f64,
    pub r0: f64,
    pub s0: f64,
    /// Linear coefficient γ₀ of the accessory-factor numerator.
    pub gamma0: f64,
    /// Constant term Q of the accessory-factor numerator.
    pub qc: f64,
    /// First root offset c₁ of the accessory-factor denominator.
    pub c1: f64,
    /// Second root offset c₂ of the accessory-factor denominator.
    pub c2: f64,
}

impl NestedParams {
    /// Level-k ratio parameters (each base parameter shifted by k/2).
    fn level(&self, k: usize) -> (f64, f64, f64, f64) {
        let s = k as f64 / 2.0;
        (self.p0 + s, self.q0 + s, self.r0 + s, self.s0 + s)
    }

    /// Term ratio g_k(i) between consecutive inner powers at level k.
    fn g(&self, k: usize, i: usize) -> Result<f64> {
        let (p, q, r, s) = self.level(k);
        let fi = i as f64;
        let denom = (r + fi) * (s + fi);
        if denom == 0.0 {
            return Err(LamewError::Pole(format!(
                "vanishing lower parameter at level {k}, index {i}"
            )));
        }
        Ok((p + fi) * (q + fi) / denom)
    }

    /// Accessory factor A_k(i) applied when leaving level k.
    fn afac(&self, k: usize, i: usize) -> Result<f64> {
        let m = i as f64 + k as f64 / 2.0;
        let denom = (m + self.c1) * (m + self.c2);
        if denom == 0.0 {
            return Err(LamewError::Pole(format!(
                "vanishing accessory denominator at level {k}, index {i}"
            )));
        }
        Ok((m * (m + self.gamma0) + self.qc) / denom)
    }

    /// Termination index of level k, if any: the largest inner index with a
    /// non-vanishing term. Present when p_k or q_k is a non-positive integer.
    pub(crate) fn level_cap(&self, k: usize) -> Option<usize> {
        let (p, q, _, _) = self.level(k);
        let cap_of = |x: f64| -> Option<usize> {
            if x <= 1e-9 && (x - x.round()).abs() < 1e-9 {
                Some((-x.round()) as usize)
            } else {
                None
            }
        };
        match (cap_of(p), cap_of(q)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        }
    }
}

/// Table of inner coefficients T_n(i) for n ≤ n_levels, i ≤ n_inner.
#[derive(Debug, Clone)]
pub(crate) struct ChainTable {
    /// t[n][i] = T_n(i).
    pub t: Vec<Vec<f64>>,
}

/// Builds the chain table by dynamic programming.
pub(crate) fn chain_table(
    params: &NestedParams,
    n_levels: usize,
    n_inner: usize,
) -> Result<ChainTable> {
    let mut t: Vec<Vec<f64>> = Vec::with_capacity(n_levels + 1);

    // Level 0: plain cumulative term products.
    let mut level0 = vec![0.0_f64; n_inner + 1];
    level0[0] = 1.0;
    for i in 0..n_inner {
        level0[i + 1] = level0[i] * params.g(0, i)?;
    }
    t.push(level0);

    for n in 1..=n_levels {
        let prev = &t[n - 1];
        let mut cur = vec![0.0_f64; n_inner + 1];
        // Handoff weights W_{n−1}(j) = A_{n−1}(j) T_{n−1}(j).
        let mut carry = 0.0_f64;
        for i in 0..=n_inner {
            if i > 0 {
                carry *= params.g(n, i - 1)?;
            }
            carry += params.afac(n - 1, i)? * prev[i];
            cur[i] = carry;
        }
        t.push(cur);
    }
    Ok(ChainTable { t })
}

/// Evaluates the double series Σ_n outerⁿ Σ_i T_n(i) innerⁱ from a table.
pub(crate) fn eval_table(table: &ChainTable, outer: f64, inner: f64) -> f64 {
    let mut total = 0.0_f64;
    let mut outer_pow = 1.0_f64;
    for row in &table.t {
        let mut inner_sum = 0.0_f64;
        for &c in row.iter().rev() {
            inner_sum = inner_sum * inner + c;
        }
        total += outer_pow * inner_sum;
        outer_pow *= outer;
    }
    total
}

/// Convenience: build the table and evaluate in one call.
pub(crate) fn eval_nested(
    params: &NestedParams,
    outer: f64,
    inner: f64,
    n_mu: usize,
    n_inner: usize,
) -> Result<f64> {
    let table = chain_table(params, n_mu, n_inner)?;
    Ok(eval_table(&table, outer, inner))
}
