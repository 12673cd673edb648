//! Minima of the cotangent sum.
//!
//! Holding Γ fixed with `k = cot Γ > 0` and letting `x = B` vary, the
//! cotangent sum is
//!
//! ```text
//! g_k(x) = (cot²x + k cot x + k² + 1) / (cot x + k),    0 < x < π/2
//! ```
//!
//! whose only critical point is `cot θ_k = √(k² + 1) − k`, with minimum
//! value `f(k) = (2k² − k√(k² + 1) + 2) / √(k² + 1)`. `f` in turn is
//! smallest at `k = 1/√3`, which gives the equilateral triangle and a
//! cotangent sum of √3 (area ratio 3). Restricted to right triangles the
//! sum is `2 / sin 2B`, smallest at `B = π/4` (area ratio 4).
//!
//! Every closed form here is paired with a golden-section search that
//! never looks at it.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::identities::{arccot, cot, cot_sum};
use crate::{Error, Result};

/// Search interval margin: x ranges over `[EDGE, π/2 − EDGE]`.
pub const SEARCH_EDGE: f64 = 1e-4;
pub const SEARCH_XTOL: f64 = 1e-10;
pub const SEARCH_MAX_ITER: usize = 200;

/// `1 / φ` where φ is the golden ratio.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Outcome of a golden-section search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
/// Stops once the bracket is narrower than `xtol` or after `max_iter` steps.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, xtol: f64, max_iter: usize) -> Minimum {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut iterations = 0;
    while b - a > xtol && iterations < max_iter {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        iterations += 1;
    }
    let (x, value) = if fc <= fd { (c, fc) } else { (d, fd) };
    Minimum { x, value, iterations }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError(format!("{name} = {v} must be positive and finite")))
    }
}

fn check_open_quarter(x: f64) -> Result<()> {
    if x > 0.0 && x < FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::DomainError(format!("x = {x} must lie in (0, pi/2)")))
    }
}

/// `f(x) = (2x² − x√(x² + 1) + 2) / √(x² + 1)` for `x > 0`.
pub fn lemma1_f(x: f64) -> Result<f64> {
    check_positive("x", x)?;
    let s = x.hypot(1.0);
    Ok((2.0 * x * x - x * s + 2.0) / s)
}

/// `g_k(x) = (cot²x + k cot x + k² + 1) / (cot x + k)`.
pub fn lemma2_g(k: f64, x: f64) -> Result<f64> {
    check_positive("k", k)?;
    check_open_quarter(x)?;
    let c = cot(x);
    Ok((c * c + k * c + k * k + 1.0) / (c + k))
}

/// `g_k(x) − k`, rewritten as `(cot²x + 1) / (cot x + k)`. Same minimizer as
/// `g_k` but without the large constant `k` swamping the rounding near the
/// bottom, which the numeric search needs when `k` is large.
pub fn lemma2_g_excess(k: f64, x: f64) -> Result<f64> {
    check_positive("k", k)?;
    check_open_quarter(x)?;
    let c = cot(x);
    Ok((c * c + 1.0) / (c + k))
}

/// `g′_k(x) = −csc²x · (cot²x + 2k cot x − 1) / (cot x + k)²`.
pub fn lemma2_gprime(k: f64, x: f64) -> Result<f64> {
    check_positive("k", k)?;
    check_open_quarter(x)?;
    let c = cot(x);
    let s = x.sin();
    let denom = c + k;
    Ok(-(c * c + 2.0 * k * c - 1.0) / (s * s * denom * denom))
}

/// The critical point of `g_k`: `cot θ_k = √(k² + 1) − k`, always in `(π/4, π/2)`.
pub fn theta_k(k: f64) -> Result<f64> {
    check_positive("k", k)?;
    // √(k² + 1) − k written without cancellation
    Ok(arccot(1.0 / (k + k.hypot(1.0))))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    /// `cot Γ`, held fixed.
    pub k: f64,
    /// Closed-form argmin.
    pub theta_k: f64,
    /// Closed-form minimum.
    pub min_value: f64,
    pub numeric_argmin: f64,
    pub numeric_min: f64,
    /// `|min_value − numeric_min|`.
    pub agreement_err: f64,
}

impl ExtremalReport {
    pub fn argmin_err(&self) -> f64 {
        (self.theta_k - self.numeric_argmin).abs()
    }

    pub fn is_consistent(&self) -> bool {
        self.argmin_err() <= 1e-6 && self.agreement_err <= 1e-9 && self.min_value > 0.0
    }
}

pub fn minimize_gk(k: f64) -> Result<ExtremalReport> {
    let theta = theta_k(k)?;
    let s = k.hypot(1.0);
    let min_value = (2.0 * k * k - k * s + 2.0) / s;
    let found = golden_section(
        |x| lemma2_g_excess(k, x).unwrap_or(f64::INFINITY),
        SEARCH_EDGE,
        FRAC_PI_2 - SEARCH_EDGE,
        SEARCH_XTOL,
        SEARCH_MAX_ITER,
    );
    let numeric_min = lemma2_g(k, found.x)?;
    Ok(ExtremalReport {
        k,
        theta_k: theta,
        min_value,
        numeric_argmin: found.x,
        numeric_min,
        agreement_err: (min_value - numeric_min).abs(),
    })
}

/// Two-stage search for the smallest cotangent sum over all triangles: the
/// outer golden-section runs over `k = cot Γ`, the inner one is
/// [`minimize_gk`]'s numeric search over `B`. Returns `(Σcot, B, Γ)`.
pub fn global_min_cot_sum() -> (f64, f64, f64) {
    let outer = golden_section(
        |k| minimize_gk(k).map(|r| r.numeric_min).unwrap_or(f64::INFINITY),
        1e-3,
        10.0,
        SEARCH_XTOL,
        SEARCH_MAX_ITER,
    );
    let inner = minimize_gk(outer.x).expect("outer search stays in k > 0");
    (inner.numeric_min, inner.numeric_argmin, arccot(outer.x))
}

/// The closed-form optimum `(√3, π/3, π/3)`.
pub fn global_min_closed_form() -> (f64, f64, f64) {
    (3f64.sqrt(), FRAC_PI_3, FRAC_PI_3)
}

/// Brute-force minimum of the cotangent sum over the cell-centred lattice
/// `B, Γ = π(i + ½)/n` with `B + Γ < π`. Returns `(Σcot, B, Γ)`.
pub fn lattice_min_cot_sum(n: usize) -> (f64, f64, f64) {
    let step = PI / n as f64;
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..n {
        let b = step * (i as f64 + 0.5);
        for j in 0..n {
            let g = step * (j as f64 + 0.5);
            let a = PI - b - g;
            if a <= 0.0 {
                break;
            }
            if let Ok(v) = cot_sum(a, b, g) {
                if v < best.0 {
                    best = (v, b, g);
                }
            }
        }
    }
    best
}

/// Smallest area ratio among right triangles (right angle at A).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RightMinimum {
    /// Closed form: `(2 / sin 2B)²` at `B = π/4`, i.e. 4.
    pub ratio: f64,
    pub ang_b: f64,
    /// Golden-section search on `B ↦ 2 / sin 2B`.
    pub numeric_ratio: f64,
    pub numeric_b: f64,
}

pub fn right_cot_sum(ang_b: f64) -> f64 {
    2.0 / (2.0 * ang_b).sin()
}

pub fn right_triangle_min() -> RightMinimum {
    let sum = right_cot_sum(FRAC_PI_4);
    let found = golden_section(right_cot_sum, SEARCH_EDGE, FRAC_PI_2 - SEARCH_EDGE, SEARCH_XTOL, SEARCH_MAX_ITER);
    RightMinimum {
        ratio: sum * sum,
        ang_b: FRAC_PI_4,
        numeric_ratio: found.value * found.value,
        numeric_b: found.x,
    }
}
