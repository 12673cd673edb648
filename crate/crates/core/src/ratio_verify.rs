//! Residual checks for the area-ratio identity and each algebraic step that
//! leads to it, so a failure can be pinned to a single sub-identity.
//!
//! With `S = α² + β² + γ²` the chain is
//!
//! ```text
//! (7)   E′ = E + (γ² cot A + β² cot Γ + α² cot B) / 2
//! (9)   16E² + 8(γ² cot A + β² cot Γ + α² cot B)E − S² = 0
//! (10)  16E² = 2(α²β² + β²γ² + γ²α²) − (α⁴ + β⁴ + γ⁴)
//! (11)  8Eγ² cot A = 2γ²(β² + γ² − α²)
//! (12)  8Eβ² cot Γ = 2β²(α² + β² − γ²)
//! (13)  8Eα² cot B = 2α²(γ² + α² − β²)
//! (14)  −S² = −2(α²β² + β²γ² + γ²α²) − (α⁴ + β⁴ + γ⁴)
//! ```
//!
//! and adding (10)–(14) memberwise gives (9). Every residual except (7) is
//! divided by `S²`, (7) is relative to `E′`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::construction::{construct_with_metrics, DerivedConstruction};
use crate::geom::{metrics, Triangle, TriangleMetrics};
use crate::identities::{cot, metrics_cot_sum, normalized_residual, sixteen_e_squared};
use crate::Result;

/// `|E′/E − (Σcot)²| / (1 + (Σcot)²)` for the perpendicular construction.
pub fn postulate1_residual(t: &Triangle) -> Result<f64> {
    let m = metrics(t)?;
    let d = construct_with_metrics(t, &m, FRAC_PI_2)?;
    Ok(normalized_residual(d.ratio_geometric, d.ratio_formula))
}

fn weighted_cots(m: &TriangleMetrics) -> [f64; 3] {
    let (a2, b2, g2) = (m.alpha * m.alpha, m.beta * m.beta, m.gamma * m.gamma);
    [g2 * cot(m.ang_a), b2 * cot(m.ang_g), a2 * cot(m.ang_b)]
}

/// Relative residual of the decomposition of `E′` into `E` plus three
/// signed right-triangle areas.
pub fn eq7_residual(m: &TriangleMetrics, d: &DerivedConstruction) -> f64 {
    let predicted = m.area + weighted_cots(m).iter().sum::<f64>() / 2.0;
    (d.area_prime - predicted).abs() / d.area_prime
}

pub fn eq9_residual(t: &Triangle) -> Result<f64> {
    Ok(eq9_from_metrics(&metrics(t)?))
}

fn eq9_from_metrics(m: &TriangleMetrics) -> f64 {
    let s = m.sum_of_squares();
    let e = m.area;
    let lhs = 16.0 * e * e + 8.0 * weighted_cots(m).iter().sum::<f64>() * e - s * s;
    lhs.abs() / (s * s)
}

/// Residuals of (11), (12), (13).
pub fn term_identities_residual(t: &Triangle) -> Result<(f64, f64, f64)> {
    let r = ProofChain::from_metrics(&metrics(t)?);
    Ok((r.eq11, r.eq12, r.eq13))
}

/// Every residual of the chain for one triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProofChain {
    pub eq7: f64,
    pub eq9: f64,
    pub eq10: f64,
    pub eq11: f64,
    pub eq12: f64,
    pub eq13: f64,
    pub eq14: f64,
    /// Gap between the left side of (9) and the memberwise sum of the right
    /// sides of (10)–(14).
    pub sum: f64,
    pub postulate1: f64,
}

/// Names in the order a failure is attributed.
pub const CHAIN_ORDER: [&str; 7] = ["eq7", "eq10", "eq11", "eq12", "eq13", "eq14", "eq9"];

impl ProofChain {
    pub fn new(t: &Triangle) -> Result<Self> {
        let m = metrics(t)?;
        let d = construct_with_metrics(t, &m, FRAC_PI_2)?;
        Ok(Self::from_parts(&m, &d))
    }

    pub fn from_parts(m: &TriangleMetrics, d: &DerivedConstruction) -> Self {
        let mut chain = Self::from_metrics(m);
        chain.eq7 = eq7_residual(m, d);
        chain.postulate1 = normalized_residual(d.ratio_geometric, d.ratio_formula);
        chain
    }

    /// Everything that needs no construction; `eq7` and `postulate1` are left at zero.
    fn from_metrics(m: &TriangleMetrics) -> Self {
        let (a2, b2, g2) = (m.alpha * m.alpha, m.beta * m.beta, m.gamma * m.gamma);
        let s = a2 + b2 + g2;
        let s2 = s * s;
        let e = m.area;
        let pair = a2 * b2 + b2 * g2 + g2 * a2;
        let quart = a2 * a2 + b2 * b2 + g2 * g2;

        let lhs10 = 16.0 * e * e;
        let rhs10 = sixteen_e_squared(m.alpha, m.beta, m.gamma);
        let [wa, wg, wb] = weighted_cots(m);
        let (lhs11, rhs11) = (8.0 * e * wa, 2.0 * g2 * (b2 + g2 - a2));
        let (lhs12, rhs12) = (8.0 * e * wg, 2.0 * b2 * (a2 + b2 - g2));
        let (lhs13, rhs13) = (8.0 * e * wb, 2.0 * a2 * (g2 + a2 - b2));
        let (lhs14, rhs14) = (-s2, -2.0 * pair - quart);

        let lhs_sum = lhs10 + lhs11 + lhs12 + lhs13 + lhs14;
        let rhs_sum = rhs10 + rhs11 + rhs12 + rhs13 + rhs14;

        Self {
            eq7: 0.0,
            eq9: eq9_from_metrics(m),
            eq10: (lhs10 - rhs10).abs() / s2,
            eq11: (lhs11 - rhs11).abs() / s2,
            eq12: (lhs12 - rhs12).abs() / s2,
            eq13: (lhs13 - rhs13).abs() / s2,
            eq14: (lhs14 - rhs14).abs() / s2,
            sum: (lhs_sum - rhs_sum).abs() / s2,
            postulate1: 0.0,
        }
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        Some(match name {
            "eq7" => self.eq7,
            "eq9" => self.eq9,
            "eq10" => self.eq10,
            "eq11" => self.eq11,
            "eq12" => self.eq12,
            "eq13" => self.eq13,
            "eq14" => self.eq14,
            "sum" => self.sum,
            "postulate1" => self.postulate1,
            _ => return None,
        })
    }

    pub fn max(&self) -> f64 {
        [self.eq7, self.eq9, self.eq10, self.eq11, self.eq12, self.eq13, self.eq14, self.sum, self.postulate1]
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// The first sub-identity above `tol`, when (7), (9) or the ratio itself fails.
    pub fn first_failure(&self, tol: f64) -> Option<&'static str> {
        if self.eq7 <= tol && self.eq9 <= tol && self.postulate1 <= tol {
            return None;
        }
        CHAIN_ORDER
            .into_iter()
            .find(|name| self.get(name).is_some_and(|v| v > tol))
            .or(Some("postulate1"))
    }
}

/// `(Σcot)²` for a set of metrics.
pub fn formula_ratio(m: &TriangleMetrics) -> f64 {
    let s = metrics_cot_sum(m);
    s * s
}
