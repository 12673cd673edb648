//! Classical triangle formulas, each written independently so that they can
//! be checked against one another and against the coordinate geometry.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::geom::TriangleMetrics;
use crate::{Error, Result};

/// Angles this close to a right angle have cotangent exactly zero.
pub const RIGHT_ANGLE_SNAP: f64 = 1e-12;

/// Tolerance on the angle sum accepted by [`cot_sum`].
pub const ANGLE_SUM_TOL: f64 = 1e-9;

/// `|lhs − rhs| / (1 + |rhs|)`.
pub fn normalized_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / (1.0 + rhs.abs())
}

/// Cotangent as `cos/sin`, so an obtuse angle gets a negative value and a
/// right angle gets zero rather than a pole.
pub fn cot(angle: f64) -> f64 {
    if (angle - FRAC_PI_2).abs() < RIGHT_ANGLE_SNAP {
        return 0.0;
    }
    let (s, c) = angle.sin_cos();
    c / s
}

/// Inverse cotangent onto `(0, π)`, continuous through zero.
pub fn arccot(y: f64) -> f64 {
    1f64.atan2(y)
}

fn check_sides(alpha: f64, beta: f64, gamma: f64) -> Result<[f64; 4]> {
    let r = (alpha + beta + gamma) / 2.0;
    let factors = [r, r - alpha, r - beta, r - gamma];
    let tol = f64::EPSILON * r.abs();
    if factors.iter().any(|f| !(*f > tol)) {
        return Err(Error::NotATriangle(alpha, beta, gamma));
    }
    Ok(factors)
}

/// Heron: `E = √(r(r−α)(r−β)(r−γ))`.
pub fn heron_area(alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let [r, ra, rb, rg] = check_sides(alpha, beta, gamma)?;
    Ok((r * ra * rb * rg).sqrt())
}

/// `2(α²β² + β²γ² + γ²α²) − (α⁴ + β⁴ + γ⁴)`, which is `16E²` for a triangle.
/// Not validated; non-triangles give values `≤ 0`.
pub fn sixteen_e_squared(alpha: f64, beta: f64, gamma: f64) -> f64 {
    let (a2, b2, g2) = (alpha * alpha, beta * beta, gamma * gamma);
    2.0 * (a2 * b2 + b2 * g2 + g2 * a2) - (a2 * a2 + b2 * b2 + g2 * g2)
}

/// Double-angle cotangent `cot 2θ = (cot²θ − 1) / (2 cot θ)`.
pub fn cot_double(cot_theta: f64) -> Result<f64> {
    if cot_theta.abs() < 1e-300 {
        return Err(Error::DivisionByZero);
    }
    Ok((cot_theta * cot_theta - 1.0) / (2.0 * cot_theta))
}

/// Half-angle cotangents from the side lengths alone:
/// `cot(A/2) = √(r(r−α) / ((r−β)(r−γ)))` and cyclic.
pub fn cot_half_angles(m: &TriangleMetrics) -> Result<(f64, f64, f64)> {
    let [r, ra, rb, rg] = check_sides(m.alpha, m.beta, m.gamma)?;
    let half = |own: f64, o1: f64, o2: f64| (r * own / (o1 * o2)).sqrt();
    Ok((half(ra, rb, rg), half(rb, ra, rg), half(rg, rb, ra)))
}

/// Sum of the interior-angle cotangents.
pub fn cot_sum(ang_a: f64, ang_b: f64, ang_g: f64) -> Result<f64> {
    let in_range = |x: f64| x > 0.0 && x < PI;
    let total = ang_a + ang_b + ang_g;
    if !(in_range(ang_a) && in_range(ang_b) && in_range(ang_g)) || !((total - PI).abs() <= ANGLE_SUM_TOL) {
        return Err(Error::AngleSumViolation(total));
    }
    Ok(cot(ang_a) + cot(ang_b) + cot(ang_g))
}

/// The cotangent sum written through B and Γ only, after eliminating
/// `A = π − B − Γ` with the cotangent addition formula:
/// `(cot²B + cot B cot Γ + cot²Γ + 1) / (cot B + cot Γ)`.
pub fn cot_sum_from_bg(ang_b: f64, ang_g: f64) -> f64 {
    let (cb, cg) = (cot(ang_b), cot(ang_g));
    (cb * cb + cb * cg + cg * cg + 1.0) / (cb + cg)
}

pub fn metrics_cot_sum(m: &TriangleMetrics) -> f64 {
    cot(m.ang_a) + cot(m.ang_b) + cot(m.ang_g)
}

/// `E = (α² + β² + γ²) / (4 (cot A + cot B + cot Γ))`.
pub fn area_from_cots(m: &TriangleMetrics) -> f64 {
    m.sum_of_squares() / (4.0 * metrics_cot_sum(m))
}

/// `E = ½ βγ sin A`.
pub fn area_sine(beta: f64, gamma: f64, ang_a: f64) -> f64 {
    0.5 * beta * gamma * ang_a.sin()
}

/// Residuals of `α² = β² + γ² − 4E cot A` and its two cyclic companions,
/// each divided by `α² + β² + γ²`.
pub fn cosine_area_residuals(m: &TriangleMetrics) -> [f64; 3] {
    let (a2, b2, g2) = (m.alpha * m.alpha, m.beta * m.beta, m.gamma * m.gamma);
    let e4 = 4.0 * m.area;
    let scale = a2 + b2 + g2;
    [
        (a2 - (b2 + g2 - e4 * cot(m.ang_a))).abs() / scale,
        (b2 - (a2 + g2 - e4 * cot(m.ang_b))).abs() / scale,
        (g2 - (a2 + b2 - e4 * cot(m.ang_g))).abs() / scale,
    ]
}

/// The five independent area values: Heron, `√(16E²)/4`, cotangent form,
/// sine form and the coordinate (shoelace) area carried in `m`.
pub fn area_estimates(m: &TriangleMetrics) -> Result<[f64; 5]> {
    Ok([
        heron_area(m.alpha, m.beta, m.gamma)?,
        sixteen_e_squared(m.alpha, m.beta, m.gamma).max(0.0).sqrt() / 4.0,
        area_from_cots(m),
        area_sine(m.beta, m.gamma, m.ang_a),
        m.area,
    ])
}

/// Largest pairwise relative difference among [`area_estimates`].
pub fn area_spread(m: &TriangleMetrics) -> Result<f64> {
    let est = area_estimates(m)?;
    let mut worst = 0.0f64;
    for i in 0..est.len() {
        for j in (i + 1)..est.len() {
            let rel = (est[i] - est[j]).abs() / est[i].abs().max(est[j].abs());
            worst = worst.max(rel);
        }
    }
    Ok(worst)
}

/// Largest relative gap between the radical half-angle cotangents and
/// `cos(X/2)/sin(X/2)` of the measured angles.
pub fn half_angle_discrepancy(m: &TriangleMetrics) -> Result<f64> {
    let (ha, hb, hg) = cot_half_angles(m)?;
    let direct = |x: f64| {
        let (s, c) = (x / 2.0).sin_cos();
        c / s
    };
    Ok([(ha, m.ang_a), (hb, m.ang_b), (hg, m.ang_g)]
        .into_iter()
        .map(|(rad, ang)| (rad - direct(ang)).abs() / direct(ang))
        .fold(0.0, f64::max))
}
