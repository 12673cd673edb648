//! The derived triangle A′B′Γ′.
//!
//! Each side of ABΓ is turned by φ about its far endpoint: AB about B, BΓ
//! about Γ and ΓA about A (φ = π/2 gives the perpendiculars). The three
//! resulting lines meet pairwise in
//!
//! ```text
//! A′ = (line at B) ∩ (line at Γ)
//! B′ = (line at Γ) ∩ (line at A)
//! Γ′ = (line at A) ∩ (line at B)
//! ```
//!
//! so that the angle at A′ equals B, at B′ equals Γ and at Γ′ equals A.
//! When A is a right angle the lines at A and B meet in B itself.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::geom::{intersect, line_through_at_angle, metrics, Line2, Point2, Triangle, TriangleMetrics};
use crate::identities::metrics_cot_sum;
use crate::{Error, Result};

/// Band around π/2 inside which angle A counts as right.
pub const RIGHT_CASE_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    AcuteA,
    RightA,
    ObtuseA,
}

impl CaseTag {
    pub fn classify(ang_a: f64) -> Self {
        if (ang_a - FRAC_PI_2).abs() < RIGHT_CASE_BAND {
            CaseTag::RightA
        } else if ang_a < FRAC_PI_2 {
            CaseTag::AcuteA
        } else {
            CaseTag::ObtuseA
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::AcuteA => "acute-A",
            CaseTag::RightA => "right-A",
            CaseTag::ObtuseA => "obtuse-A",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstruction {
    /// Through B, along AB turned by φ.
    pub line_ab: Line2,
    /// Through Γ, along BΓ turned by φ.
    pub line_bg: Line2,
    /// Through A, along ΓA turned by φ.
    pub line_ga: Line2,
    pub a_prime: Point2,
    pub b_prime: Point2,
    pub g_prime: Point2,
    pub phi: f64,
    pub case_tag: CaseTag,
    pub area_prime: f64,
    /// `E′ / E` from the constructed coordinates.
    pub ratio_geometric: f64,
    /// `(cot A + cot B + cot Γ)²`; predicts the geometric ratio only at φ = π/2.
    pub ratio_formula: f64,
}

impl DerivedConstruction {
    pub fn derived_triangle(&self) -> Result<Triangle> {
        Triangle::new(self.a_prime, self.b_prime, self.g_prime)
    }

    pub fn is_perpendicular(&self) -> bool {
        (self.phi - FRAC_PI_2).abs() < 1e-15
    }
}

/// Builds A′B′Γ′ for `0 < phi ≤ π/2`. The turn is counterclockwise for a
/// counterclockwise triangle and clockwise otherwise, so the figure is the
/// same up to reflection whichever way the vertices were listed.
pub fn construct(t: &Triangle, phi: f64) -> Result<DerivedConstruction> {
    if !(phi > 0.0 && phi <= FRAC_PI_2) {
        return Err(Error::PhiOutOfRange(phi));
    }
    let m = metrics(t)?;
    construct_with_metrics(t, &m, phi)
}

pub(crate) fn construct_with_metrics(t: &Triangle, m: &TriangleMetrics, phi: f64) -> Result<DerivedConstruction> {
    let turn = phi * t.orientation();
    let line_ab = line_through_at_angle(t.b, t.a, t.b, turn)?;
    let line_bg = line_through_at_angle(t.g, t.b, t.g, turn)?;
    let line_ga = line_through_at_angle(t.a, t.g, t.a, turn)?;

    let a_prime = intersect(&line_ab, &line_bg)?;
    let b_prime = intersect(&line_bg, &line_ga)?;
    let g_prime = intersect(&line_ga, &line_ab)?;

    let area_prime = crate::geom::signed_area(a_prime, b_prime, g_prime).abs();
    let sum = metrics_cot_sum(m);
    Ok(DerivedConstruction {
        line_ab,
        line_bg,
        line_ga,
        a_prime,
        b_prime,
        g_prime,
        phi,
        case_tag: CaseTag::classify(m.ang_a),
        area_prime,
        ratio_geometric: area_prime / m.area,
        ratio_formula: sum * sum,
    })
}

/// Angle discrepancies `(|A′ − B|, |B′ − Γ|, |Γ′ − A|)` in radians, with the
/// derived angles measured from the constructed vertices.
pub fn similarity_check(t: &Triangle, d: &DerivedConstruction) -> Result<(f64, f64, f64)> {
    let m = metrics(t)?;
    let dm = metrics(&d.derived_triangle()?)?;
    Ok(((dm.ang_a - m.ang_b).abs(), (dm.ang_b - m.ang_g).abs(), (dm.ang_g - m.ang_a).abs()))
}
