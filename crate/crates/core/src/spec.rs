//! JSON triangle input in three interchangeable forms:
//!
//! ```json
//! {"A": [0, 0], "B": [4, 0], "Gamma": [0, 3]}
//! {"alpha": 5, "beta": 3, "gamma": 4}
//! {"B_deg": 30, "Gamma_deg": 30, "scale": 1}
//! ```
//!
//! The side and angle forms are placed with A at the origin and B on the
//! positive x-axis, Γ above it.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::geom::{Point2, Triangle};
use crate::identities::heron_area;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TriangleSpec {
    Vertices(VertexForm),
    Sides(SideForm),
    Angles(AngleForm),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexForm {
    #[serde(rename = "A")]
    pub a: [f64; 2],
    #[serde(rename = "B")]
    pub b: [f64; 2],
    #[serde(rename = "Gamma")]
    pub g: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideForm {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngleForm {
    #[serde(rename = "B_deg")]
    pub b_deg: f64,
    #[serde(rename = "Gamma_deg")]
    pub g_deg: f64,
    pub scale: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("invalid triangle JSON: expected exactly one of {{A,B,Gamma}}, {{alpha,beta,gamma}} or {{B_deg,Gamma_deg,scale}} ({0})")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Geometry(#[from] Error),
}

impl TriangleSpec {
    pub fn from_json(text: &str) -> std::result::Result<Self, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn vertices(a: Point2, b: Point2, g: Point2) -> Self {
        TriangleSpec::Vertices(VertexForm { a: [a.x, a.y], b: [b.x, b.y], g: [g.x, g.y] })
    }

    pub fn to_triangle(&self) -> Result<Triangle> {
        match self {
            TriangleSpec::Vertices(v) => Triangle::from_coords((v.a[0], v.a[1]), (v.b[0], v.b[1]), (v.g[0], v.g[1])),
            TriangleSpec::Sides(s) => triangle_from_sides(s.alpha, s.beta, s.gamma),
            TriangleSpec::Angles(a) => triangle_from_angles(a.b_deg.to_radians(), a.g_deg.to_radians(), a.scale),
        }
    }
}

/// A at the origin, B = (γ, 0), Γ in the upper half-plane.
pub fn triangle_from_sides(alpha: f64, beta: f64, gamma: f64) -> Result<Triangle> {
    if ![alpha, beta, gamma].iter().all(|s| s.is_finite() && *s > 0.0) {
        return Err(Error::NotATriangle(alpha, beta, gamma));
    }
    heron_area(alpha, beta, gamma)?;
    let cos_a = ((beta * beta + gamma * gamma - alpha * alpha) / (2.0 * beta * gamma)).clamp(-1.0, 1.0);
    let sin_a = (1.0 - cos_a * cos_a).sqrt();
    Triangle::new(Point2::new(0.0, 0.0), Point2::new(gamma, 0.0), Point2::new(beta * cos_a, beta * sin_a))
}

/// A at the origin, B = (scale, 0), interior angles B and Γ in radians.
pub fn triangle_from_angles(ang_b: f64, ang_g: f64, scale: f64) -> Result<Triangle> {
    let ang_a = PI - ang_b - ang_g;
    if !(ang_b > 0.0 && ang_g > 0.0 && ang_a > 0.0) {
        return Err(Error::DomainError(format!(
            "angles B = {ang_b}, Gamma = {ang_g} rad do not leave a positive third angle"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::DomainError(format!("scale = {scale} must be positive")));
    }
    triangle_from_three_angles(ang_a, ang_b, ang_g, scale)
}

/// As [`triangle_from_angles`] but with A given explicitly, so a right angle
/// can be passed as exactly `π/2`.
pub(crate) fn triangle_from_three_angles(ang_a: f64, ang_b: f64, ang_g: f64, scale: f64) -> Result<Triangle> {
    // law of sines: |ΓA| / sin B = |AB| / sin Γ
    let beta = scale * ang_b.sin() / ang_g.sin();
    let (s, c) = ang_a.sin_cos();
    Triangle::new(Point2::new(0.0, 0.0), Point2::new(scale, 0.0), Point2::new(beta * c, beta * s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::metrics;
    use approx::assert_relative_eq;

    #[test]
    fn parses_each_form() {
        let v = TriangleSpec::from_json(r#"{"A":[0,0],"B":[4,0],"Gamma":[0,3]}"#).unwrap();
        assert!(matches!(v, TriangleSpec::Vertices(_)));
        let s = TriangleSpec::from_json(r#"{"alpha":5,"beta":3,"gamma":4}"#).unwrap();
        let a = TriangleSpec::from_json(r#"{"B_deg":30,"Gamma_deg":30,"scale":2}"#).unwrap();
        for spec in [v, s] {
            let m = metrics(&spec.to_triangle().unwrap()).unwrap();
            assert_relative_eq!(m.area, 6.0, max_relative = 1e-14);
            assert_relative_eq!(m.alpha, 5.0, max_relative = 1e-14);
        }
        let m = metrics(&a.to_triangle().unwrap()).unwrap();
        assert_relative_eq!(m.ang_a.to_degrees(), 120.0, max_relative = 1e-12);
        assert_relative_eq!(m.gamma, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn mixed_forms_rejected() {
        assert!(TriangleSpec::from_json(r#"{"alpha":5,"beta":3,"gamma":4,"scale":1}"#).is_err());
        assert!(TriangleSpec::from_json(r#"{"A":[0,0],"B":[4,0],"Gamma":[0,3],"alpha":1}"#).is_err());
        assert!(TriangleSpec::from_json(r#"{"alpha":5,"beta":3}"#).is_err());
        assert!(TriangleSpec::from_json("not json").is_err());
    }

    #[test]
    fn invalid_geometry() {
        let s = TriangleSpec::from_json(r#"{"alpha":1,"beta":1,"gamma":2}"#).unwrap();
        assert!(matches!(s.to_triangle(), Err(Error::NotATriangle(..))));
        let a = TriangleSpec::from_json(r#"{"B_deg":100,"Gamma_deg":80,"scale":1}"#).unwrap();
        assert!(a.to_triangle().is_err());
        let v = TriangleSpec::from_json(r#"{"A":[0,0],"B":[1,0],"Gamma":[2,0]}"#).unwrap();
        assert!(matches!(v.to_triangle(), Err(Error::DegenerateTriangle { .. })));
    }
}
