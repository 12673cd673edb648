//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function has a plain-Rust twin (`*_impl`) that returns
//! `Result<_, String>`, so the logic is testable off the wasm target.

use std::f64::consts::FRAC_PI_2;

use perptri_core::construction::{construct, similarity_check};
use perptri_core::extremal::{lemma2_g, minimize_gk};
use perptri_core::report::verify;
use perptri_core::spec::triangle_from_angles;
use perptri_core::svg::render_svg;
use perptri_core::Triangle;
use wasm_bindgen::prelude::*;

fn triangle(b_deg: f64, g_deg: f64) -> Result<Triangle, String> {
    triangle_from_angles(b_deg.to_radians(), g_deg.to_radians(), 1.0).map_err(|e| e.to_string())
}

fn phi_radians(phi_deg: f64) -> Result<f64, String> {
    if !(phi_deg > 0.0 && phi_deg <= 90.0) {
        return Err(format!("phi = {phi_deg} deg is outside (0, 90]"));
    }
    Ok(if phi_deg == 90.0 { FRAC_PI_2 } else { phi_deg.to_radians() })
}

pub fn construction_svg_impl(b_deg: f64, g_deg: f64, phi_deg: f64) -> Result<String, String> {
    let t = triangle(b_deg, g_deg)?;
    let d = construct(&t, phi_radians(phi_deg)?).map_err(|e| e.to_string())?;
    Ok(render_svg(&t, &d))
}

pub fn construction_json_impl(b_deg: f64, g_deg: f64, phi_deg: f64) -> Result<String, String> {
    let t = triangle(b_deg, g_deg)?;
    let d = construct(&t, phi_radians(phi_deg)?).map_err(|e| e.to_string())?;
    let sim = similarity_check(&t, &d).map_err(|e| e.to_string())?;
    let value = serde_json::json!({
        "case": d.case_tag.name(),
        "ratio_geometric": d.ratio_geometric,
        "ratio_formula": if d.is_perpendicular() { Some(d.ratio_formula) } else { None },
        "similarity_discrepancy": [sim.0, sim.1, sim.2],
    });
    Ok(value.to_string())
}

pub fn verify_json_impl(b_deg: f64, g_deg: f64) -> Result<String, String> {
    let report = verify(&triangle(b_deg, g_deg)?).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// `samples` evenly spaced `(x, g_k(x))` pairs over `(0, π/2)`, flattened,
/// followed by the closed-form and numeric minima as a JSON object.
pub fn gk_curve_impl(k: f64, samples: usize) -> Result<(Vec<f64>, String), String> {
    let report = minimize_gk(k).map_err(|e| e.to_string())?;
    let n = samples.max(2);
    let mut xy = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let x = FRAC_PI_2 * i as f64 / (n + 1) as f64;
        xy.push(x);
        xy.push(lemma2_g(k, x).map_err(|e| e.to_string())?);
    }
    Ok((xy, serde_json::to_string(&report).map_err(|e| e.to_string())?))
}

/// SVG figure for the triangle with angles B, Γ (degrees) and turning angle φ.
#[wasm_bindgen]
pub fn construction_svg(b_deg: f64, g_deg: f64, phi_deg: f64) -> Result<String, JsError> {
    construction_svg_impl(b_deg, g_deg, phi_deg).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn construction_json(b_deg: f64, g_deg: f64, phi_deg: f64) -> Result<String, JsError> {
    construction_json_impl(b_deg, g_deg, phi_deg).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify_json(b_deg: f64, g_deg: f64) -> Result<String, JsError> {
    verify_json_impl(b_deg, g_deg).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gk_curve(k: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    gk_curve_impl(k, samples).map(|(xy, _)| xy).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gk_minimum_json(k: f64) -> Result<String, JsError> {
    gk_curve_impl(k, 2).map(|(_, report)| report).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_for_equilateral() {
        let svg = construction_svg_impl(60.0, 60.0, 90.0).unwrap();
        assert_eq!(svg.matches(r#"class="vertex-label""#).count(), 6);
    }

    #[test]
    fn ratio_only_at_ninety() {
        let v: serde_json::Value = serde_json::from_str(&construction_json_impl(60.0, 60.0, 90.0).unwrap()).unwrap();
        assert!((v["ratio_geometric"].as_f64().unwrap() - 3.0).abs() < 1e-12);
        let v: serde_json::Value = serde_json::from_str(&construction_json_impl(50.0, 70.0, 45.0).unwrap()).unwrap();
        assert!(v["ratio_formula"].is_null());
        assert!(v["similarity_discrepancy"][0].as_f64().unwrap() < 1e-9);
    }

    #[test]
    fn bad_inputs() {
        assert!(construction_svg_impl(100.0, 90.0, 90.0).is_err());
        assert!(construction_svg_impl(60.0, 60.0, 0.0).is_err());
        assert!(gk_curve_impl(-1.0, 10).is_err());
    }

    #[test]
    fn verify_report_passes() {
        let v: serde_json::Value = serde_json::from_str(&verify_json_impl(30.0, 30.0).unwrap()).unwrap();
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn curve_shape() {
        let (xy, report) = gk_curve_impl(1.0, 100).unwrap();
        assert_eq!(xy.len(), 200);
        let r: serde_json::Value = serde_json::from_str(&report).unwrap();
        let min = r["min_value"].as_f64().unwrap();
        assert!(xy.chunks(2).all(|p| p[1] >= min - 1e-12));
    }
}
