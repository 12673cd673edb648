//! Standalone SVG figures of a construction: the original triangle filled,
//! the derived triangle outlined, the three construction lines dashed, all
//! six vertices labeled and the turning angle φ marked at B.

use std::fmt::Write as _;
use std::path::Path;

use crate::construction::{CaseTag, DerivedConstruction};
use crate::geom::{Point2, Triangle};

const MARGIN: f64 = 0.10;

struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
    diag: f64,
}

impl Frame {
    fn fit(points: &[Point2]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.x);
            x1 = x1.max(p.x);
            y0 = y0.min(p.y);
            y1 = y1.max(p.y);
        }
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let mx = MARGIN * (x1 - x0).max(1e-3 * span);
        let my = MARGIN * (y1 - y0).max(1e-3 * span);
        let (min_x, max_y) = (x0 - mx, y1 + my);
        let (width, height) = (x1 - x0 + 2.0 * mx, y1 - y0 + 2.0 * my);
        Self { min_x, max_y, width, height, diag: width.hypot(height) }
    }

    /// Model point to SVG user space (y axis pointing up in the model).
    fn map(&self, p: Point2) -> (f64, f64) {
        (p.x, -p.y)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn polygon_path(frame: &Frame, pts: &[Point2; 3]) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = frame.map(*p);
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(x), num(y));
    }
    d.push('Z');
    d
}

/// Renders the figure for triangle `t` and its construction `d`.
pub fn render_svg(t: &Triangle, d: &DerivedConstruction) -> String {
    let pts = [t.a, t.b, t.g, d.a_prime, d.b_prime, d.g_prime];
    let frame = Frame::fit(&pts);
    let font = frame.diag * 0.028;
    let stroke = frame.diag * 0.003;
    let notes = notes(d);
    let notes_height = font * 1.4 * (notes.len() as f64 + 0.5);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" font-family="serif" font-size="{}">"#,
        num(frame.min_x),
        num(-frame.max_y),
        num(frame.width),
        num(frame.height + notes_height),
        num(font)
    );
    let _ = writeln!(
        s,
        r##"<path class="original" d="{}" fill="#9ecae1" fill-opacity="0.55" stroke="#1f4e79" stroke-width="{}"/>"##,
        polygon_path(&frame, &[t.a, t.b, t.g]),
        num(stroke)
    );
    let _ = writeln!(
        s,
        r##"<path class="derived" d="{}" fill="none" stroke="#b22222" stroke-width="{}"/>"##,
        polygon_path(&frame, &[d.a_prime, d.b_prime, d.g_prime]),
        num(stroke * 1.5)
    );

    let reach = frame.diag * 2.0;
    for (line, anchor) in [(&d.line_ab, t.b), (&d.line_bg, t.g), (&d.line_ga, t.a)] {
        let dir = line.direction();
        let (x1, y1) = frame.map(anchor - dir * reach);
        let (x2, y2) = frame.map(anchor + dir * reach);
        let _ = writeln!(
            s,
            r##"<line class="construction" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#555555" stroke-width="{}" stroke-dasharray="{} {}"/>"##,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            num(stroke),
            num(stroke * 6.0),
            num(stroke * 4.0)
        );
    }

    // φ arc at B, from the continuation of AB to the line through B
    let turn = d.phi * t.orientation();
    let radius = frame.diag * 0.05;
    let u0 = t.b - t.a;
    let u0 = u0 * (1.0 / u0.norm());
    let u1 = u0.rotated(turn);
    let (ax, ay) = frame.map(t.b + u0 * radius);
    let (bx, by) = frame.map(t.b + u1 * radius);
    let sweep = if turn > 0.0 { 0 } else { 1 };
    let _ = writeln!(
        s,
        r##"<path class="phi-arc" d="M {} {} A {} {} 0 0 {sweep} {} {}" fill="none" stroke="#2ca02c" stroke-width="{}"/>"##,
        num(ax),
        num(ay),
        num(radius),
        num(radius),
        num(bx),
        num(by),
        num(stroke)
    );
    let (px, py) = frame.map(t.b + u0.rotated(turn / 2.0) * (radius * 1.6));
    let _ = writeln!(
        s,
        r##"<text class="phi-label" x="{}" y="{}" fill="#2ca02c" text-anchor="middle">φ</text>"##,
        num(px),
        num(py)
    );

    let centroid = |a: Point2, b: Point2, c: Point2| (a + b + c) * (1.0 / 3.0);
    let c0 = centroid(t.a, t.b, t.g);
    let c1 = centroid(d.a_prime, d.b_prime, d.g_prime);
    let coincide = d.case_tag == CaseTag::RightA;
    let labels = [
        (t.a, "A", c0, 0.0),
        (t.b, "B", c0, 0.0),
        (t.g, "Γ", c0, 0.0),
        (d.a_prime, "A′", c1, 0.0),
        (d.b_prime, "B′", c1, 0.0),
        (d.g_prime, if coincide { "Γ′ = B" } else { "Γ′" }, c1, if coincide { 1.2 } else { 0.0 }),
    ];
    for (p, text, center, drop) in labels {
        let out = p - center;
        let out = if out.norm() > 0.0 { out * (1.0 / out.norm()) } else { Point2::new(0.0, 1.0) };
        let (x, y) = frame.map(p + out * (font * 0.9));
        let _ = writeln!(
            s,
            r#"<text class="vertex-label" x="{}" y="{}" text-anchor="middle" dominant-baseline="middle">{text}</text>"#,
            num(x),
            num(y + drop * font)
        );
    }

    let note_x = frame.min_x + font * 0.5;
    let mut note_y = -frame.max_y + frame.height + font * 1.2;
    for note in notes {
        let _ = writeln!(s, r#"<text class="note" x="{}" y="{}">{note}</text>"#, num(note_x), num(note_y));
        note_y += font * 1.4;
    }
    s.push_str("</svg>\n");
    s
}

fn notes(d: &DerivedConstruction) -> Vec<String> {
    let mut out = vec![
        "Angle Γ′ = Angle A".to_string(),
        "Angle B′ = Angle Γ".to_string(),
        "Angle A′ = Angle B".to_string(),
        format!("φ = {}°", num(d.phi.to_degrees())),
    ];
    match d.case_tag {
        CaseTag::AcuteA => out.push("A acute".to_string()),
        CaseTag::RightA => out.push("A = 90°, Point Γ′ = Point B".to_string()),
        CaseTag::ObtuseA => out.push("90° &lt; A &lt; 180°".to_string()),
    }
    out
}

pub fn write_svg(t: &Triangle, d: &DerivedConstruction, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(t, d))
}
