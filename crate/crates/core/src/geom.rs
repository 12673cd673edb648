//! Floating-point plane primitives and triangle metric extraction.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative degeneracy threshold: a triangle is rejected when its
/// |signed area| falls below `DEGENERACY_EPS * longest_side²`.
pub const DEGENERACY_EPS: f64 = 1e-9;

const ZERO_DIRECTION_EPS: f64 = 1e-12;
const PARALLEL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self::new(x, y)
    }
}

/// The line `a·x + b·y = c` with unit normal `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line2 {
    /// Line through `p` running along `dir`.
    pub fn through(p: Point2, dir: Point2) -> Result<Self> {
        let len = dir.norm();
        if !(len > ZERO_DIRECTION_EPS) {
            return Err(Error::ZeroDirection);
        }
        let a = -dir.y / len;
        let b = dir.x / len;
        Ok(Self { a, b, c: a * p.x + b * p.y })
    }

    pub fn normal(&self) -> Point2 {
        Point2::new(self.a, self.b)
    }

    /// Unit direction vector (the normal rotated clockwise by a quarter turn).
    pub fn direction(&self) -> Point2 {
        Point2::new(self.b, -self.a)
    }

    /// Signed value of `a·x + b·y − c`; the distance to the line since the normal is unit.
    pub fn residual(&self, p: Point2) -> f64 {
        self.a * p.x + self.b * p.y - self.c
    }
}

/// Twice-halved cross product: `½ (q − p) × (s − p)`, positive when `p, q, s`
/// wind counterclockwise.
pub fn signed_area(p: Point2, q: Point2, s: Point2) -> f64 {
    0.5 * (q - p).cross(s - p)
}

/// The line through `p` whose direction is `dir_to − dir_from` rotated
/// counterclockwise by `phi`. Negative `phi` rotates clockwise.
pub fn line_through_at_angle(p: Point2, dir_from: Point2, dir_to: Point2, phi: f64) -> Result<Line2> {
    let dir = dir_to - dir_from;
    if dir.norm() < ZERO_DIRECTION_EPS {
        return Err(Error::ZeroDirection);
    }
    Line2::through(p, dir.rotated(phi))
}

pub fn intersect(l1: &Line2, l2: &Line2) -> Result<Point2> {
    let det = l1.a * l2.b - l2.a * l1.b;
    if det.abs() < PARALLEL_EPS {
        return Err(Error::ParallelLines);
    }
    let x = (l1.c * l2.b - l2.c * l1.b) / det;
    let y = (l1.a * l2.c - l2.a * l1.c) / det;
    Ok(Point2::new(x, y))
}

/// Three labeled vertices A, B, Γ, kept in the order given.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub a: Point2,
    pub b: Point2,
    pub g: Point2,
}

impl Triangle {
    /// Validates finiteness and rejects (near-)collinear vertices.
    pub fn new(a: Point2, b: Point2, g: Point2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && g.is_finite()) {
            return Err(Error::NonFinite);
        }
        let t = Self { a, b, g };
        let longest = a.distance(b).max(b.distance(g)).max(g.distance(a));
        let threshold = DEGENERACY_EPS * longest * longest;
        let area = t.signed_area();
        if !(area.abs() >= threshold) || longest == 0.0 {
            return Err(Error::DegenerateTriangle { area, threshold });
        }
        Ok(t)
    }

    pub fn from_coords(a: (f64, f64), b: (f64, f64), g: (f64, f64)) -> Result<Self> {
        Self::new(a.into(), b.into(), g.into())
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(self.a, self.b, self.g)
    }

    /// `+1.0` for counterclockwise vertex order, `-1.0` for clockwise.
    pub fn orientation(&self) -> f64 {
        self.signed_area().signum()
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.g]
    }

    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Result<Self> {
        Self::new(f(self.a), f(self.b), f(self.g))
    }

    pub fn longest_side(&self) -> f64 {
        self.a.distance(self.b).max(self.b.distance(self.g)).max(self.g.distance(self.a))
    }
}

/// Side lengths, interior angles (radians), semi-perimeter and area.
///
/// `alpha = |BΓ|`, `beta = |ΓA|`, `gamma = |AB|`; `r` is the semi-perimeter,
/// not the inradius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleMetrics {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub ang_a: f64,
    pub ang_b: f64,
    pub ang_g: f64,
    pub r: f64,
    pub area: f64,
}

impl TriangleMetrics {
    pub fn sides(&self) -> (f64, f64, f64) {
        (self.alpha, self.beta, self.gamma)
    }

    pub fn angles(&self) -> (f64, f64, f64) {
        (self.ang_a, self.ang_b, self.ang_g)
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.alpha * self.alpha + self.beta * self.beta + self.gamma * self.gamma
    }
}

/// Angle opposite `opposite`, between sides `s1` and `s2`, by the law of cosines.
pub fn angle_from_sides(opposite: f64, s1: f64, s2: f64) -> f64 {
    let cos = (s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2);
    cos.clamp(-1.0, 1.0).acos()
}

pub fn metrics(t: &Triangle) -> Result<TriangleMetrics> {
    // Re-validate: fields are public and may have been edited after construction.
    let t = Triangle::new(t.a, t.b, t.g)?;
    let alpha = t.b.distance(t.g);
    let beta = t.g.distance(t.a);
    let gamma = t.a.distance(t.b);
    Ok(TriangleMetrics {
        alpha,
        beta,
        gamma,
        ang_a: angle_from_sides(alpha, beta, gamma),
        ang_b: angle_from_sides(beta, gamma, alpha),
        ang_g: angle_from_sides(gamma, alpha, beta),
        r: (alpha + beta + gamma) / 2.0,
        area: t.signed_area().abs(),
    })
}
