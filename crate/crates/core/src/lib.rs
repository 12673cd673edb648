//! Triangle geometry around the perpendicular construction: given a triangle
//! ABΓ, draw the line perpendicular to AB at B, to BΓ at Γ and to ΓA at A.
//! The three lines bound a new triangle A′B′Γ′ whose area satisfies
//!
//! ```text
//! E′ / E = (cot A + cot B + cot Γ)²
//! ```
//!
//! The crate builds the construction from coordinates, checks that identity
//! together with every supporting triangle formula as floating-point
//! residuals, and locates the extremal values of the ratio (3 for all
//! triangles, 4 for right triangles).

pub mod construction;
pub mod extremal;
pub mod geom;
pub mod identities;
pub mod ratio_verify;
pub mod report;
pub mod sampler;
pub mod spec;
pub mod svg;

mod error;

pub use construction::{construct, similarity_check, CaseTag, DerivedConstruction};
pub use error::{Error, Result};
pub use extremal::{global_min_cot_sum, minimize_gk, right_triangle_min, ExtremalReport};
pub use geom::{intersect, line_through_at_angle, metrics, signed_area, Line2, Point2, Triangle, TriangleMetrics};
pub use spec::TriangleSpec;
