//! Seeded random triangles for the fuzz sweeps.
//!
//! Angles `(B, Γ)` are drawn uniformly from the open simplex
//! `{B, Γ > δ, B + Γ < π − δ}`, restricted by stratum on the angle A; the
//! triangle is scaled log-uniformly in `[1e-2, 1e2]` and rotated by a
//! uniform angle. The right-A stratum fixes `A = π/2` and draws B uniformly
//! from `(δ, π/2 − δ)`. `All` cycles acute, right, obtuse.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{Point2, Triangle};
use crate::spec::triangle_from_three_angles;

/// Minimum angle of the main corpus, in radians.
pub const MAIN_DELTA: f64 = 0.01;
/// Minimum angle of the near-degenerate stress corpus.
pub const STRESS_DELTA: f64 = 1e-4;
pub const SCALE_RANGE: (f64, f64) = (1e-2, 1e2);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    All,
    Acute,
    Right,
    Obtuse,
}

impl FromStr for Stratum {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Stratum::All),
            "acute" => Ok(Stratum::Acute),
            "right" => Ok(Stratum::Right),
            "obtuse" => Ok(Stratum::Obtuse),
            other => Err(format!("unknown stratum '{other}' (expected all, acute, right or obtuse)")),
        }
    }
}

impl Stratum {
    pub fn name(self) -> &'static str {
        match self {
            Stratum::All => "all",
            Stratum::Acute => "acute",
            Stratum::Right => "right",
            Stratum::Obtuse => "obtuse",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub triangle: Triangle,
    pub ang_b: f64,
    pub ang_g: f64,
    pub scale: f64,
    pub stratum: Stratum,
}

pub struct TriangleSampler {
    rng: ChaCha8Rng,
    stratum: Stratum,
    delta: f64,
    count: u64,
}

impl TriangleSampler {
    pub fn new(seed: u64, stratum: Stratum) -> Self {
        Self::with_delta(seed, stratum, MAIN_DELTA)
    }

    pub fn with_delta(seed: u64, stratum: Stratum, delta: f64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), stratum, delta, count: 0 }
    }

    /// Access to the underlying stream, e.g. for drawing φ alongside each triangle.
    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn angles(&mut self, stratum: Stratum) -> (f64, f64, f64) {
        let d = self.delta;
        if stratum == Stratum::Right {
            let b = self.rng.random_range(d..FRAC_PI_2 - d);
            return (FRAC_PI_2, b, FRAC_PI_2 - b);
        }
        loop {
            let b = self.rng.random_range(d..PI - 2.0 * d);
            let g = self.rng.random_range(d..PI - 2.0 * d);
            let a = PI - b - g;
            let keep = a > d
                && match stratum {
                    Stratum::Acute => a < FRAC_PI_2,
                    Stratum::Obtuse => a > FRAC_PI_2,
                    _ => true,
                };
            if keep {
                return (a, b, g);
            }
        }
    }

    pub fn next_sample(&mut self) -> Sample {
        let stratum = match self.stratum {
            Stratum::All => [Stratum::Acute, Stratum::Right, Stratum::Obtuse][(self.count % 3) as usize],
            s => s,
        };
        self.count += 1;
        let (a, b, g) = self.angles(stratum);
        let (lo, hi) = SCALE_RANGE;
        let scale = self.rng.random_range(lo.ln()..hi.ln()).exp();
        let turn = self.rng.random_range(0.0..TAU);
        let triangle = triangle_from_three_angles(a, b, g, scale)
            .and_then(|t| t.map(|p: Point2| p.rotated(turn)))
            .expect("sampled angles exceed the degeneracy threshold");
        Sample { triangle, ang_b: b, ang_g: g, scale, stratum }
    }
}

impl Iterator for TriangleSampler {
    type Item = Sample;
    fn next(&mut self) -> Option<Sample> {
        Some(self.next_sample())
    }
}

/// `n` samples from the main corpus.
pub fn corpus(seed: u64, stratum: Stratum, n: usize) -> Vec<Sample> {
    TriangleSampler::new(seed, stratum).take(n).collect()
}
