//! Verification reports for a single triangle and for seeded sweeps.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::construction::{construct_with_metrics, similarity_check, CaseTag, DerivedConstruction};
use crate::geom::{metrics, Triangle, TriangleMetrics};
use crate::identities::{
    area_from_cots, area_spread, cosine_area_residuals, half_angle_discrepancy, metrics_cot_sum, sixteen_e_squared,
};
use crate::ratio_verify::ProofChain;
use crate::sampler::{Stratum, TriangleSampler};
use crate::Result;

/// Triangles whose smallest angle is below this are verified at the stress tier.
pub const STRESS_MIN_ANGLE: f64 = PI / 180.0;
/// Uniform tolerance of the stress tier.
pub const STRESS_TOL: f64 = 1e-5;

pub const TOL_IDENTITY: f64 = 1e-9;
pub const TOL_AREA_SPREAD: f64 = 1e-8;
pub const TOL_POSTULATE1: f64 = 1e-8;
pub const TOL_ANGLE_SUM: f64 = 1e-12;
pub const TOL_SIMILARITY: f64 = 1e-7;

/// Twelve significant digits, fixed layout.
pub fn fmt12(v: f64) -> String {
    format!("{v:.11e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Strict,
    Stress,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualCheck {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualCheck {
    fn new(name: &str, value: f64, tolerance: f64) -> Self {
        Self { name: name.to_string(), value, tolerance, pass: value <= tolerance }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub metrics: TriangleMetrics,
    pub case_tag: CaseTag,
    pub tier: Tier,
    pub cot_sum: f64,
    pub ratio_geometric: f64,
    pub ratio_formula: f64,
    pub residuals: Vec<ResidualCheck>,
    /// First failing sub-identity of the proof chain, if the chain fails.
    pub first_failure: Option<String>,
    pub pass: bool,
}

/// Every residual for one triangle with the perpendicular construction.
fn residual_values(m: &TriangleMetrics, d: &DerivedConstruction) -> Result<Vec<(&'static str, f64, f64)>> {
    let chain = ProofChain::from_parts(m, d);
    let e16 = 16.0 * m.area * m.area;
    Ok(vec![
        ("formula6", (sixteen_e_squared(m.alpha, m.beta, m.gamma) - e16).abs() / e16, TOL_IDENTITY),
        ("formula8", half_angle_discrepancy(m)?, TOL_IDENTITY),
        ("formula9", (area_from_cots(m) - m.area).abs() / m.area, TOL_IDENTITY),
        ("area_spread", area_spread(m)?, TOL_AREA_SPREAD),
        ("eq4_6", cosine_area_residuals(m).into_iter().fold(0.0, f64::max), TOL_IDENTITY),
        ("eq7", chain.eq7, TOL_IDENTITY),
        ("eq9", chain.eq9, TOL_IDENTITY),
        ("eq10", chain.eq10, TOL_IDENTITY),
        ("eq11", chain.eq11, TOL_IDENTITY),
        ("eq12", chain.eq12, TOL_IDENTITY),
        ("eq13", chain.eq13, TOL_IDENTITY),
        ("eq14", chain.eq14, TOL_IDENTITY),
        ("chain_sum", chain.sum, TOL_IDENTITY),
        ("postulate1", chain.postulate1, TOL_POSTULATE1),
    ])
}

pub fn verify(t: &Triangle) -> Result<VerifyReport> {
    let m = metrics(t)?;
    let d = construct_with_metrics(t, &m, FRAC_PI_2)?;
    let smallest = m.ang_a.min(m.ang_b).min(m.ang_g);
    let tier = if smallest < STRESS_MIN_ANGLE { Tier::Stress } else { Tier::Strict };
    let residuals: Vec<ResidualCheck> = residual_values(&m, &d)?
        .into_iter()
        .map(|(name, v, tol)| ResidualCheck::new(name, v, if tier == Tier::Stress { STRESS_TOL } else { tol }))
        .collect();
    let pass = residuals.iter().all(|r| r.pass);
    let chain_tol = if tier == Tier::Stress { STRESS_TOL } else { TOL_IDENTITY };
    let first_failure = ProofChain::from_parts(&m, &d).first_failure(chain_tol).map(str::to_string);
    Ok(VerifyReport {
        metrics: m,
        case_tag: d.case_tag,
        tier,
        cot_sum: metrics_cot_sum(&m),
        ratio_geometric: d.ratio_geometric,
        ratio_formula: d.ratio_formula,
        residuals,
        first_failure,
        pass,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.metrics;
        writeln!(f, "sides    alpha={} beta={} gamma={}", fmt12(m.alpha), fmt12(m.beta), fmt12(m.gamma))?;
        writeln!(
            f,
            "angles   A={} B={} Gamma={} deg",
            fmt12(m.ang_a.to_degrees()),
            fmt12(m.ang_b.to_degrees()),
            fmt12(m.ang_g.to_degrees())
        )?;
        writeln!(f, "case     {}", self.case_tag.name())?;
        let tier = match self.tier {
            Tier::Strict => "strict",
            Tier::Stress => "stress",
        };
        writeln!(f, "tier     {tier}")?;
        writeln!(f, "cot_sum  {}", fmt12(self.cot_sum))?;
        writeln!(f, "ratio    geometric={} formula={}", fmt12(self.ratio_geometric), fmt12(self.ratio_formula))?;
        for r in &self.residuals {
            writeln!(
                f,
                "{:<12} {} tol={} {}",
                r.name,
                fmt12(r.value),
                fmt12(r.tolerance),
                if r.pass { "ok" } else { "FAIL" }
            )?;
        }
        if let Some(name) = &self.first_failure {
            writeln!(f, "first failing identity: {name}")?;
        }
        write!(f, "result   {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaxResidual {
    pub name: String,
    pub max: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CotSumArgmin {
    pub cot_sum: f64,
    pub b_deg: f64,
    pub gamma_deg: f64,
    pub scale: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub n: usize,
    pub seed: u64,
    pub stratum: Stratum,
    pub counts: [usize; 3],
    pub max_residuals: Vec<MaxResidual>,
    pub min_cot_sum: Option<CotSumArgmin>,
    pub pass: bool,
}

/// Runs every identity over `n` seeded triangles and keeps the worst
/// residual of each. Reductions are max/min only, so the result depends on
/// the seed and nothing else.
pub fn sweep(n: usize, seed: u64, stratum: Stratum) -> Result<SweepSummary> {
    let mut names: Vec<(&'static str, f64)> = Vec::new();
    let mut max: Vec<f64> = Vec::new();
    let mut counts = [0usize; 3];
    let mut argmin: Option<CotSumArgmin> = None;

    for s in TriangleSampler::new(seed, stratum).take(n) {
        let m = metrics(&s.triangle)?;
        let d = construct_with_metrics(&s.triangle, &m, FRAC_PI_2)?;
        let mut values = residual_values(&m, &d)?;
        values.push(("angle_sum", (m.ang_a + m.ang_b + m.ang_g - PI).abs(), TOL_ANGLE_SUM));
        let (x, y, z) = similarity_check(&s.triangle, &d)?;
        values.push(("similarity", x.max(y).max(z), TOL_SIMILARITY));

        if names.is_empty() {
            names = values.iter().map(|(n, _, t)| (*n, *t)).collect();
            max = vec![0.0; names.len()];
        }
        for (slot, (_, v, _)) in max.iter_mut().zip(&values) {
            *slot = slot.max(*v);
        }
        counts[match d.case_tag {
            CaseTag::AcuteA => 0,
            CaseTag::RightA => 1,
            CaseTag::ObtuseA => 2,
        }] += 1;
        let sum = metrics_cot_sum(&m);
        if argmin.as_ref().is_none_or(|a| sum < a.cot_sum) {
            argmin = Some(CotSumArgmin {
                cot_sum: sum,
                b_deg: s.ang_b.to_degrees(),
                gamma_deg: s.ang_g.to_degrees(),
                scale: s.scale,
            });
        }
    }

    let max_residuals: Vec<MaxResidual> = names
        .iter()
        .zip(&max)
        .map(|((name, tol), v)| MaxResidual { name: name.to_string(), max: *v, tolerance: *tol })
        .collect();
    let pass = max_residuals.iter().all(|r| r.max <= r.tolerance)
        && argmin.as_ref().is_none_or(|a| a.cot_sum >= 3f64.sqrt() - 1e-12);
    Ok(SweepSummary { n, seed, stratum, counts, max_residuals, min_cot_sum: argmin, pass })
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "sweep n={} seed={} stratum={}", self.n, self.seed, self.stratum.name())?;
        writeln!(out, "cases acute={} right={} obtuse={}", self.counts[0], self.counts[1], self.counts[2])?;
        for r in &self.max_residuals {
            let status = if r.max <= r.tolerance { "ok" } else { "FAIL" };
            writeln!(out, "max {:<12} {} tol={} {status}", r.name, fmt12(r.max), fmt12(r.tolerance))?;
        }
        match &self.min_cot_sum {
            Some(a) => writeln!(
                out,
                "min cot_sum {} at B={} Gamma={} deg scale={}",
                fmt12(a.cot_sum),
                fmt12(a.b_deg),
                fmt12(a.gamma_deg),
                fmt12(a.scale)
            )?,
            None => writeln!(out, "min cot_sum none")?,
        }
        write!(out, "result {}", if self.pass { "PASS" } else { "FAIL" })?;
        f.write_str(&out)
    }
}
