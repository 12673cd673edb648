//! `perptri`: metrics, verification, construction, sweeps, minima and SVG
//! figures for the perpendicular-derived triangle.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error.

use std::f64::consts::FRAC_PI_2;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use perptri_core::construction::{construct, similarity_check, DerivedConstruction};
use perptri_core::extremal::{global_min_closed_form, global_min_cot_sum, minimize_gk, right_triangle_min};
use perptri_core::geom::{metrics, Triangle};
use perptri_core::identities::{area_from_cots, area_sine, heron_area, sixteen_e_squared};
use perptri_core::report::{fmt12, sweep, verify};
use perptri_core::sampler::Stratum;
use perptri_core::svg::write_svg;
use perptri_core::TriangleSpec;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "perptri", version, about = "Perpendicular-derived triangles and the cotangent-sum area ratio")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Triangle JSON file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Machine-readable JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Side lengths, angles, semi-perimeter and area by every formula.
    Metrics(Input),
    /// Check every identity and the area ratio for one triangle.
    Verify(Input),
    /// Build the derived triangle for a turning angle phi.
    Construct {
        #[command(flatten)]
        input: Input,
        /// Turning angle in degrees, 0 < phi <= 90.
        #[arg(long, default_value_t = 90.0)]
        phi: f64,
        /// Also write an SVG figure here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded fuzz sweep over random triangles.
    Sweep {
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "all")]
        stratum: Stratum,
        #[arg(long)]
        json: bool,
    },
    /// Minimum of the area ratio, over all triangles or right triangles only.
    Minimize {
        #[arg(long)]
        right: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write the SVG figure of the construction.
    Render {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 90.0)]
        phi: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_triangle(path: Option<&Path>) -> Result<Triangle, Failure> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(TriangleSpec::from_json(&text)?.to_triangle()?)
}

fn print_json<T: Serialize>(value: &T) -> CmdResult {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
struct MetricsOut {
    alpha: f64,
    beta: f64,
    gamma: f64,
    angle_a_deg: f64,
    angle_b_deg: f64,
    angle_gamma_deg: f64,
    r: f64,
    area_shoelace: f64,
    area_heron: f64,
    area_sixteen_e_squared: f64,
    area_cotangents: f64,
    area_sine: f64,
}

fn cmd_metrics(input: &Input) -> CmdResult {
    let t = read_triangle(input.input.as_deref())?;
    let m = metrics(&t)?;
    let out = MetricsOut {
        alpha: m.alpha,
        beta: m.beta,
        gamma: m.gamma,
        angle_a_deg: m.ang_a.to_degrees(),
        angle_b_deg: m.ang_b.to_degrees(),
        angle_gamma_deg: m.ang_g.to_degrees(),
        r: m.r,
        area_shoelace: m.area,
        area_heron: heron_area(m.alpha, m.beta, m.gamma)?,
        area_sixteen_e_squared: sixteen_e_squared(m.alpha, m.beta, m.gamma).max(0.0).sqrt() / 4.0,
        area_cotangents: area_from_cots(&m),
        area_sine: area_sine(m.beta, m.gamma, m.ang_a),
    };
    if input.json {
        return print_json(&out);
    }
    println!("alpha={} beta={} gamma={}", fmt12(out.alpha), fmt12(out.beta), fmt12(out.gamma));
    println!(
        "A={} B={} Gamma={} deg",
        fmt12(out.angle_a_deg),
        fmt12(out.angle_b_deg),
        fmt12(out.angle_gamma_deg)
    );
    println!("r={}", fmt12(out.r));
    println!("E shoelace    {}", fmt12(out.area_shoelace));
    println!("E heron       {}", fmt12(out.area_heron));
    println!("E 16E^2       {}", fmt12(out.area_sixteen_e_squared));
    println!("E cotangents  {}", fmt12(out.area_cotangents));
    println!("E sine        {}", fmt12(out.area_sine));
    Ok(())
}

fn cmd_verify(input: &Input) -> CmdResult {
    let t = read_triangle(input.input.as_deref())?;
    let report = verify(&t)?;
    if input.json {
        print_json(&report)?;
    } else {
        println!("{report}");
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct ConstructOut {
    construction: DerivedConstruction,
    derived: perptri_core::TriangleMetrics,
    similarity_discrepancy: (f64, f64, f64),
    g_prime_on_b: bool,
}

fn build(input: Option<&Path>, phi_deg: f64) -> Result<(Triangle, DerivedConstruction), Failure> {
    if !(phi_deg > 0.0 && phi_deg <= 90.0) {
        return Err(Failure::Input(format!("phi = {phi_deg} deg is outside (0, 90]")));
    }
    let t = read_triangle(input)?;
    // 90 maps to exactly pi/2
    let phi = if phi_deg == 90.0 { FRAC_PI_2 } else { phi_deg.to_radians() };
    let d = construct(&t, phi)?;
    Ok((t, d))
}

fn cmd_construct(input: &Input, phi_deg: f64, out: Option<&Path>) -> CmdResult {
    let (t, d) = build(input.input.as_deref(), phi_deg)?;
    let derived = metrics(&d.derived_triangle()?)?;
    let sim = similarity_check(&t, &d)?;
    let g_prime_on_b = d.g_prime.distance(t.b) <= 1e-9 * t.longest_side();
    if let Some(path) = out {
        write_svg(&t, &d, path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if input.json {
        return print_json(&ConstructOut { construction: d, derived, similarity_discrepancy: sim, g_prime_on_b });
    }
    println!("phi={} deg case={}", fmt12(phi_deg), d.case_tag.name());
    println!("A'=({}, {})", fmt12(d.a_prime.x), fmt12(d.a_prime.y));
    println!("B'=({}, {})", fmt12(d.b_prime.x), fmt12(d.b_prime.y));
    println!("Gamma'=({}, {})", fmt12(d.g_prime.x), fmt12(d.g_prime.y));
    if g_prime_on_b {
        println!("Gamma' coincides with B");
    }
    println!("E'={}", fmt12(d.area_prime));
    println!("ratio geometric={}", fmt12(d.ratio_geometric));
    if d.is_perpendicular() {
        println!("ratio formula={}", fmt12(d.ratio_formula));
    } else {
        println!("ratio formula n/a (phi != 90)");
    }
    println!(
        "derived alpha={} beta={} gamma={} E={}",
        fmt12(derived.alpha),
        fmt12(derived.beta),
        fmt12(derived.gamma),
        fmt12(derived.area)
    );
    println!("similarity |A'-B|={} |B'-Gamma|={} |Gamma'-A|={} rad", fmt12(sim.0), fmt12(sim.1), fmt12(sim.2));
    if let Some(path) = out {
        println!("svg written to {}", path.display());
    }
    Ok(())
}

fn cmd_sweep(n: usize, seed: u64, stratum: Stratum, json: bool) -> CmdResult {
    let summary = sweep(n, seed, stratum)?;
    if json {
        print_json(&summary)?;
    } else {
        println!("{summary}");
    }
    if summary.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct MinimizeOut {
    scope: &'static str,
    ratio_closed_form: f64,
    ratio_numeric: f64,
    angles_deg_closed_form: [f64; 3],
    angles_deg_numeric: [f64; 3],
    agreement_err: f64,
    report: Option<perptri_core::ExtremalReport>,
}

fn cmd_minimize(right: bool, json: bool) -> CmdResult {
    let out = if right {
        let r = right_triangle_min();
        MinimizeOut {
            scope: "right triangles",
            ratio_closed_form: r.ratio,
            ratio_numeric: r.numeric_ratio,
            angles_deg_closed_form: [90.0, r.ang_b.to_degrees(), 90.0 - r.ang_b.to_degrees()],
            angles_deg_numeric: [90.0, r.numeric_b.to_degrees(), 90.0 - r.numeric_b.to_degrees()],
            agreement_err: (r.ratio - r.numeric_ratio).abs(),
            report: None,
        }
    } else {
        let (sum, b, g) = global_min_closed_form();
        let (nsum, nb, ng) = global_min_cot_sum();
        let report = minimize_gk(g.cos() / g.sin())?;
        let deg = |b: f64, g: f64| [180.0 - b.to_degrees() - g.to_degrees(), b.to_degrees(), g.to_degrees()];
        MinimizeOut {
            scope: "all triangles",
            ratio_closed_form: sum * sum,
            ratio_numeric: nsum * nsum,
            angles_deg_closed_form: deg(b, g),
            angles_deg_numeric: deg(nb, ng),
            agreement_err: report.agreement_err.max((sum - nsum).abs()),
            report: Some(report),
        }
    };
    if json {
        print_json(&out)?;
    } else {
        println!("scope {}", out.scope);
        println!("ratio closed-form={} numeric={}", fmt12(out.ratio_closed_form), fmt12(out.ratio_numeric));
        let [a, b, g] = out.angles_deg_closed_form;
        println!("closed-form A={} B={} Gamma={} deg", fmt12(a), fmt12(b), fmt12(g));
        let [a, b, g] = out.angles_deg_numeric;
        println!("numeric     A={} B={} Gamma={} deg", fmt12(a), fmt12(b), fmt12(g));
        if let Some(r) = &out.report {
            println!(
                "g_k at k={}: theta_k={} numeric={} min={} numeric={}",
                fmt12(r.k),
                fmt12(r.theta_k),
                fmt12(r.numeric_argmin),
                fmt12(r.min_value),
                fmt12(r.numeric_min)
            );
        }
        println!("agreement_err {}", fmt12(out.agreement_err));
    }
    if out.agreement_err <= 1e-9 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_render(input: Option<&Path>, phi_deg: f64, out: &Path) -> CmdResult {
    let (t, d) = build(input, phi_deg)?;
    write_svg(&t, &d, out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    println!("svg written to {}", out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Metrics(input) => cmd_metrics(input),
        Command::Verify(input) => cmd_verify(input),
        Command::Construct { input, phi, out } => cmd_construct(input, *phi, out.as_deref()),
        Command::Sweep { n, seed, stratum, json } => cmd_sweep(*n, *seed, *stratum, *json),
        Command::Minimize { right, json } => cmd_minimize(*right, *json),
        Command::Render { input, phi, out } => cmd_render(input.as_deref(), *phi, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
