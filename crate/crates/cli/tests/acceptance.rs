//! Exit criteria. Each criterion prints one PASS/FAIL line; the binary exits
//! non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
use std::process::Command;
use std::time::{Duration, Instant};

use perptri_core::construction::{construct, similarity_check, CaseTag};
use perptri_core::extremal::{
    global_min_cot_sum, lattice_min_cot_sum, lemma1_f, lemma2_g, lemma2_gprime, minimize_gk, right_cot_sum,
    right_triangle_min, theta_k,
};
use perptri_core::geom::metrics;
use perptri_core::identities::{area_spread, cot_sum, normalized_residual};
use perptri_core::ratio_verify::ProofChain;
use perptri_core::sampler::{corpus, Stratum, TriangleSampler};
use rand::Rng;

const SEED: u64 = 42;
const CORPUS: usize = 100_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn c1_area_ratio() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut cases = [0usize; 3];
    for s in TriangleSampler::new(SEED, Stratum::All).take(CORPUS) {
        let d = construct(&s.triangle, FRAC_PI_2).unwrap();
        worst = worst.max(normalized_residual(d.ratio_geometric, d.ratio_formula));
        cases[d.case_tag as usize] += 1;
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-8 && elapsed <= Duration::from_secs(10) && cases.iter().all(|&c| c > 0),
        format!("max residual {worst:.3e} (tol 1e-8), strata {cases:?}, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn c2_minimum_three() -> Outcome {
    let (sum, b, g) = global_min_cot_sum();
    let (lattice, _, _) = lattice_min_cot_sum(2000);
    let ratio_err = (sum * sum - 3.0).abs();
    let angle_err = (b - FRAC_PI_3).abs().max((g - FRAC_PI_3).abs());
    let floor = 3f64.sqrt() - 1e-6;
    outcome(
        ratio_err <= 1e-8 && angle_err <= 1e-6 && lattice >= floor,
        format!("|ratio-3| {ratio_err:.3e}, angle err {angle_err:.3e} rad, lattice min {lattice:.12}"),
    )
}

fn c3_minimum_four() -> Outcome {
    let r = right_triangle_min();
    let closed_ok = (r.ratio - 4.0).abs() <= 1e-10 && (r.ang_b - FRAC_PI_4).abs() <= 1e-8;
    let numeric_ok = (r.numeric_ratio - 4.0).abs() <= 1e-10 && (r.numeric_b - FRAC_PI_4).abs() <= 1e-8;
    let mut worst = 0.0f64;
    let n = 10_000;
    for i in 1..=n {
        let b = FRAC_PI_2 * i as f64 / (n + 1) as f64;
        let direct = cot_sum(FRAC_PI_2, b, FRAC_PI_2 - b).unwrap();
        worst = worst.max(normalized_residual(direct, right_cot_sum(b)));
    }
    outcome(
        closed_ok && numeric_ok && worst <= 1e-10,
        format!(
            "ratio {} at B={}; numeric ratio err {:.3e}, B err {:.3e}; 2/sin2B residual {worst:.3e}",
            r.ratio,
            r.ang_b,
            (r.numeric_ratio - 4.0).abs(),
            (r.numeric_b - FRAC_PI_4).abs()
        ),
    )
}

fn c4_area_agreement() -> Outcome {
    let worst = corpus(SEED, Stratum::All, CORPUS)
        .iter()
        .map(|s| area_spread(&metrics(&s.triangle).unwrap()).unwrap())
        .fold(0.0, f64::max);
    outcome(worst <= 1e-8, format!("max pairwise relative spread {worst:.3e} (tol 1e-8)"))
}

fn c5_proof_chain() -> Outcome {
    let mut worst = [0.0f64; 6];
    let names = ["eq7", "eq9", "eq11", "eq12", "eq13", "sum"];
    for s in corpus(SEED, Stratum::All, CORPUS) {
        let c = ProofChain::new(&s.triangle).unwrap();
        for (w, n) in worst.iter_mut().zip(names) {
            *w = w.max(c.get(n).unwrap());
        }
    }
    let detail = names.iter().zip(worst).map(|(n, w)| format!("{n} {w:.2e}")).collect::<Vec<_>>().join(", ");
    outcome(worst.iter().all(|&w| w <= 1e-9), detail)
}

fn c6_closed_vs_numeric() -> Outcome {
    let n = 81;
    let (lo, hi) = (1e-2f64.ln(), 1e2f64.ln());
    let mut x_err = 0.0f64;
    let mut v_err = 0.0f64;
    let mut f_err = 0.0f64;
    let mut d_err = 0.0f64;
    let h = 1e-6;
    for i in 0..n {
        let k = (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp();
        let r = minimize_gk(k).unwrap();
        x_err = x_err.max(r.argmin_err());
        v_err = v_err.max(r.agreement_err);
        let f = lemma1_f(k).unwrap();
        f_err = f_err.max((lemma2_g(k, theta_k(k).unwrap()).unwrap() - f).abs() / f);
        for j in 1..50 {
            let x = 0.01 + (FRAC_PI_2 - 0.02) * j as f64 / 50.0;
            let fd = (lemma2_g(k, x + h).unwrap() - lemma2_g(k, x - h).unwrap()) / (2.0 * h);
            d_err = d_err.max(normalized_residual(lemma2_gprime(k, x).unwrap(), fd));
        }
    }
    outcome(
        x_err <= 1e-6 && v_err <= 1e-9 && f_err <= 1e-10 && d_err <= 1e-5,
        format!("argmin {x_err:.2e}, value {v_err:.2e}, g(theta)=f {f_err:.2e}, g' vs FD {d_err:.2e}"),
    )
}

fn c7_similarity() -> Outcome {
    let mut sampler = TriangleSampler::new(SEED + 7, Stratum::All);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let s = sampler.next_sample();
        let u: f64 = sampler.rng().random_range(0.0..1.0);
        let phi = (1.0 - u) * FRAC_PI_2;
        let d = construct(&s.triangle, phi).unwrap();
        let (x, y, z) = similarity_check(&s.triangle, &d).unwrap();
        worst = worst.max(x).max(y).max(z);
    }
    outcome(worst <= 1e-7, format!("max angle discrepancy {worst:.3e} rad (tol 1e-7)"))
}

fn c8_figure_cases() -> Outcome {
    let mut right_worst = 0.0f64;
    for s in corpus(SEED + 8, Stratum::Right, 10_000) {
        let d = construct(&s.triangle, FRAC_PI_2).unwrap();
        assert_eq!(d.case_tag, CaseTag::RightA);
        right_worst = right_worst.max(d.g_prime.distance(s.triangle.b) / s.scale);
    }
    let mut obtuse_worst = 0.0f64;
    for s in corpus(SEED + 9, Stratum::Obtuse, CORPUS) {
        let d = construct(&s.triangle, FRAC_PI_2).unwrap();
        assert_eq!(d.case_tag, CaseTag::ObtuseA);
        obtuse_worst = obtuse_worst.max(normalized_residual(d.ratio_geometric, d.ratio_formula));
    }
    outcome(
        right_worst <= 1e-9 && obtuse_worst <= 1e-8,
        format!("|G'-B|/scale {right_worst:.3e} (tol 1e-9), obtuse residual {obtuse_worst:.3e} (tol 1e-8)"),
    )
}

fn c9_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_perptri"))
            .args(["sweep", "--n", "1000", "--seed", "7"])
            .output()
            .expect("run perptri")
    };
    let (a, b) = (run(), run());
    outcome(
        a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout,
        format!("{} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 area ratio identity over 1e5 triangles", c1_area_ratio),
        ("2 minimum ratio 3 at the equilateral triangle", c2_minimum_three),
        ("3 right-triangle minimum 4 at 45 degrees", c3_minimum_four),
        ("4 five-way area agreement", c4_area_agreement),
        ("5 proof-chain identities", c5_proof_chain),
        ("6 closed-form vs numeric minimization", c6_closed_vs_numeric),
        ("7 similarity for every phi", c7_similarity),
        ("8 right and obtuse figure cases", c8_figure_cases),
        ("9 deterministic sweep output", c9_determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let o = check();
        println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
