//! Identity checks over the seeded main corpus.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use perptri_core::construction::{construct, CaseTag};
use perptri_core::geom::metrics;
use perptri_core::identities::{
    area_spread, cosine_area_residuals, cot, cot_double, cot_sum, cot_sum_from_bg, half_angle_discrepancy,
};
use perptri_core::ratio_verify::{eq7_residual, ProofChain};
use perptri_core::sampler::{corpus, Stratum, TriangleSampler, STRESS_DELTA};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_917;

#[test]
fn areas_agree_across_formulas() {
    let mut worst = 0.0f64;
    for s in corpus(SEED, Stratum::All, 20_000) {
        let m = metrics(&s.triangle).unwrap();
        worst = worst.max(area_spread(&m).unwrap());
        assert!((m.ang_a + m.ang_b + m.ang_g - PI).abs() <= 1e-12);
    }
    assert!(worst <= 1e-8, "{worst:e}");
}

#[test]
fn half_angle_radicals_and_law_of_cosines() {
    for s in corpus(SEED + 1, Stratum::All, 20_000) {
        let m = metrics(&s.triangle).unwrap();
        assert!(half_angle_discrepancy(&m).unwrap() <= 1e-9);
        for r in cosine_area_residuals(&m) {
            assert!(r <= 1e-9);
        }
    }
}

#[test]
fn double_angle_cotangent() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100_000 {
        let theta: f64 = rng.random_range(1e-6..FRAC_PI_2);
        if (theta - FRAC_PI_4).abs() < 1e-12 {
            continue;
        }
        let direct = {
            let (s, c) = (2.0 * theta).sin_cos();
            c / s
        };
        let got = cot_double(cot(theta)).unwrap();
        assert!((got - direct).abs() <= 1e-9 * (1.0 + direct.abs()), "theta={theta}");
    }
}

#[test]
fn cot_sum_forms_agree() {
    for s in corpus(SEED + 2, Stratum::All, 20_000) {
        let a = PI - s.ang_b - s.ang_g;
        let direct = cot_sum(a, s.ang_b, s.ang_g).unwrap();
        let two = cot_sum_from_bg(s.ang_b, s.ang_g);
        assert!((direct - two).abs() <= 1e-10 * direct.abs(), "{direct} vs {two}");
        assert!(direct >= 3f64.sqrt() - 1e-12);
    }
}

#[test]
fn proof_chain_by_stratum() {
    for stratum in [Stratum::Acute, Stratum::Right, Stratum::Obtuse] {
        let mut worst = ProofChain::new(&corpus(0, stratum, 1)[0].triangle).unwrap();
        for s in corpus(SEED + 3, stratum, 10_000) {
            let c = ProofChain::new(&s.triangle).unwrap();
            assert_eq!(c.first_failure(1e-9), None, "{stratum:?} {c:?}");
            for name in ["eq7", "eq9", "eq10", "eq11", "eq12", "eq13", "eq14", "sum", "postulate1"] {
                let slot = match name {
                    "eq7" => &mut worst.eq7,
                    "eq9" => &mut worst.eq9,
                    "eq10" => &mut worst.eq10,
                    "eq11" => &mut worst.eq11,
                    "eq12" => &mut worst.eq12,
                    "eq13" => &mut worst.eq13,
                    "eq14" => &mut worst.eq14,
                    "sum" => &mut worst.sum,
                    _ => &mut worst.postulate1,
                };
                *slot = slot.max(c.get(name).unwrap());
            }
        }
        println!("{stratum:?}: {worst:?}");
        assert!(worst.max() <= 1e-9);
    }
}

#[test]
fn obtuse_angle_at_b_or_gamma_still_satisfies_the_ratio() {
    let mut seen_b = 0;
    let mut seen_g = 0;
    for s in corpus(SEED + 4, Stratum::Acute, 20_000) {
        let m = metrics(&s.triangle).unwrap();
        if m.ang_b > FRAC_PI_2 {
            seen_b += 1;
        }
        if m.ang_g > FRAC_PI_2 {
            seen_g += 1;
        }
        let d = construct(&s.triangle, FRAC_PI_2).unwrap();
        assert!((d.ratio_geometric - d.ratio_formula).abs() <= 1e-8 * (1.0 + d.ratio_formula));
        assert!(eq7_residual(&m, &d) <= 1e-8);
    }
    assert!(seen_b > 100 && seen_g > 100);
}

#[test]
fn stress_corpus_at_relaxed_tolerance() {
    let mut worst = 0.0f64;
    let mut sampler = TriangleSampler::with_delta(SEED, Stratum::All, STRESS_DELTA);
    for _ in 0..20_000 {
        let s = sampler.next_sample();
        let c = ProofChain::new(&s.triangle).unwrap();
        worst = worst.max(c.max());
        let m = metrics(&s.triangle).unwrap();
        worst = worst.max(area_spread(&m).unwrap());
    }
    println!("stress tier worst residual {worst:e}");
    assert!(worst <= 1e-5);
}

#[test]
fn right_stratum_puts_g_prime_on_b() {
    for s in corpus(SEED + 5, Stratum::Right, 5_000) {
        let d = construct(&s.triangle, FRAC_PI_2).unwrap();
        assert_eq!(d.case_tag, CaseTag::RightA);
        assert!(d.g_prime.distance(s.triangle.b) <= 1e-9 * s.scale);
    }
}
