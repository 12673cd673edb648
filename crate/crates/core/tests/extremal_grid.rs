use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use perptri_core::extremal::{
    lemma1_f, lemma2_g, lemma2_gprime, minimize_gk, right_cot_sum, right_triangle_min, theta_k,
};
use perptri_core::identities::{arccot, cot_sum, cot_sum_from_bg};

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

#[test]
fn closed_form_matches_golden_section_on_log_grid() {
    let mut worst_x = 0.0f64;
    let mut worst_v = 0.0f64;
    for k in log_grid(1e-2, 1e2, 81) {
        let r = minimize_gk(k).unwrap();
        worst_x = worst_x.max(r.argmin_err());
        worst_v = worst_v.max(r.agreement_err);
        assert!(r.min_value > 0.0);
        assert!(r.theta_k > FRAC_PI_4 && r.theta_k < FRAC_PI_2);
    }
    println!("worst argmin error {worst_x:e}, worst value error {worst_v:e}");
    assert!(worst_x <= 1e-6);
    assert!(worst_v <= 1e-9);
}

#[test]
fn minimum_of_g_is_f_of_k() {
    for k in log_grid(1e-2, 1e2, 201) {
        let g = lemma2_g(k, theta_k(k).unwrap()).unwrap();
        let f = lemma1_f(k).unwrap();
        assert!((g - f).abs() <= 1e-10 * f, "k={k}: g={g} f={f}");
    }
}

#[test]
fn lemma1_minimum_by_brute_force() {
    let mut best = (f64::INFINITY, 0.0);
    for i in 1..200_000 {
        let x = i as f64 * 1e-5;
        let v = lemma1_f(x).unwrap();
        if v < best.0 {
            best = (v, x);
        }
    }
    assert!((best.0 - 3f64.sqrt()).abs() < 1e-9);
    assert!((best.1 - 1.0 / 3f64.sqrt()).abs() < 1e-4);
}

#[test]
fn derivative_matches_central_differences() {
    let h = 1e-6;
    for k in log_grid(1e-2, 1e2, 25) {
        for j in 1..40 {
            let x = 0.02 + (FRAC_PI_2 - 0.04) * j as f64 / 40.0;
            let analytic = lemma2_gprime(k, x).unwrap();
            let fd = (lemma2_g(k, x + h).unwrap() - lemma2_g(k, x - h).unwrap()) / (2.0 * h);
            assert!((analytic - fd).abs() <= 1e-5 * (1.0 + fd.abs()), "k={k} x={x}: {analytic} vs {fd}");
        }
    }
}

#[test]
fn derivative_changes_sign_only_at_theta_k() {
    for k in log_grid(1e-2, 1e2, 15) {
        let t = theta_k(k).unwrap();
        for i in 1..1000 {
            let x = FRAC_PI_2 * i as f64 / 1000.0;
            if (x - t).abs() < 1e-9 {
                continue;
            }
            let d = lemma2_gprime(k, x).unwrap();
            if x < t {
                assert!(d < 0.0, "k={k} x={x} d={d}");
            } else {
                assert!(d > 0.0, "k={k} x={x} d={d}");
            }
        }
    }
}

#[test]
fn g_agrees_with_two_angle_cot_sum() {
    for k in log_grid(1e-2, 1e2, 30) {
        for j in 1..30 {
            let x = FRAC_PI_2 * j as f64 / 30.0;
            let g = lemma2_g(k, x).unwrap();
            assert!((g - cot_sum_from_bg(x, arccot(k))).abs() <= 1e-10 * g);
        }
    }
}

#[test]
fn right_triangle_sum_is_two_over_sine() {
    let r = right_triangle_min();
    assert_eq!(r.ratio, 4.0);
    assert_eq!(r.ang_b, FRAC_PI_4);
    for i in 1..10_000 {
        let b = FRAC_PI_2 * i as f64 / 10_000.0;
        let direct = cot_sum(FRAC_PI_2, b, FRAC_PI_2 - b).unwrap();
        let reduced = right_cot_sum(b);
        assert!((direct - reduced).abs() <= 1e-10 * (1.0 + reduced));
        assert!(reduced >= 2.0 - 1e-15);
        if (b - FRAC_PI_4).abs() > 1e-6 {
            assert!(reduced > 2.0);
        }
    }
}
