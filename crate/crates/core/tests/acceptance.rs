//! Acceptance suite: every release criterion as one test, each printing a
//! pass/fail line with the measured numbers. Tolerances are pinned here
//! and must not be loosened to make a run green.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

use weylgerbe::{
    basic_three_form, chern_number, holonomy_ratio, integrate_beta_sigma, run_suite, sample,
    spectrum, spectrum_distance, weyl_map, CMatrix, QuadratureMesh, Suite, SuiteConfig,
};

fn conclude(criterion: &str, ok: bool, detail: &str) {
    println!(
        "{criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{criterion} failed: {detail}");
}

#[test]
fn criterion_1_chern_calibration() {
    let start = Instant::now();
    let mesh = QuadratureMesh::product_gauss(32, 2).unwrap();
    let c = chern_number(0, 2, &mesh).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let residual = (c - Complex64::new(-1.0, 0.0)).norm();
    conclude(
        "criterion-1 chern-calibration",
        residual < 1e-6 && elapsed < 5.0,
        &format!("(i/2pi) integral = {c}, residual {residual:.3e}, {elapsed:.2}s"),
    );
}

#[test]
fn criterion_2_holonomy_obstruction() {
    let mut integrals = Vec::new();
    for n in [2usize, 3, 4] {
        let mesh = QuadratureMesh::product_gauss(32, n).unwrap();
        let beta = integrate_beta_sigma(n, &mesh).unwrap();
        let ratio = holonomy_ratio(n, &mesh).unwrap();
        let gap = (ratio - Complex64::new(1.0, 0.0)).norm();
        assert!(
            beta.re.abs() < 1e-6,
            "beta integral at n = {n} is not purely imaginary: {beta}"
        );
        assert!(
            gap > 0.1,
            "holonomy ratio at n = {n} too close to 1: {ratio}"
        );
        integrals.push(beta);
    }
    let mut spread: f64 = 0.0;
    for a in &integrals {
        for b in &integrals {
            spread = spread.max((a - b).norm());
        }
    }
    // the measured value, together with the closed-form candidates that
    // circulate for this integral under other sign and normalisation
    // conventions; only the off-lattice inequality is asserted
    println!(
        "criterion-2 values: measured {}, chern-consistent closed form {}, \
         alternative candidates {} and {}",
        integrals[0],
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(0.0, -1.0 / PI),
    );
    conclude(
        "criterion-2 holonomy-obstruction",
        spread < 1e-6,
        &format!(
            "exp(integral) != 1 for n = 2, 3, 4; integrals agree to {spread:.3e}; \
             measured integral {}",
            integrals[0]
        ),
    );
}

#[test]
fn criterion_3_trace_form_lemmas() {
    let start = Instant::now();
    let mut all_ok = true;
    for n in [2usize, 3, 4] {
        let cfg = SuiteConfig {
            n,
            seed: 42,
            tol: 1e-9,
            mesh_order: 8,
        };
        let report = run_suite(Suite::AppendixLemmas, &cfg).unwrap();
        if !report.all_passed() {
            all_ok = false;
            eprintln!("{}", report.render_table());
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    conclude(
        "criterion-3 trace-form-lemmas",
        all_ok && elapsed < 10.0,
        &format!("100 samples per identity, n = 2, 3, 4, residual < 1e-9, {elapsed:.2}s"),
    );
}

#[test]
fn criterion_4_cocycles() {
    let mut all_ok = true;
    for n in [2usize, 3, 4] {
        let cfg = SuiteConfig {
            n,
            seed: 7,
            tol: 1e-9,
            mesh_order: 8,
        };
        let report = run_suite(Suite::Cocycles, &cfg).unwrap();
        // the integer identities must be exact: their recorded tolerance
        // is 0 and their status must be pass
        for id in [
            "offset-coboundary",
            "crossing-coboundary",
            "winding-coboundary",
            "delta-squared-integer",
        ] {
            let check = report.checks.iter().find(|c| c.id == id).unwrap();
            if check.tolerance != 0.0 || check.value[0] != 0.0 {
                all_ok = false;
            }
        }
        if !report.all_passed() {
            all_ok = false;
            eprintln!("{}", report.render_table());
        }
    }
    conclude(
        "criterion-4 cocycles",
        all_ok,
        "delta(d) = 0, delta(eps) = 0, windings integer, delta(h) = eps - d, all exact, n = 2, 3, 4",
    );
}

#[test]
fn criterion_5_connective_data() {
    let mut all_ok = true;
    for n in [2usize, 3] {
        let cfg = SuiteConfig {
            n,
            seed: 11,
            tol: 1e-9,
            mesh_order: 8,
        };
        let report = run_suite(Suite::ConnectiveData, &cfg).unwrap();
        if !report.all_passed() {
            all_ok = false;
            eprintln!("{}", report.render_table());
        }
        // the three-curvature split is held to its pinned floor
        let split = report
            .checks
            .iter()
            .find(|c| c.id == "three-curvature-long-reduced-split")
            .unwrap();
        if split.tolerance > 1e-8 {
            all_ok = false;
        }
    }
    conclude(
        "criterion-5 connective-data",
        all_ok,
        "coboundary, long/reduced splits and the stable-isomorphism identity at 100 samples, n = 2, 3",
    );
}

#[test]
fn criterion_6_root_space() {
    let mut all_ok = true;
    for n in [3usize, 4] {
        let cfg = SuiteConfig {
            n,
            seed: 3,
            tol: 1e-10,
            mesh_order: 8,
        };
        let report = run_suite(Suite::RootSpace, &cfg).unwrap();
        if !report.all_passed() {
            all_ok = false;
            eprintln!("{}", report.render_table());
        }
        for id in ["forced-vanishing-span", "forced-vanishing-nonzero-diagonal"] {
            let check = report.checks.iter().find(|c| c.id == id).unwrap();
            if check.status == weylgerbe::CheckStatus::Skip {
                all_ok = false;
            }
        }
    }
    conclude(
        "criterion-6 root-space",
        all_ok,
        "root evaluations at 1e-10 and the forced-vanishing argument for n = 3, 4",
    );
}

#[test]
fn criterion_7_group_three_form_on_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let n = 3;
        let mk = |rng: &mut ChaCha8Rng| {
            let v = sample::random_sum_zero(n, rng);
            CMatrix::from_fn(n, n, |r, c| {
                if r == c {
                    Complex64::new(0.0, v[r])
                } else {
                    Complex64::ZERO
                }
            })
        };
        let (x, y, z) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
        worst = worst.max(basic_three_form(&x, &y, &z).unwrap().norm());
    }
    conclude(
        "criterion-7 group-three-form-restriction",
        worst < 1e-12,
        &format!("50 diagonal triples, worst residual {worst:.3e}"),
    );
}

#[test]
fn criterion_8_weyl_map_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut worst: f64 = 0.0;
    for n in 2..=6usize {
        for _ in 0..20 {
            let t = sample::random_lift(n, &mut rng).project();
            let frame = sample::random_frame(n, &mut rng);
            let u = weyl_map(&t, &frame).unwrap();
            let spec = spectrum(&u).unwrap();
            let mut expected = t.entries().to_vec();
            expected.sort_by(|a, b| {
                weylgerbe::principal_angle(*a).total_cmp(&weylgerbe::principal_angle(*b))
            });
            worst = worst.max(spectrum_distance(&spec, &expected));
        }
    }
    conclude(
        "criterion-8 weyl-map-spectrum",
        worst < 1e-10,
        &format!("100 samples over n = 2..6, worst spectrum distance {worst:.3e}"),
    );
}
