//! Connective-data suite: the defining coboundary relation of each curving,
//! the long/reduced splits, the stable-isomorphism curving identity, and a
//! finite-difference cross-check of the assembled exterior derivative.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

use crate::cover::ZPoint;
use crate::error::Result;
use crate::forms::{diagonal_trace_form, ProductTangent};
use crate::gerbe::{
    basic_curvature, basic_curving_long, basic_curving_reduced, basic_three_curvature_long,
    basic_three_curvature_reduced, beta_form, dbeta_form, trivializing_curvature, weyl_curvature,
    weyl_curving, weyl_three_curvature,
};
use crate::linalg::{
    exp_matrix, CMatrix, FlagTangent, ProjectionFrame, SpecialUnitary, TorusPoint, TorusTangent,
};
use crate::report::Check;
use crate::sample;
use crate::suites::SuiteConfig;
use crate::tol::{FD_STEP, TOL_FINITE_DIFF, TOL_THREE_CURVATURE};

const SAMPLES: usize = 100;

pub(crate) fn checks(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut out = Vec::new();

    // delta(curving) = curvature on the coordinate-lift cover.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_lift(n, rng);
            let y = sample::integer_offset_lift(&x, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let delta = weyl_curving(&y, &frame, &xt, &yt)? - weyl_curving(&x, &frame, &xt, &yt)?;
            let curv = weyl_curvature(&x, &y, &frame, &xt, &yt)?;
            worst = worst.max((delta - curv).norm());
        }
        out.push(Check::residual(
            "curving-coboundary",
            "delta(f_c) = F on the coordinate-lift cover",
            worst,
            cfg.tol,
        ));
    }

    // long pulled-back curving = reduced curving + beta.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let (t, frame, z) = random_cut_slice(n, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let long = basic_curving_long(&z, &t, &frame, &xt, &yt)?;
            let reduced = basic_curving_reduced(&z, &t, &frame, &xt, &yt)?;
            let beta = beta_form(&t, &frame, &xt, &yt)?;
            worst = worst.max((long - reduced - beta).norm());
        }
        out.push(Check::residual(
            "curving-long-reduced-split",
            "long pulled-back curving = reduced curving + beta",
            worst,
            cfg.tol,
        ));
    }

    // the two curvings differ by trivializing curvature plus beta.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let x = sample::random_lift(n, rng);
            let t = x.project();
            let frame = sample::random_frame(n, rng);
            let z = sample::random_cut_off_spectrum(&t, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let lhs =
                basic_curving_long(&z, &t, &frame, &xt, &yt)? - weyl_curving(&x, &frame, &xt, &yt)?;
            let rhs = trivializing_curvature(&x, &z, &t, &frame, &xt, &yt)?
                + beta_form(&t, &frame, &xt, &yt)?;
            worst = worst.max((lhs - rhs).norm());
        }
        out.push(Check::residual(
            "stable-isomorphism-curving",
            "pulled-back curving - cup-product curving = trivializing curvature + beta",
            worst,
            cfg.tol,
        ));
    }

    // delta of the reduced curving is the crossing-sign weighted curvature.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let (t, frame, z1) = random_cut_slice(n, rng);
            let z2 = sample::random_cut_off_spectrum(&t, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let delta = basic_curving_reduced(&z2, &t, &frame, &xt, &yt)?
                - basic_curving_reduced(&z1, &t, &frame, &xt, &yt)?;
            let curv = basic_curvature(&z1, &z2, &t, &frame, &xt, &yt)?;
            worst = worst.max((delta - curv).norm());
        }
        out.push(Check::residual(
            "epsilon-weighted-curvature",
            "delta(reduced curving) = sum_i eps_i tr(P_i dP_i dP_i)",
            worst,
            cfg.tol,
        ));
    }

    // long three-curvature = reduced three-curvature + d(beta), analytic.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let t = sample::random_lift(n, rng).project();
            let frame = sample::random_frame(n, rng);
            let u = sample::random_mixed_tangent(n, rng);
            let v = sample::random_mixed_tangent(n, rng);
            let w = sample::random_mixed_tangent(n, rng);
            let long = basic_three_curvature_long(&t, &frame, &u, &v, &w)?;
            let reduced = basic_three_curvature_reduced(&frame, &u, &v, &w)?;
            let db = dbeta_form(&t, &frame, &u, &v, &w)?;
            worst = worst.max((long - reduced - db).norm());
        }
        out.push(Check::residual(
            "three-curvature-long-reduced-split",
            "long three-curvature = reduced three-curvature + d(beta)",
            worst,
            cfg.tol.max(TOL_THREE_CURVATURE),
        ));
    }

    // three-curvature on mixed torus/flag tangents expands explicitly.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let a = sample::random_torus_tangent(n, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let got = weyl_three_curvature(
                &frame,
                &ProductTangent::from_torus(a.clone()),
                &ProductTangent::from_flag(xt.clone()),
                &ProductTangent::from_flag(yt.clone()),
            )?;
            let mut want = Complex64::ZERO;
            for i in 0..n {
                want -=
                    diagonal_trace_form(&frame, i, &xt, &yt)? * Complex64::new(a.component(i), 0.0);
            }
            worst = worst.max((got - want).norm());
        }
        out.push(Check::residual(
            "three-curvature-mixed-expansion",
            "three-curvature on (a; X, Y) equals -sum_i a_i tr(P_i dP_i dP_i)(X, Y)",
            worst,
            cfg.tol,
        ));
    }

    // finite-difference cross-check of the analytic d(beta).
    {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let t = sample::random_lift(n, rng).project();
            let frame = sample::random_frame(n, rng);
            let u = tangent_without_lift_leg(n, rng);
            let v = tangent_without_lift_leg(n, rng);
            let w = tangent_without_lift_leg(n, rng);
            let analytic = dbeta_form(&t, &frame, &u, &v, &w)?;
            let fd = dbeta_finite_difference(&t, &frame, &u, &v, &w)?;
            worst = worst.max((analytic - fd).norm());
        }
        out.push(Check::residual(
            "dbeta-finite-difference",
            "assembled d(beta) matches central differences of beta along coordinate curves",
            worst,
            cfg.tol.max(TOL_FINITE_DIFF),
        ));
    }

    // connective data is invariant under simultaneous conjugation.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let x = sample::random_lift(n, rng);
            let t = x.project();
            let g = sample::random_special_unitary(n, rng);
            let h = sample::random_special_unitary(n, rng);
            let frame = ProjectionFrame::new(g.clone());
            let moved = ProjectionFrame::new(SpecialUnitary::new(h.matrix() * g.matrix())?);
            let z = sample::random_cut_off_spectrum(&t, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let pairs = [
                (
                    basic_curving_long(&z, &t, &frame, &xt, &yt)?,
                    basic_curving_long(&z, &t, &moved, &xt, &yt)?,
                ),
                (
                    weyl_curving(&x, &frame, &xt, &yt)?,
                    weyl_curving(&x, &moved, &xt, &yt)?,
                ),
            ];
            for (a, b) in pairs {
                worst = worst.max((a - b).norm());
            }
            let u = sample::random_mixed_tangent(n, rng);
            let v = sample::random_mixed_tangent(n, rng);
            let m = sample::random_mixed_tangent(n, rng);
            let a = basic_three_curvature_long(&t, &frame, &u, &v, &m)?;
            let b = basic_three_curvature_long(&t, &moved, &u, &v, &m)?;
            worst = worst.max((a - b).norm());
        }
        out.push(Check::residual(
            "connective-conjugation-invariance",
            "curvings and three-curvatures unchanged under left translation of the frame",
            worst,
            cfg.tol,
        ));
    }

    Ok(out)
}

fn random_cut_slice(n: usize, rng: &mut ChaCha8Rng) -> (TorusPoint, ProjectionFrame, ZPoint) {
    let t = sample::random_lift(n, rng).project();
    let frame = sample::random_frame(n, rng);
    let z = sample::random_cut_off_spectrum(&t, rng);
    (t, frame, z)
}

/// Mixed tangent with no lift-direction leg: the finite-difference chart
/// below moves the base along torus and flag directions only.
fn tangent_without_lift_leg(n: usize, rng: &mut ChaCha8Rng) -> ProductTangent {
    ProductTangent::new(
        sample::random_torus_tangent(n, rng),
        sample::random_flag_tangent(n, rng),
        vec![0.0; n],
        0.0,
    )
    .expect("valid components")
}

/// Base point shifted along a tangent: the torus factor rotates by the
/// angular rates, the frame witness moves along the flag exponential.
fn shifted_point(
    t: &TorusPoint,
    frame: &ProjectionFrame,
    dir: &ProductTangent,
    s: f64,
) -> Result<(TorusPoint, ProjectionFrame)> {
    let n = t.dim();
    let diag: Vec<Complex64> = (0..n)
        .map(|k| {
            t.entry(k) * Complex64::from_polar(1.0, std::f64::consts::TAU * s * dir.angular_rate(k))
        })
        .collect();
    let t_s = TorusPoint::new(diag)?;
    let step = exp_matrix(&(dir.flag().matrix() * Complex64::new(s, 0.0)));
    let witness = SpecialUnitary::new(frame.witness().matrix() * step)?;
    Ok((t_s, ProjectionFrame::new(witness)))
}

/// Flag part of a tangent conjugated by exp(-s Y), gauge-fixed back to a
/// horizontal representative; the torus part rides along unchanged.
fn conjugated_tangent(dir: &ProductTangent, along: &FlagTangent, s: f64) -> Result<ProductTangent> {
    let e_minus = exp_matrix(&(along.matrix() * Complex64::new(-s, 0.0)));
    let e_plus = exp_matrix(&(along.matrix() * Complex64::new(s, 0.0)));
    let rotated: CMatrix = &e_minus * dir.flag().matrix() * &e_plus;
    let flag = FlagTangent::horizontal(&rotated)?;
    ProductTangent::new(
        TorusTangent::new(dir.torus().components().to_vec())?,
        flag,
        vec![0.0; dir.dim()],
        0.0,
    )
}

/// Central-difference exterior derivative of beta in an ordered-exponential
/// chart: along each coordinate curve the pushforwards of the other two
/// chart fields are exact (the last factor's field is constant, earlier
/// ones conjugate by the traversed exponential), so the flat coordinate
/// formula for d applies.
fn dbeta_finite_difference(
    t: &TorusPoint,
    frame: &ProjectionFrame,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    let h = FD_STEP;
    let eval = |t_s: &TorusPoint,
                f_s: &ProjectionFrame,
                a: &ProductTangent,
                b: &ProductTangent|
     -> Result<Complex64> { beta_form(t_s, f_s, a.flag(), b.flag()) };

    // d/ds beta(phi(s, 0, 0); d/dr, d/dq): both fields come from later
    // factors of the ordered product, so their pushforwards stay constant
    let term_u = {
        let (tp, fp) = shifted_point(t, frame, u, h)?;
        let (tm, fm) = shifted_point(t, frame, u, -h)?;
        (eval(&tp, &fp, v, w)? - eval(&tm, &fm, v, w)?) / Complex64::new(2.0 * h, 0.0)
    };
    // d/dr beta(phi(0, r, 0); d/ds, d/dq): the earlier s-field conjugates
    // back through exp(-r Y), the later q-field stays constant
    let term_v = {
        let (tp, fp) = shifted_point(t, frame, v, h)?;
        let (tm, fm) = shifted_point(t, frame, v, -h)?;
        let up = conjugated_tangent(u, v.flag(), h)?;
        let um = conjugated_tangent(u, v.flag(), -h)?;
        (eval(&tp, &fp, &up, w)? - eval(&tm, &fm, &um, w)?) / Complex64::new(2.0 * h, 0.0)
    };
    // d/dq beta(phi(0, 0, q); d/ds, d/dr)
    let term_w = {
        let (tp, fp) = shifted_point(t, frame, w, h)?;
        let (tm, fm) = shifted_point(t, frame, w, -h)?;
        let up = conjugated_tangent(u, w.flag(), h)?;
        let um = conjugated_tangent(u, w.flag(), -h)?;
        let vp = conjugated_tangent(v, w.flag(), h)?;
        let vm = conjugated_tangent(v, w.flag(), -h)?;
        (eval(&tp, &fp, &up, &vp)? - eval(&tm, &fm, &um, &vm)?) / Complex64::new(2.0 * h, 0.0)
    };

    Ok(term_u - term_v + term_w)
}
