//! Integer cocycle suite: coboundaries of the lift offsets, the crossing
//! signs and the branch windings, their exact relations, and the spectrum
//! property of the Weyl map.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

use crate::cech::{BaseTag, Cochain, FiberTuple, Lift};
use crate::cover::{branch_log, branch_winding, crossing_sign, lift_offset, weyl_map};
use crate::error::Result;
use crate::linalg::spectrum_distance;
use crate::report::Check;
use crate::sample;
use crate::suites::SuiteConfig;

const TUPLES: usize = 200;

pub(crate) fn checks(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut out = Vec::new();

    // delta of the lift offsets vanishes on triples, exactly.
    {
        let mut worst: i64 = 0;
        for _ in 0..TUPLES {
            let x = sample::random_lift(n, rng);
            let lifts: Vec<crate::cover::XtLift> = (0..3)
                .map(|_| sample::integer_offset_lift(&x, rng))
                .collect();
            for i in 0..n {
                let d12 = lift_offset(&lifts[1], &lifts[2], i)?;
                let d02 = lift_offset(&lifts[0], &lifts[2], i)?;
                let d01 = lift_offset(&lifts[0], &lifts[1], i)?;
                worst = worst.max((d12 - d02 + d01).abs());
            }
        }
        out.push(Check::residual(
            "offset-coboundary",
            "delta(d_i) = 0 on lift triples (integer identity)",
            worst as f64,
            0.0,
        ));
    }

    // offsets are antisymmetric and additive, exactly.
    {
        let mut worst: i64 = 0;
        for _ in 0..TUPLES {
            let x = sample::random_lift(n, rng);
            let y = sample::integer_offset_lift(&x, rng);
            let w = sample::integer_offset_lift(&x, rng);
            for i in 0..n {
                let a = lift_offset(&x, &y, i)?;
                let b = lift_offset(&y, &x, i)?;
                worst = worst.max((a + b).abs());
                let chain =
                    lift_offset(&x, &y, i)? + lift_offset(&y, &w, i)? - lift_offset(&x, &w, i)?;
                worst = worst.max(chain.abs());
            }
        }
        out.push(Check::residual(
            "offset-antisymmetry-additivity",
            "d_i(x, y) = -d_i(y, x) and d_i(x, y) + d_i(y, w) = d_i(x, w)",
            worst as f64,
            0.0,
        ));
    }

    // delta of the crossing signs vanishes on cut triples, exactly.
    {
        let mut worst: i64 = 0;
        for _ in 0..TUPLES {
            let t = sample::random_lift(n, rng).project();
            let z: Vec<_> = (0..3)
                .map(|_| sample::random_cut_off_spectrum(&t, rng))
                .collect();
            for i in 0..n {
                let d = crossing_sign(&z[1], &z[2], &t, i)? - crossing_sign(&z[0], &z[2], &t, i)?
                    + crossing_sign(&z[0], &z[1], &t, i)?;
                worst = worst.max(d.abs());
            }
        }
        out.push(Check::residual(
            "crossing-coboundary",
            "delta(eps_i) = 0 on cut-point triples (integer identity)",
            worst as f64,
            0.0,
        ));
    }

    // the crossing sign is the branch-log difference over 2 pi i.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..TUPLES {
            let t = sample::random_lift(n, rng).project();
            let z1 = sample::random_cut_off_spectrum(&t, rng);
            let z2 = sample::random_cut_off_spectrum(&t, rng);
            for i in 0..n {
                let eps = crossing_sign(&z1, &z2, &t, i)? as f64;
                let diff = (branch_log(&z1, t.entry(i))? - branch_log(&z2, t.entry(i))?)
                    / Complex64::new(0.0, TAU);
                worst = worst.max((diff - Complex64::new(eps, 0.0)).norm());
            }
        }
        out.push(Check::residual(
            "crossing-log-identity",
            "eps_i(z, w, t) = (log_z p_i(t) - log_w p_i(t)) / (2 pi i)",
            worst,
            cfg.tol,
        ));
    }

    // branch windings are integers on fibre points.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..TUPLES {
            let x = sample::random_lift(n, rng);
            let t = x.project();
            let z = sample::random_cut_off_spectrum(&t, rng);
            for i in 0..n {
                let log = branch_log(&z, t.entry(i))?;
                let raw = x.coordinate(i) - log.im / TAU;
                worst = worst.max((raw - raw.round()).abs());
                // the rounding op agrees with the raw value
                let h = branch_winding(&x, &z, &t, i)?;
                worst = worst.max((raw - h as f64).abs());
            }
        }
        out.push(Check::residual(
            "winding-integrality",
            "x_i - log_z(p_i(t))/(2 pi i) is an integer on fibre points",
            worst,
            crate::tol::TOL_ALG,
        ));
    }

    // delta of the windings equals crossing sign minus offset, exactly.
    {
        let mut worst: i64 = 0;
        for _ in 0..TUPLES {
            let x = sample::random_lift(n, rng);
            let t = x.project();
            let y = sample::integer_offset_lift(&x, rng);
            let z = sample::random_cut_off_spectrum(&t, rng);
            let w = sample::random_cut_off_spectrum(&t, rng);
            for i in 0..n {
                let lhs = branch_winding(&y, &w, &t, i)? - branch_winding(&x, &z, &t, i)?;
                let rhs = crossing_sign(&z, &w, &t, i)? - lift_offset(&x, &y, i)?;
                worst = worst.max((lhs - rhs).abs());
            }
        }
        out.push(Check::residual(
            "winding-coboundary",
            "delta(h_i) = eps_i - d_i on fibre-product pairs (integer identity)",
            worst as f64,
            0.0,
        ));
    }

    // delta^2 = 0 for the winding cochain, exactly.
    {
        let mut worst: i64 = 0;
        for _ in 0..TUPLES {
            let x0 = sample::random_lift(n, rng);
            let t = x0.project();
            let lifts: Vec<Lift> = (0..3)
                .map(|_| {
                    Lift::XZ(
                        sample::integer_offset_lift(&x0, rng),
                        sample::random_cut_off_spectrum(&t, rng),
                    )
                })
                .collect();
            let tuple = FiberTuple::new(BaseTag::Torus(t.clone()), lifts)?;
            for i in 0..n {
                let h = Cochain::new(1, move |tp: &FiberTuple| {
                    branch_winding(
                        tp.lift(0).x().expect("fibre-product lift"),
                        tp.lift(0).z().expect("fibre-product lift"),
                        tp.base().torus(),
                        i,
                    )
                });
                worst = worst.max(crate::cech::delta_squared(&h, &tuple)?.abs());
            }
        }
        out.push(Check::residual(
            "delta-squared-integer",
            "delta(delta(h_i)) = 0 (integer identity)",
            worst as f64,
            0.0,
        ));
    }

    // delta^2 is numerically zero for an evaluated curving cochain.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..TUPLES {
            let frame = sample::random_frame(n, rng);
            let xt = sample::random_flag_tangent(n, rng);
            let yt = sample::random_flag_tangent(n, rng);
            let f = {
                let frame = frame.clone();
                Cochain::new(1, move |tp: &FiberTuple| {
                    crate::gerbe::weyl_curving(
                        tp.lift(0).x().expect("coordinate lift"),
                        &frame,
                        &xt,
                        &yt,
                    )
                })
            };
            let x = sample::random_lift(n, rng);
            let lifts: Vec<Lift> = (0..3)
                .map(|_| Lift::X(sample::integer_offset_lift(&x, rng)))
                .collect();
            let tuple = FiberTuple::new(BaseTag::Torus(x.project()), lifts)?;
            worst = worst.max(crate::cech::delta_squared(&f, &tuple)?.norm());
        }
        out.push(Check::residual(
            "delta-squared-form",
            "delta(delta(curving)) = 0 for the evaluated curving cochain",
            worst,
            cfg.tol.max(1e-10),
        ));
    }

    // branch log normalisation and window.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..TUPLES {
            let t = sample::random_lift(n, rng).project();
            let z = sample::random_cut_off_spectrum(&t, rng);
            worst = worst.max(branch_log(&z, Complex64::new(1.0, 0.0))?.norm());
            for i in 0..n {
                let log = branch_log(&z, t.entry(i))?;
                worst = worst.max((log.exp() - t.entry(i)).norm());
                let theta = log.im;
                if !(theta > z.angle() - TAU && theta < z.angle()) {
                    worst = worst.max(1.0);
                }
            }
        }
        out.push(Check::residual(
            "branch-log-normalization",
            "log_z(1) = 0, exp(log_z(w)) = w, angle in (angle(z) - 2 pi, angle(z))",
            worst,
            cfg.tol,
        ));
    }

    // the Weyl map reproduces the torus spectrum.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let t = sample::random_lift(n, rng).project();
            let frame = sample::random_frame(n, rng);
            let u = weyl_map(&t, &frame)?;
            let spec = crate::linalg::spectrum(&u)?;
            let mut sorted = t.entries().to_vec();
            sorted.sort_by(|a, b| {
                crate::linalg::principal_angle(*a).total_cmp(&crate::linalg::principal_angle(*b))
            });
            worst = worst.max(spectrum_distance(&spec, &sorted));
        }
        out.push(Check::residual(
            "weyl-map-spectrum",
            "spectrum(sum_i p_i(t) P_i) equals the multiset of torus entries",
            worst,
            cfg.tol.max(crate::tol::TOL_SPECTRUM),
        ));
    }

    Ok(out)
}
