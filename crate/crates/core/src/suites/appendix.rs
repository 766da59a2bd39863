//! Trace-form lemma suite: the pairwise identities between the forms
//! tr(P_i dP_j dP_k), the decompositions of beta into the off-diagonal
//! basis, and the diagonal restriction of the group three-form.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::Result;
use crate::forms::{basic_three_form, diagonal_trace_form, trace_two_form};
use crate::gerbe::beta_form;
use crate::linalg::{CMatrix, ProjectionFrame, SpecialUnitary, TorusPoint};
use crate::report::Check;
use crate::sample;
use crate::suites::SuiteConfig;

const SAMPLES: usize = 100;

pub(crate) fn checks(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut out = Vec::new();

    // Lemma suite part 1: distinct indices annihilate the 2-form.
    if n >= 3 {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i != j && j != k && i != k {
                            worst = worst.max(trace_two_form(&frame, i, j, k, &x, &y)?.norm());
                        }
                    }
                }
            }
        }
        out.push(Check::residual(
            "trace-form-distinct-vanishing",
            "tr(P_i dP_j dP_k) = 0 for distinct i, j, k",
            worst,
            cfg.tol,
        ));
    } else {
        out.push(Check::skip(
            "trace-form-distinct-vanishing",
            "tr(P_i dP_j dP_k) = 0 for distinct i, j, k (needs n >= 3)",
            [0.0, 0.0],
        ));
    }

    // part 2: swap antisymmetry.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let a = trace_two_form(&frame, i, j, j, &x, &y)?;
                        let b = trace_two_form(&frame, j, i, i, &x, &y)?;
                        worst = worst.max((a + b).norm());
                    }
                }
            }
        }
        out.push(Check::residual(
            "trace-form-swap-antisymmetry",
            "tr(P_i dP_j dP_j) = -tr(P_j dP_i dP_i) for i != j",
            worst,
            cfg.tol,
        ));
    }

    // part 3: the diagonal forms sum to zero.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let mut sum = Complex64::ZERO;
            for k in 0..n {
                sum += diagonal_trace_form(&frame, k, &x, &y)?;
            }
            worst = worst.max(sum.norm());
        }
        out.push(Check::residual(
            "trace-form-diagonal-sum",
            "sum_k tr(P_k dP_k dP_k) = 0",
            worst,
            cfg.tol,
        ));
    }

    // part 4: weighted sums reduce against the last index.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let alpha: Vec<f64> = (0..n).map(|_| 4.0 * rng.random::<f64>() - 2.0).collect();
            let mut lhs = Complex64::ZERO;
            let mut rhs = Complex64::ZERO;
            for i in 0..n {
                let tau = diagonal_trace_form(&frame, i, &x, &y)?;
                lhs += tau * Complex64::new(alpha[i], 0.0);
                if i + 1 < n {
                    rhs += tau * Complex64::new(alpha[i] - alpha[n - 1], 0.0);
                }
            }
            worst = worst.max((lhs - rhs).norm());
        }
        out.push(Check::residual(
            "trace-form-weighted-reduction",
            "sum_i a_i tr(P_i dP_i dP_i) = sum_{i<n} (a_i - a_n) tr(P_i dP_i dP_i)",
            worst,
            cfg.tol,
        ));
    }

    // diagonal 3-form vanishes for rank-1 projections.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let z = sample::random_flag_tangent(n, rng);
            for i in 0..n {
                worst =
                    worst.max(crate::forms::trace_three_form(&frame, i, i, i, &x, &y, &z)?.norm());
            }
        }
        out.push(Check::residual(
            "three-form-diagonal-vanishing",
            "tr(dP_i dP_i dP_i) = 0 for rank-1 projections",
            worst,
            cfg.tol,
        ));
    }

    // beta decomposition over pairs i < j.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let t = sample::random_lift(n, rng).project();
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let beta = beta_form(&t, &frame, &x, &y)?;
            let mut decomposed = Complex64::ZERO;
            for i in 0..n {
                for j in (i + 1)..n {
                    let coeff = pair_coefficient(&t, i, j);
                    decomposed +=
                        coeff * trace_two_form(&frame, j, i, i, &x, &y)? * minus_i_over_4pi();
                }
            }
            worst = worst.max((beta - decomposed).norm());
        }
        out.push(Check::residual(
            "beta-pair-decomposition",
            "beta = -(i/(4 pi)) sum_{i<j} (p_j/p_i - p_i/p_j) tr(P_j dP_i dP_i)",
            worst,
            cfg.tol,
        ));
    }

    // beta decomposition with the last index eliminated (needs n > 2).
    if n > 2 {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let t = sample::random_lift(n, rng).project();
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let beta = beta_form(&t, &frame, &x, &y)?;
            let mut decomposed = Complex64::ZERO;
            for i in 0..n - 1 {
                for j in (i + 1)..n - 1 {
                    let combo = pair_coefficient(&t, i, j) - pair_coefficient(&t, i, n - 1)
                        + pair_coefficient(&t, j, n - 1);
                    decomposed +=
                        combo * trace_two_form(&frame, j, i, i, &x, &y)? * minus_i_over_4pi();
                }
                decomposed -= pair_coefficient(&t, i, n - 1)
                    * diagonal_trace_form(&frame, i, &x, &y)?
                    * minus_i_over_4pi();
            }
            worst = worst.max((beta - decomposed).norm());
        }
        out.push(Check::residual(
            "beta-reduced-decomposition",
            "beta = sum_{i<j<n} (b_ij - b_in + b_jn) tr(P_j dP_i dP_i) - sum_{i<n} b_in tr(P_i dP_i dP_i)",
            worst,
            cfg.tol,
        ));
    } else {
        out.push(Check::skip(
            "beta-reduced-decomposition",
            "last-index elimination of beta (needs n > 2)",
            [0.0, 0.0],
        ));
    }

    // explicit coefficient at the block torus point with t = e^{i pi/4}.
    if n > 2 {
        let t = block_torus_point(n);
        let unit = Complex64::from_polar(1.0, FRAC_PI_4);
        let expected =
            Complex64::new(2.0, 0.0) * (unit - unit.inv()) + unit.powi(-2) - unit.powi(2);
        let mut worst: f64 = 0.0;
        for i in 0..n - 1 {
            for j in (i + 1)..n - 1 {
                let combo = pair_coefficient(&t, i, j) - pair_coefficient(&t, i, n - 1)
                    + pair_coefficient(&t, j, n - 1);
                let want = if (i, j) == (0, 1) {
                    expected
                } else {
                    Complex64::ZERO
                };
                worst = worst.max((combo - want).norm());
            }
        }
        out.push(Check::value_with_residual(
            "beta-block-coefficient",
            "at diag(t, 1/t, 1, ..) with t = e^{i pi/4} the only surviving combination is 2t - 2/t + t^{-2} - t^2",
            [expected.re, expected.im],
            worst,
            cfg.tol,
        ));

        // the surviving off-diagonal summation is a nonzero form: evaluate
        // it at root-space tangents where tr(P_1 dP_0 dP_0) = 2i
        let frame = sample::random_frame(n, rng);
        let a = crate::linalg::root_vector(n, 0, 1, Complex64::new(1.0, 0.0))?;
        let b = crate::linalg::root_vector(n, 0, 1, Complex64::new(0.0, 1.0))?;
        let mut value = Complex64::ZERO;
        for i in 0..n - 1 {
            for j in (i + 1)..n - 1 {
                let combo = pair_coefficient(&t, i, j) - pair_coefficient(&t, i, n - 1)
                    + pair_coefficient(&t, j, n - 1);
                value += combo * trace_two_form(&frame, j, i, i, &a, &b)?;
            }
        }
        out.push(Check::lower_bound(
            "beta-offdiagonal-nonzero",
            "the off-diagonal part of the beta decomposition does not vanish identically",
            value.norm(),
            0.5,
        ));
    } else {
        out.push(Check::skip(
            "beta-block-coefficient",
            "block coefficient witness (needs n > 2)",
            [0.0, 0.0],
        ));
        out.push(Check::skip(
            "beta-offdiagonal-nonzero",
            "off-diagonal witness (needs n > 2)",
            [0.0, 0.0],
        ));
    }

    // group three-form restricted to diagonal tangents.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let x = diagonal_tangent(n, rng);
            let y = diagonal_tangent(n, rng);
            let z = diagonal_tangent(n, rng);
            worst = worst.max(basic_three_form(&x, &y, &z)?.norm());
        }
        out.push(Check::residual(
            "group-three-form-diagonal-restriction",
            "-(1/(24 pi^2)) tr((g^{-1} dg)^3) vanishes on diagonal tangent triples",
            worst,
            crate::tol::TOL_EXACT_CANCEL,
        ));
    }

    // trace forms are invariant under simultaneous conjugation.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let g = sample::random_special_unitary(n, rng);
            let h = sample::random_special_unitary(n, rng);
            let frame = ProjectionFrame::new(g.clone());
            let moved = ProjectionFrame::new(SpecialUnitary::new(h.matrix() * g.matrix())?);
            let t = sample::random_lift(n, rng).project();
            let x = sample::random_flag_tangent(n, rng);
            let y = sample::random_flag_tangent(n, rng);
            let a = beta_form(&t, &frame, &x, &y)?;
            let b = beta_form(&t, &moved, &x, &y)?;
            worst = worst.max((a - b).norm());
            for i in 0..n {
                let a = diagonal_trace_form(&frame, i, &x, &y)?;
                let b = diagonal_trace_form(&moved, i, &x, &y)?;
                worst = worst.max((a - b).norm());
            }
        }
        out.push(Check::residual(
            "trace-form-conjugation-invariance",
            "trace forms unchanged under left translation of the frame witness",
            worst,
            cfg.tol,
        ));
    }

    Ok(out)
}

/// -(i/(4 pi))
fn minus_i_over_4pi() -> Complex64 {
    Complex64::new(0.0, -1.0 / (4.0 * PI))
}

/// p_j/p_i - p_i/p_j.
fn pair_coefficient(t: &TorusPoint, i: usize, j: usize) -> Complex64 {
    t.entry(j) / t.entry(i) - t.entry(i) / t.entry(j)
}

/// diag(t, 1/t, 1, ..., 1) at t = e^{i pi/4}.
fn block_torus_point(n: usize) -> TorusPoint {
    let mut diag = vec![Complex64::new(1.0, 0.0); n];
    diag[0] = Complex64::from_polar(1.0, FRAC_PI_4);
    diag[1] = Complex64::from_polar(1.0, -FRAC_PI_4);
    TorusPoint::new(diag).expect("block point is a torus point")
}

/// Random diagonal skew-Hermitian traceless matrix.
fn diagonal_tangent(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let v = sample::random_sum_zero(n, rng);
    CMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Complex64::new(0.0, v[r])
        } else {
            Complex64::ZERO
        }
    })
}
