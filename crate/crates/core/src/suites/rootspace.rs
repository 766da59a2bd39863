//! Root-space suite: evaluations of the trace forms at root tangents, the
//! finite-difference diagnostic for the commutator derivative, and the
//! forced-vanishing argument that separates the diagonal span from the
//! off-diagonal span.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::forms::{diagonal_trace_form, dp, trace_two_form};
use crate::linalg::{exp_matrix, root_vector, CMatrix};
use crate::report::Check;
use crate::sample;
use crate::suites::SuiteConfig;
use crate::tol::{FD_STEP, TOL_FINITE_DIFF};

const SAMPLES: usize = 50;

fn random_unit_disc(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5) * 2.0
}

pub(crate) fn checks(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut out = Vec::new();

    // root vectors are valid horizontal tangents.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let mu = random_unit_disc(rng);
            let i = rng.random_range(0..n);
            let j = (i + 1 + rng.random_range(0..n - 1)) % n;
            let x = root_vector(n, i, j, mu)?;
            let m = x.matrix();
            worst = worst.max((m + m.adjoint()).norm());
            worst = worst.max(m.trace().norm());
            for d in 0..n {
                worst = worst.max(m[(d, d)].norm());
            }
        }
        out.push(Check::residual(
            "root-tangent-validity",
            "mu E_ij - conj(mu) E_ji is skew-Hermitian with zero diagonal",
            worst,
            0.0,
        ));
    }

    // commutator derivative agrees with central differences.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let frame = sample::random_frame(n, rng);
            let x = sample::random_flag_tangent(n, rng);
            let g = frame.witness().matrix();
            let s = FD_STEP;
            let plus = exp_matrix(&(x.matrix() * Complex64::new(s, 0.0)));
            let minus = exp_matrix(&(x.matrix() * Complex64::new(-s, 0.0)));
            for i in 0..n {
                let o = elementary_projection(n, i);
                let p_plus = g * &plus * &o * plus.adjoint() * g.adjoint();
                let p_minus = g * &minus * &o * minus.adjoint() * g.adjoint();
                let fd = (p_plus - p_minus) / Complex64::new(2.0 * s, 0.0);
                worst = worst.max((fd - dp(&frame, i, &x)?).norm());
            }
        }
        out.push(Check::residual(
            "projection-derivative-fd",
            "g [X, O_i] g* matches central differences of g e^{sX} O_i e^{-sX} g*",
            worst,
            cfg.tol.max(TOL_FINITE_DIFF),
        ));
    }

    // off-diagonal trace forms vanish at matching root tangents.
    if n >= 3 {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let mu = random_unit_disc(rng);
            let lambda = random_unit_disc(rng);
            for i in 0..n - 1 {
                let a = root_vector(n, i, n - 1, mu)?;
                let b = root_vector(n, i, n - 1, lambda)?;
                for j in (i + 1)..n - 1 {
                    worst = worst.max(trace_two_form(&frame, j, i, i, &a, &b)?.norm());
                }
            }
        }
        out.push(Check::residual(
            "root-space-offdiagonal",
            "tr(P_j dP_i dP_i) vanishes at the i-th root tangents for i < j < n",
            worst,
            cfg.tol,
        ));
    } else {
        out.push(Check::skip(
            "root-space-offdiagonal",
            "off-diagonal root evaluation (needs n >= 3)",
            [0.0, 0.0],
        ));
    }

    // diagonal trace forms hit the root-space pairing.
    {
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let frame = sample::random_frame(n, rng);
            let mu = random_unit_disc(rng);
            let lambda = random_unit_disc(rng);
            for i in 0..n - 1 {
                let a = root_vector(n, i, n - 1, mu)?;
                let b = root_vector(n, i, n - 1, lambda)?;
                let got = diagonal_trace_form(&frame, i, &a, &b)?;
                let want = lambda.conj() * mu - mu.conj() * lambda;
                worst = worst.max((got - want).norm());
            }
        }
        out.push(Check::residual(
            "root-space-diagonal",
            "tr(P_i dP_i dP_i) at the i-th root tangents equals conj(l) m - conj(m) l",
            worst,
            cfg.tol,
        ));
    }

    // forced vanishing: a combination of off-diagonal forms that matches a
    // diagonal combination kills every diagonal coefficient.
    if n >= 3 {
        let mu = Complex64::new(1.0, 0.0);
        let lambda = Complex64::new(0.0, 1.0);
        let frame = sample::random_frame(n, rng);
        let b: Vec<Vec<Complex64>> = (0..n)
            .map(|_| (0..n).map(|_| random_unit_disc(rng)).collect())
            .collect();
        let mut span_worst: f64 = 0.0;
        let mut diagonal_min = f64::INFINITY;
        for k in 0..n - 1 {
            let a_mu = root_vector(n, k, n - 1, mu)?;
            let a_lambda = root_vector(n, k, n - 1, lambda)?;
            // the random off-diagonal combination evaluates to zero here
            let mut combo = Complex64::ZERO;
            for (i, row) in b.iter().enumerate().take(n - 1) {
                for (j, coeff) in row.iter().enumerate().take(n - 1).skip(i + 1) {
                    combo += coeff * trace_two_form(&frame, j, i, i, &a_mu, &a_lambda)?;
                }
            }
            span_worst = span_worst.max(combo.norm());
            // while the matching diagonal form is -2i, away from zero
            let diag = diagonal_trace_form(&frame, k, &a_mu, &a_lambda)?;
            span_worst = span_worst.max((diag - Complex64::new(0.0, -2.0)).norm());
            diagonal_min = diagonal_min.min(diag.norm());
        }
        out.push(Check::residual(
            "forced-vanishing-span",
            "off-diagonal combinations vanish at every k-th root pair while tr(P_k dP_k dP_k) = -2i there",
            span_worst,
            cfg.tol,
        ));
        out.push(Check::lower_bound(
            "forced-vanishing-nonzero-diagonal",
            "the diagonal evaluation stays away from zero, forcing every coefficient to vanish",
            diagonal_min,
            1.0,
        ));
    } else {
        out.push(Check::skip(
            "forced-vanishing-span",
            "forced-vanishing argument (needs n >= 3)",
            [0.0, 0.0],
        ));
        out.push(Check::skip(
            "forced-vanishing-nonzero-diagonal",
            "forced-vanishing witness (needs n >= 3)",
            [0.0, 0.0],
        ));
    }

    Ok(out)
}

fn elementary_projection(n: usize, i: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m[(i, i)] = Complex64::new(1.0, 0.0);
    m
}
