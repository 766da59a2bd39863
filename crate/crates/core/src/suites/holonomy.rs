//! Holonomy suite: quadrature self-calibration, the Chern-number
//! calibration that fixes every sign convention, and the beta-integral
//! obstruction separating the two holonomies.
//!
//! The measured beta integral is asserted against two independent routes
//! inside the same calibration: the constant-coefficient cross-route and
//! the resulting closed form +i. Two alternative closed-form candidates
//! (-i and -i/pi) circulate for this quantity under other sign and
//! normalisation conventions; they are reported as informational entries,
//! never asserted. Every admissible candidate lies off the lattice
//! 2 pi i Z, which is all the obstruction needs.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::error::Result;
use crate::gerbe::diagonal_form_value;
use crate::holonomy::{
    chern_number, holonomy_ratio, integrate_2form, integrate_beta_sigma, sigma_torus_point,
    QuadratureMesh,
};
use crate::report::Check;
use crate::suites::SuiteConfig;
use crate::tol::{HOLONOMY_GAP, TOL_QUADRATURE};

pub(crate) fn checks(cfg: &SuiteConfig, _rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut out = Vec::new();
    let mesh = QuadratureMesh::product_gauss(cfg.mesh_order, n)?;

    // total weight equals the sphere area.
    out.push(Check::residual(
        "mesh-calibration",
        "quadrature weights sum to 4 pi",
        (mesh.total_weight() - 4.0 * PI).abs(),
        1e-10,
    ));

    // tautological Chern number, the single sign calibration.
    {
        let c = chern_number(0, n, &mesh)?;
        out.push(Check::value_with_residual(
            "chern-tautological",
            "(i/(2 pi)) integral of tr(P_1 dP_1 dP_1) over the sphere slice equals -1",
            [c.re, c.im],
            (c - Complex64::new(-1.0, 0.0)).norm(),
            cfg.tol,
        ));
    }

    // the complementary block inside the moving 2x2 corner flips the sign.
    {
        let c = chern_number(1, n, &mesh)?;
        out.push(Check::value_with_residual(
            "chern-complement",
            "(i/(2 pi)) integral of tr(P_2 dP_2 dP_2) equals +1",
            [c.re, c.im],
            (c - Complex64::new(1.0, 0.0)).norm(),
            cfg.tol,
        ));
    }

    // every Chern number is -1, 0 or +1; constant blocks give 0.
    {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let c = chern_number(i, n, &mesh)?;
            let nearest = [-1.0, 0.0, 1.0]
                .into_iter()
                .map(|q| (c - Complex64::new(q, 0.0)).norm())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(nearest);
            if i >= 2 {
                worst = worst.max(c.norm());
            }
        }
        out.push(Check::residual(
            "chern-quantization",
            "every block Chern number lies in {-1, 0, +1}; constant blocks give 0",
            worst,
            cfg.tol,
        ));
    }

    let beta = integrate_beta_sigma(n, &mesh)?;

    // the beta integral is purely imaginary.
    out.push(Check::value_with_residual(
        "beta-integral-imaginary",
        "integral of beta over the sphere slice is purely imaginary",
        [beta.re, beta.im],
        beta.re.abs(),
        cfg.tol,
    ));

    // cross-route: beta restricted to the slice is a constant multiple of
    // the tautological form, with coefficient -(i/(4 pi)) (p^2 - p^{-2})
    // and p^2 - p^{-2} = 2i at the fixed base point.
    {
        let t0 = sigma_torus_point(n)?;
        let tau = integrate_2form(&diagonal_form_value(0), &mesh, &t0)?;
        let coefficient = Complex64::new(0.0, -1.0 / (4.0 * PI)) * Complex64::new(0.0, 2.0);
        out.push(Check::residual(
            "beta-integral-cross-route",
            "direct beta quadrature equals -(i/(4 pi)) (p^2 - p^{-2}) times the tau quadrature",
            (beta - coefficient * tau).norm(),
            cfg.tol,
        ));
    }

    // closed form implied by the Chern calibration: +i.
    out.push(Check::value_with_residual(
        "beta-integral-closed-form",
        "beta integral equals i, the value fixed by the Chern calibration",
        [beta.re, beta.im],
        (beta - Complex64::new(0.0, 1.0)).norm(),
        cfg.tol.max(TOL_QUADRATURE),
    ));

    // alternative closed-form candidates, reported but not asserted.
    out.push(Check::skip(
        "beta-integral-vs-minus-i",
        "distance to -i, the value under the opposite pairwise-sum sign convention",
        [(beta - Complex64::new(0.0, -1.0)).norm(), 0.0],
    ));
    out.push(Check::skip(
        "beta-integral-vs-minus-i-over-pi",
        "distance to -i/pi, an alternative normalisation of the same quantity",
        [(beta - Complex64::new(0.0, -1.0 / PI)).norm(), 0.0],
    ));

    // the holonomy ratio: unit modulus, bounded away from 1, independent
    // of the ambient rank.
    {
        let ratio = holonomy_ratio(n, &mesh)?;
        out.push(Check::residual(
            "holonomy-ratio-unit-modulus",
            "exp of the beta integral has unit modulus",
            (ratio.norm() - 1.0).abs(),
            cfg.tol,
        ));
        out.push(Check::lower_bound(
            "holonomy-ratio-nontrivial",
            "exp of the beta integral stays away from 1: the two holonomies differ",
            (ratio - Complex64::new(1.0, 0.0)).norm(),
            HOLONOMY_GAP,
        ));
    }

    // rank independence across the block embeddings.
    {
        let mut worst: f64 = 0.0;
        let reference = {
            let mesh2 = QuadratureMesh::product_gauss(cfg.mesh_order, 2)?;
            integrate_beta_sigma(2, &mesh2)?
        };
        for m in [3usize, 4] {
            let mesh_m = QuadratureMesh::product_gauss(cfg.mesh_order, m)?;
            let bm = integrate_beta_sigma(m, &mesh_m)?;
            worst = worst.max((bm - reference).norm());
        }
        out.push(Check::residual(
            "beta-rank-independence",
            "beta integrals agree across ranks 2, 3, 4 under the block embedding",
            worst,
            cfg.tol.max(TOL_QUADRATURE),
        ));
    }

    // doubling the mesh order leaves the integral unchanged.
    {
        let fine = QuadratureMesh::product_gauss(2 * cfg.mesh_order, n)?;
        let refined = integrate_beta_sigma(n, &fine)?;
        out.push(Check::residual(
            "quadrature-convergence",
            "doubling the mesh order changes the beta integral negligibly",
            (refined - beta).norm(),
            cfg.tol.max(TOL_QUADRATURE),
        ));
    }

    Ok(out)
}
