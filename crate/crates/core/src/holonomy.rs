//! Surface integrals of 2-forms over the embedded sphere inside the
//! product of the torus with the flag manifold, Chern numbers, and the
//! holonomy-ratio obstruction.
//!
//! The sphere sits inside the flag manifold through the rank-two block
//! embedding: the frame witness is block-diag(u(theta, phi), I_{n-2}) with
//! u rotating the first coordinate axis onto the spinor direction
//! (cos(theta/2), e^{i phi} sin(theta/2)). Quadrature is product
//! Gauss-Legendre in cos(theta) times a uniform periodic rule in phi, which
//! converges spectrally for the smooth integrands that arise here. The
//! orientation is fixed once by requiring the tautological Chern integral
//! to equal -1; that single calibration pins every sign convention in the
//! form evaluators.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI, TAU};

use crate::error::{Error, Result};
use crate::forms::{FormValue, Point, ProductTangent};
use crate::gerbe::{beta_form_value, diagonal_form_value};
use crate::linalg::{CMatrix, FlagTangent, ProjectionFrame, SpecialUnitary, TorusPoint};

/// A chart point of the embedded sphere, with the ambient rank.
#[derive(Debug, Clone, Copy)]
pub struct SphereChart {
    pub theta: f64,
    pub phi: f64,
    pub n: usize,
}

impl SphereChart {
    pub fn new(theta: f64, phi: f64, n: usize) -> Result<Self> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::ChartOutOfRange { theta });
        }
        if !(0.0..TAU).contains(&phi) || n < 2 {
            return Err(Error::ChartOutOfRange { theta });
        }
        Ok(Self { theta, phi, n })
    }
}

/// Frame over a chart point: witness block-diag(u(theta, phi), I_{n-2}).
pub fn sphere_frame(chart: &SphereChart) -> Result<ProjectionFrame> {
    let n = chart.n;
    let (c, s) = ((chart.theta / 2.0).cos(), (chart.theta / 2.0).sin());
    let phase = Complex64::from_polar(1.0, chart.phi);
    let mut g = CMatrix::identity(n, n);
    g[(0, 0)] = Complex64::new(c, 0.0);
    g[(0, 1)] = -s * phase.conj();
    g[(1, 0)] = s * phase;
    g[(1, 1)] = Complex64::new(c, 0.0);
    Ok(ProjectionFrame::new(SpecialUnitary::new(g)?))
}

/// Pushforwards of the chart fields: horizontal tangents for d/d(theta)
/// and d/d(phi), computed in closed form from u* du.
pub fn chart_tangents(chart: &SphereChart) -> Result<(FlagTangent, FlagTangent)> {
    let n = chart.n;
    let (c, s) = ((chart.theta / 2.0).cos(), (chart.theta / 2.0).sin());
    let phase = Complex64::from_polar(1.0, chart.phi);

    let mut xt = CMatrix::zeros(n, n);
    xt[(0, 1)] = -phase.conj() * Complex64::new(0.5, 0.0);
    xt[(1, 0)] = phase * Complex64::new(0.5, 0.0);

    let mut xp = CMatrix::zeros(n, n);
    xp[(0, 1)] = Complex64::new(0.0, c * s) * phase.conj();
    xp[(1, 0)] = Complex64::new(0.0, c * s) * phase;

    Ok((FlagTangent::new(xt)?, FlagTangent::new(xp)?))
}

/// Product quadrature mesh on the sphere: Gauss-Legendre nodes in
/// u = cos(theta) times a uniform rule in phi. Node weights carry the
/// du d(phi) measure, so the weights sum to 4 pi.
#[derive(Debug, Clone)]
pub struct QuadratureMesh {
    nodes: Vec<(SphereChart, f64)>,
    order: usize,
}

impl QuadratureMesh {
    pub fn product_gauss(order: usize, n: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidValue("mesh order must be at least 2".into()));
        }
        if n < 2 {
            return Err(Error::RankOutOfRange { n });
        }
        let (us, ws) = gauss_legendre(order);
        let n_phi = 2 * order;
        let phi_weight = TAU / n_phi as f64;
        let mut nodes = Vec::with_capacity(order * n_phi);
        for (&u, &w) in us.iter().zip(&ws) {
            let theta = u.clamp(-1.0, 1.0).acos();
            for k in 0..n_phi {
                let phi = TAU * k as f64 / n_phi as f64;
                nodes.push((SphereChart::new(theta, phi, n)?, w * phi_weight));
            }
        }
        Ok(Self { nodes, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[(SphereChart, f64)] {
        &self.nodes
    }

    /// Total weight, which must equal the sphere area 4 pi.
    pub fn total_weight(&self) -> f64 {
        self.nodes.iter().map(|(_, w)| w).sum()
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// recurrence.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1);
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for k in 0..m.div_ceil(2) {
        let mut x = (PI * (k as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre(m, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[k] = x;
        nodes[m - 1 - k] = -x;
        weights[k] = w;
        weights[m - 1 - k] = w;
    }
    (nodes, weights)
}

/// Legendre polynomial P_m and its derivative at x.
fn legendre(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 1..m {
        let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integral of a 2-form over the sphere slice {t0} x S^2: sum of
/// weight * form(d/d(theta), d/d(phi)) / sin(theta) over the mesh.
pub fn integrate_2form(
    form: &FormValue,
    mesh: &QuadratureMesh,
    t0: &TorusPoint,
) -> Result<Complex64> {
    let mut sum = Complex64::ZERO;
    for (chart, weight) in mesh.nodes() {
        if t0.dim() != chart.n {
            return Err(Error::InvalidValue(
                "torus point rank does not match the mesh".into(),
            ));
        }
        let frame = sphere_frame(chart)?;
        let (xt, xp) = chart_tangents(chart)?;
        let point = Point::base(t0.clone(), frame)?;
        let value = form.eval(
            &point,
            &[ProductTangent::from_flag(xt), ProductTangent::from_flag(xp)],
        )?;
        sum += value * Complex64::new(weight / chart.theta.sin(), 0.0);
    }
    Ok(sum)
}

/// The torus base point diag(e^{i pi/4}, e^{-i pi/4}, 1, ..., 1) of the
/// holonomy surface.
pub fn sigma_torus_point(n: usize) -> Result<TorusPoint> {
    if n < 2 {
        return Err(Error::RankOutOfRange { n });
    }
    let mut diag = vec![Complex64::new(1.0, 0.0); n];
    diag[0] = Complex64::from_polar(1.0, FRAC_PI_4);
    diag[1] = Complex64::from_polar(1.0, -FRAC_PI_4);
    TorusPoint::new(diag)
}

/// Chern number (i/(2 pi)) times the integral of tr(P_i dP_i dP_i) over
/// the embedded sphere.
pub fn chern_number(i: usize, n: usize, mesh: &QuadratureMesh) -> Result<Complex64> {
    let t0 = sigma_torus_point(n)?;
    let integral = integrate_2form(&diagonal_form_value(i), mesh, &t0)?;
    Ok(integral * Complex64::new(0.0, 1.0 / TAU))
}

/// Integral of beta over the embedded sphere at the fixed torus point.
pub fn integrate_beta_sigma(n: usize, mesh: &QuadratureMesh) -> Result<Complex64> {
    let t0 = sigma_torus_point(n)?;
    integrate_2form(&beta_form_value(), mesh, &t0)
}

/// Ratio of the two holonomies over the embedded sphere:
/// exp of the beta integral. Unit modulus, and away from 1 when the
/// holonomies genuinely differ.
pub fn holonomy_ratio(n: usize, mesh: &QuadratureMesh) -> Result<Complex64> {
    Ok(integrate_beta_sigma(n, mesh)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;

    #[test]
    fn gauss_legendre_basics() {
        for m in [2usize, 5, 16, 33] {
            let (nodes, weights) = gauss_legendre(m);
            assert!((weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            let quad_x2: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x * x).sum();
            assert!((quad_x2 - 2.0 / 3.0).abs() < 1e-13);
            assert!(nodes.iter().all(|x| x.abs() < 1.0));
        }
    }

    #[test]
    fn mesh_self_calibration() {
        let mesh = QuadratureMesh::product_gauss(32, 2).unwrap();
        assert!((mesh.total_weight() - 4.0 * PI).abs() < 1e-10);
        assert!(mesh.nodes().iter().all(|(_, w)| *w > 0.0));
    }

    #[test]
    fn sphere_frame_near_north_pole() {
        let chart = SphereChart::new(1e-9, 0.3, 3).unwrap();
        let frame = sphere_frame(&chart).unwrap();
        let p1 = frame.projection(0);
        assert!((p1[(0, 0)] - ONE).norm() < 1e-8);
        assert!(p1[(1, 1)].norm() < 1e-8);
    }

    #[test]
    fn sphere_frame_equator() {
        let chart = SphereChart::new(PI / 2.0, 0.0, 2).unwrap();
        let frame = sphere_frame(&chart).unwrap();
        let p1 = frame.projection(0);
        for r in 0..2 {
            for s in 0..2 {
                assert!((p1[(r, s)] - Complex64::new(0.5, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn constant_blocks_have_no_derivative() {
        let chart = SphereChart::new(1.1, 2.3, 4).unwrap();
        let frame = sphere_frame(&chart).unwrap();
        let (xt, xp) = chart_tangents(&chart).unwrap();
        for i in 2..4 {
            // the projection itself is a coordinate axis
            let o = frame.projection(i);
            assert!((o[(i, i)] - ONE).norm() < 1e-14);
            for tangent in [&xt, &xp] {
                let d = crate::forms::dp(&frame, i, tangent).unwrap();
                assert!(d.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn chart_tangents_match_finite_differences() {
        let h = 1e-6;
        let chart = SphereChart::new(0.9, 1.7, 3).unwrap();
        let frame = sphere_frame(&chart).unwrap();
        let (xt, xp) = chart_tangents(&chart).unwrap();
        for i in 0..2 {
            let dtheta = {
                let plus = sphere_frame(&SphereChart::new(chart.theta + h, chart.phi, 3).unwrap())
                    .unwrap();
                let minus = sphere_frame(&SphereChart::new(chart.theta - h, chart.phi, 3).unwrap())
                    .unwrap();
                (plus.projection(i) - minus.projection(i)) / Complex64::new(2.0 * h, 0.0)
            };
            let exact = crate::forms::dp(&frame, i, &xt).unwrap();
            assert!((dtheta - exact).norm() < 1e-8);

            let dphi = {
                let plus = sphere_frame(&SphereChart::new(chart.theta, chart.phi + h, 3).unwrap())
                    .unwrap();
                let minus = sphere_frame(&SphereChart::new(chart.theta, chart.phi - h, 3).unwrap())
                    .unwrap();
                (plus.projection(i) - minus.projection(i)) / Complex64::new(2.0 * h, 0.0)
            };
            let exact = crate::forms::dp(&frame, i, &xp).unwrap();
            assert!((dphi - exact).norm() < 1e-8);
        }
    }

    #[test]
    fn zero_form_integrates_to_zero() {
        let mesh = QuadratureMesh::product_gauss(8, 2).unwrap();
        let t0 = sigma_torus_point(2).unwrap();
        let v = integrate_2form(&FormValue::zero(2), &mesh, &t0).unwrap();
        assert_eq!(v, Complex64::ZERO);
    }

    #[test]
    fn integrand_matches_spinor_closed_form() {
        // for the spinor projection, tr(P dP dP) on the chart fields is
        // (i/2) sin(theta) at every chart point; this pins the commutator
        // machinery and the pushforwards together pointwise
        for n in [2usize, 3, 5] {
            for &(theta, phi) in &[
                (0.3, 0.0),
                (1.2, 2.5),
                (2.8, 5.9),
                (std::f64::consts::FRAC_PI_2, 1.0),
            ] {
                let chart = SphereChart::new(theta, phi, n).unwrap();
                let frame = sphere_frame(&chart).unwrap();
                let (xt, xp) = chart_tangents(&chart).unwrap();
                let got = crate::forms::diagonal_trace_form(&frame, 0, &xt, &xp).unwrap();
                let want = Complex64::new(0.0, theta.sin() / 2.0);
                assert!(
                    (got - want).norm() < 1e-14,
                    "n = {n}, theta = {theta}: got {got}, want {want}"
                );
            }
        }
    }

    #[test]
    fn tautological_chern_number() {
        let mesh = QuadratureMesh::product_gauss(32, 2).unwrap();
        let c = chern_number(0, 2, &mesh).unwrap();
        assert!((c - Complex64::new(-1.0, 0.0)).norm() < 1e-8);
        // the complementary block flips the sign
        let c = chern_number(1, 2, &mesh).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn chern_numbers_quantized_constant_blocks() {
        let mesh = QuadratureMesh::product_gauss(16, 4).unwrap();
        for i in 2..4 {
            let c = chern_number(i, 4, &mesh).unwrap();
            assert!(c.norm() < 1e-10);
        }
    }

    #[test]
    fn beta_integral_value_and_rank_independence() {
        let mesh2 = QuadratureMesh::product_gauss(32, 2).unwrap();
        let b2 = integrate_beta_sigma(2, &mesh2).unwrap();
        // cross-route: beta on the sphere slice is the constant
        // -(i/(4 pi)) (p^2 - p^{-2}) times the tautological form, with
        // p^2 - p^{-2} = 2i at the fixed base point
        let tau_integral = integrate_2form(
            &diagonal_form_value(0),
            &mesh2,
            &sigma_torus_point(2).unwrap(),
        )
        .unwrap();
        let want = Complex64::new(0.0, -1.0 / (4.0 * PI)) * Complex64::new(0.0, 2.0) * tau_integral;
        assert!((b2 - want).norm() < 1e-10);
        // closed form: the integral is +i
        assert!((b2 - Complex64::new(0.0, 1.0)).norm() < 1e-8);
        assert!(b2.re.abs() < 1e-10);

        for n in [3usize, 4] {
            let mesh = QuadratureMesh::product_gauss(32, n).unwrap();
            let bn = integrate_beta_sigma(n, &mesh).unwrap();
            assert!((bn - b2).norm() < 1e-8);
        }
    }

    #[test]
    fn holonomy_ratio_obstruction() {
        let mesh = QuadratureMesh::product_gauss(32, 2).unwrap();
        let r2 = holonomy_ratio(2, &mesh).unwrap();
        assert!((r2.norm() - 1.0).abs() < 1e-8);
        assert!((r2 - ONE).norm() > 0.1);
        let mesh3 = QuadratureMesh::product_gauss(32, 3).unwrap();
        let r3 = holonomy_ratio(3, &mesh3).unwrap();
        assert!((r3 - r2).norm() < 1e-8);
    }

    #[test]
    fn quadrature_converges_under_refinement() {
        let coarse = QuadratureMesh::product_gauss(16, 2).unwrap();
        let fine = QuadratureMesh::product_gauss(32, 2).unwrap();
        let a = integrate_beta_sigma(2, &coarse).unwrap();
        let b = integrate_beta_sigma(2, &fine).unwrap();
        assert!((a - b).norm() < 1e-8);
    }

    #[test]
    fn chart_validation() {
        assert!(matches!(
            SphereChart::new(0.0, 0.0, 2),
            Err(Error::ChartOutOfRange { .. })
        ));
        assert!(matches!(
            SphereChart::new(PI, 0.0, 2),
            Err(Error::ChartOutOfRange { .. })
        ));
    }
}
