//! Seeded random generators for frames, tangents, lifts and cut points.
//!
//! All sampling flows through a caller-supplied RNG so that every suite and
//! test is reproducible from a single seed. Cut points are rejection-sampled
//! a safe margin away from eigenvalues; lifts are recentred to sum to zero
//! exactly (up to rounding noise).

use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::TAU;

use crate::cover::{XtLift, ZPoint};
use crate::forms::ProductTangent;
use crate::linalg::{
    circle_distance, principal_angle, CMatrix, FlagTangent, ProjectionFrame, SpecialUnitary,
    TorusPoint, TorusTangent,
};

/// Sampling margin from eigenvalues and the cut, much wider than the hard
/// rejection threshold so residual checks stay clean.
pub const SAMPLE_MARGIN: f64 = 1e-3;

fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
}

/// Generic special-unitary matrix: QR of a complex Ginibre sample, with the
/// last column rescaled to make the determinant exactly 1.
pub fn random_special_unitary<R: Rng>(n: usize, rng: &mut R) -> SpecialUnitary {
    let a = CMatrix::from_fn(n, n, |_, _| random_complex(rng));
    let mut q = a.qr().q();
    let det = q.determinant();
    let scale = det.conj() / det.norm();
    for r in 0..n {
        q[(r, n - 1)] *= scale;
    }
    SpecialUnitary::new(q).expect("QR of a Ginibre sample is unitary")
}

pub fn random_frame<R: Rng>(n: usize, rng: &mut R) -> ProjectionFrame {
    ProjectionFrame::new(random_special_unitary(n, rng))
}

/// Zero-diagonal skew-Hermitian matrix with entries of order one.
pub fn random_flag_tangent<R: Rng>(n: usize, rng: &mut R) -> FlagTangent {
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = random_complex(rng) * Complex64::new(2.0, 0.0);
            m[(i, j)] = v;
            m[(j, i)] = -v.conj();
        }
    }
    FlagTangent::new(m).expect("constructed tangent is horizontal")
}

/// Real vector summing to zero, entries of order one.
pub fn random_sum_zero<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| 2.0 * rng.random::<f64>() - 1.0).collect();
    let mean = v.iter().sum::<f64>() / n as f64;
    for x in &mut v {
        *x -= mean;
    }
    v
}

pub fn random_torus_tangent<R: Rng>(n: usize, rng: &mut R) -> TorusTangent {
    TorusTangent::new(random_sum_zero(n, rng)).expect("recentred vector sums to zero")
}

/// Lift with coordinates spread over a few periods.
pub fn random_lift<R: Rng>(n: usize, rng: &mut R) -> XtLift {
    let mut v: Vec<f64> = (0..n).map(|_| 4.0 * rng.random::<f64>() - 2.0).collect();
    let mean = v.iter().sum::<f64>() / n as f64;
    for x in &mut v {
        *x -= mean;
    }
    XtLift::new(v).expect("recentred lift sums to zero")
}

/// Another lift over the same torus point: adds an integer vector that
/// sums to zero.
pub fn integer_offset_lift<R: Rng>(x: &XtLift, rng: &mut R) -> XtLift {
    let n = x.dim();
    let mut offsets: Vec<i64> = (0..n - 1).map(|_| rng.random_range(-3..=3)).collect();
    let last: i64 = -offsets.iter().sum::<i64>();
    offsets.push(last);
    let coords: Vec<f64> = x
        .coordinates()
        .iter()
        .zip(&offsets)
        .map(|(&c, &m)| c + m as f64)
        .collect();
    XtLift::new(coords).expect("integer offsets preserve the zero sum")
}

/// Cut point rejection-sampled at least `SAMPLE_MARGIN` away from every
/// eigenvalue of t and from the excluded point 1.
pub fn random_cut_off_spectrum<R: Rng>(t: &TorusPoint, rng: &mut R) -> ZPoint {
    let angles: Vec<f64> = (0..t.dim()).map(|i| principal_angle(t.entry(i))).collect();
    loop {
        let a = rng.random::<f64>() * TAU;
        if !(SAMPLE_MARGIN..=TAU - SAMPLE_MARGIN).contains(&a) {
            continue;
        }
        if angles
            .iter()
            .all(|&p| circle_distance(a, p) > SAMPLE_MARGIN)
        {
            return ZPoint::new(a).expect("angle is interior to (0, 2*pi)");
        }
    }
}

/// Tangent with random torus, flag and lift-direction components.
pub fn random_mixed_tangent<R: Rng>(n: usize, rng: &mut R) -> ProductTangent {
    ProductTangent::new(
        random_torus_tangent(n, rng),
        random_flag_tangent(n, rng),
        random_sum_zero(n, rng),
        2.0 * rng.random::<f64>() - 1.0,
    )
    .expect("components validated individually")
}
