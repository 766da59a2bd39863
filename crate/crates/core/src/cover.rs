//! Covering spaces of the torus, the cut circle, branch logarithms and the
//! integer cocycles they carry, together with the Weyl map.
//!
//! Circle points are stored as angles in the open interval (0, 2*pi); the
//! ordering of cut points is by angle, which makes "between" total and
//! testable. An eigenvalue equal to 1 participates in comparisons with
//! angle 0, i.e. below every cut point. Operations near a cut reject with
//! [`Error::OnBranchCut`] instead of picking a side.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::linalg::{
    circle_distance, principal_angle, CMatrix, ProjectionFrame, SpecialUnitary, TorusPoint,
};
use crate::tol::{TOL_ALG, TOL_CUT, TOL_SUM_ZERO};

/// A lift of a torus point: real coordinates summing to zero, projecting
/// through x -> diag(exp(2 pi i x_1), ..., exp(2 pi i x_n)).
#[derive(Debug, Clone)]
pub struct XtLift {
    x: Vec<f64>,
}

impl XtLift {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.is_empty() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidValue("lift coordinates not finite".into()));
        }
        let sum: f64 = x.iter().sum();
        if sum.abs() > TOL_SUM_ZERO {
            return Err(Error::InvalidValue(format!(
                "lift coordinates sum to {sum:.3e}, not 0"
            )));
        }
        Ok(Self { x })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn coordinate(&self, i: usize) -> f64 {
        self.x[i]
    }

    pub fn coordinates(&self) -> &[f64] {
        &self.x
    }

    /// Projects to the torus point diag(exp(2 pi i x_k)).
    pub fn project(&self) -> TorusPoint {
        let diag = self
            .x
            .iter()
            .map(|&v| Complex64::from_polar(1.0, TAU * v))
            .collect();
        TorusPoint::new(diag).expect("a sum-zero lift projects into the torus")
    }
}

/// A cut point of the circle: any element of U(1) other than 1, stored as
/// its angle in (0, 2*pi).
#[derive(Debug, Clone, Copy)]
pub struct ZPoint {
    angle: f64,
}

impl ZPoint {
    pub fn new(angle: f64) -> Result<Self> {
        if !angle.is_finite() || angle <= 0.0 || angle >= TAU {
            return Err(Error::InvalidValue(format!(
                "cut angle {angle} outside the open interval (0, 2*pi)"
            )));
        }
        Ok(Self { angle })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn point(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle)
    }
}

/// A cut point paired with a torus point whose spectrum avoids it.
#[derive(Debug, Clone)]
pub struct YtPoint {
    z: ZPoint,
    t: TorusPoint,
}

impl YtPoint {
    pub fn new(z: ZPoint, t: TorusPoint) -> Result<Self> {
        for i in 0..t.dim() {
            let sep = circle_distance(z.angle(), principal_angle(t.entry(i)));
            if sep <= TOL_CUT {
                return Err(Error::OnBranchCut { separation: sep });
            }
        }
        Ok(Self { z, t })
    }

    pub fn z(&self) -> &ZPoint {
        &self.z
    }

    pub fn torus(&self) -> &TorusPoint {
        &self.t
    }
}

/// A compatible pair of lifts over one torus point: a coordinate lift and
/// a cut point off the spectrum.
#[derive(Debug, Clone)]
pub struct FiberPairXY {
    x: XtLift,
    y: YtPoint,
}

impl FiberPairXY {
    pub fn new(x: XtLift, y: YtPoint) -> Result<Self> {
        check_same_fiber(&x, y.torus())?;
        Ok(Self { x, y })
    }

    pub fn lift(&self) -> &XtLift {
        &self.x
    }

    pub fn cut(&self) -> &ZPoint {
        self.y.z()
    }

    pub fn torus(&self) -> &TorusPoint {
        self.y.torus()
    }
}

fn check_same_fiber(x: &XtLift, t: &TorusPoint) -> Result<()> {
    if x.dim() != t.dim() {
        return Err(Error::InvalidValue(format!(
            "dimension mismatch: lift {} vs torus {}",
            x.dim(),
            t.dim()
        )));
    }
    let mut residual: f64 = 0.0;
    for k in 0..x.dim() {
        let projected = Complex64::from_polar(1.0, TAU * x.coordinate(k));
        residual = residual.max((projected - t.entry(k)).norm());
    }
    if residual > TOL_ALG {
        return Err(Error::FiberMismatch { residual });
    }
    Ok(())
}

fn round_to_integer(value: f64) -> Result<i64> {
    let rounded = value.round();
    let distance = (value - rounded).abs();
    if distance > TOL_ALG {
        return Err(Error::NotInteger { value, distance });
    }
    Ok(rounded as i64)
}

/// Integer offsets between two lifts of the same torus point,
/// component by component.
pub fn lift_offsets(x: &XtLift, y: &XtLift) -> Result<Vec<i64>> {
    if x.dim() != y.dim() {
        return Err(Error::InvalidValue("lift dimension mismatch".into()));
    }
    let mut out = Vec::with_capacity(x.dim());
    for k in 0..x.dim() {
        let diff = x.coordinate(k) - y.coordinate(k);
        let rounded = diff.round();
        if (diff - rounded).abs() > TOL_ALG {
            return Err(Error::FiberMismatch {
                residual: (diff - rounded).abs(),
            });
        }
        out.push(rounded as i64);
    }
    Ok(out)
}

/// The integer x_i - y_i for two lifts over the same torus point.
pub fn lift_offset(x: &XtLift, y: &XtLift, i: usize) -> Result<i64> {
    if i >= x.dim() {
        return Err(Error::IndexError {
            index: i,
            n: x.dim(),
        });
    }
    Ok(lift_offsets(x, y)?[i])
}

/// Logarithm cut along the ray through z, normalised so that log(1) = 0:
/// returns i*theta with theta the unique angle of w in
/// (angle(z) - 2*pi, angle(z)).
pub fn branch_log(z: &ZPoint, w: Complex64) -> Result<Complex64> {
    if (w.norm() - 1.0).abs() > TOL_ALG {
        return Err(Error::InvalidValue(format!("{w} is not unit modulus")));
    }
    let theta0 = principal_angle(w);
    let sep = circle_distance(theta0, z.angle());
    if sep <= TOL_CUT {
        return Err(Error::OnBranchCut { separation: sep });
    }
    let theta = if theta0 < z.angle() {
        theta0
    } else {
        theta0 - TAU
    };
    Ok(Complex64::new(0.0, theta))
}

/// Signed indicator that the i-th eigenvalue of t lies between two cut
/// points: +1 if z1 > p_i(t) > z2 in the circle ordering, -1 for the
/// reverse, 0 otherwise.
pub fn crossing_sign(z1: &ZPoint, z2: &ZPoint, t: &TorusPoint, i: usize) -> Result<i64> {
    if i >= t.dim() {
        return Err(Error::IndexError {
            index: i,
            n: t.dim(),
        });
    }
    let p = principal_angle(t.entry(i));
    for z in [z1, z2] {
        let sep = circle_distance(p, z.angle());
        if sep <= TOL_CUT {
            return Err(Error::OnBranchCut { separation: sep });
        }
    }
    let (a1, a2) = (z1.angle(), z2.angle());
    if a1 > p && p > a2 {
        Ok(1)
    } else if a2 > p && p > a1 {
        Ok(-1)
    } else {
        Ok(0)
    }
}

/// The winding integer x_i - log_z(p_i(t)) / (2 pi i) of a lift coordinate
/// relative to the branch through z. Integrality is part of the contract;
/// a non-integer value signals inconsistent inputs.
pub fn branch_winding(x: &XtLift, z: &ZPoint, t: &TorusPoint, i: usize) -> Result<i64> {
    if i >= x.dim() {
        return Err(Error::IndexError {
            index: i,
            n: x.dim(),
        });
    }
    check_same_fiber(x, t)?;
    let log = branch_log(z, t.entry(i))?;
    round_to_integer(x.coordinate(i) - log.im / TAU)
}

/// The Weyl map: (t, frame) -> sum_i p_i(t) P_i, conjugation of diag(t) by
/// the frame witness.
pub fn weyl_map(t: &TorusPoint, frame: &ProjectionFrame) -> Result<SpecialUnitary> {
    let n = frame.dim();
    if t.dim() != n {
        return Err(Error::InvalidValue(format!(
            "dimension mismatch: torus {} vs frame {}",
            t.dim(),
            n
        )));
    }
    let mut sum = CMatrix::zeros(n, n);
    for i in 0..n {
        sum += frame.projection(i) * t.entry(i);
    }
    SpecialUnitary::new(sum)
}
