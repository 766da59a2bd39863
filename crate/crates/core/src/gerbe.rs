//! Connective data built from projection frames: the cup-product curving
//! and curvature attached to coordinate lifts, the pulled-back curving of
//! the basic data on the cut-circle cover (in long and reduced shape), the
//! comparison 2-form beta, the trivializing curvature, and the assembled
//! three-curvatures.
//!
//! All identities between these are equalities of multilinear forms, so the
//! suites check them pointwise on seeded random (point, tangent) samples.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use crate::cover::{branch_log, branch_winding, crossing_sign, lift_offsets, XtLift, ZPoint};
use crate::error::{Error, Result};
use crate::forms::{
    diagonal_trace_form, trace_three_form, trace_two_form, FormValue, Point, ProductTangent,
};
use crate::linalg::{FlagTangent, ProjectionFrame, TorusPoint};

fn check_rank(frame: &ProjectionFrame, others: &[usize]) -> Result<()> {
    let n = frame.dim();
    if others.iter().any(|&d| d != n) {
        return Err(Error::InvalidValue(
            "rank mismatch between point and tangent data".into(),
        ));
    }
    Ok(())
}

/// -1/(2 pi i)
const INV_2PI_I_NEG: Complex64 = Complex64::new(0.0, 1.0 / TAU);
/// i/(4 pi)
const I_OVER_4PI: Complex64 = Complex64::new(0.0, 1.0 / (4.0 * PI));

/// Curving of the cup-product data on the coordinate-lift cover:
/// -sum_i x_i tr(P_i dP_i dP_i).
pub fn weyl_curving(
    x: &XtLift,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    check_rank(frame, &[x.dim(), xt.dim(), yt.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..frame.dim() {
        sum -= diagonal_trace_form(frame, i, xt, yt)? * Complex64::new(x.coordinate(i), 0.0);
    }
    Ok(sum)
}

/// Curvature of the cup-product connection on the two-fold fibre product:
/// sum_i (x_i - y_i) tr(P_i dP_i dP_i).
pub fn weyl_curvature(
    x: &XtLift,
    y: &XtLift,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    check_rank(frame, &[x.dim(), y.dim(), xt.dim(), yt.dim()])?;
    let offsets = lift_offsets(x, y)?;
    let mut sum = Complex64::ZERO;
    for (i, &offset) in offsets.iter().enumerate() {
        if offset != 0 {
            sum += diagonal_trace_form(frame, i, xt, yt)? * Complex64::new(offset as f64, 0.0);
        }
    }
    Ok(sum)
}

fn wedge_dlog_with_diagonal_form(
    frame: &ProjectionFrame,
    i: usize,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    let rate = |t: &ProductTangent| Complex64::new(0.0, TAU * t.angular_rate(i));
    let tau =
        |a: &ProductTangent, b: &ProductTangent| diagonal_trace_form(frame, i, a.flag(), b.flag());
    Ok(rate(u) * tau(v, w)? - rate(v) * tau(u, w)? + rate(w) * tau(u, v)?)
}

/// Three-curvature of the cup-product data:
/// -1/(2 pi i) sum_i (1/p_i) dp_i ^ tr(P_i dP_i dP_i).
pub fn weyl_three_curvature(
    frame: &ProjectionFrame,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    check_rank(frame, &[u.dim(), v.dim(), w.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..frame.dim() {
        sum += wedge_dlog_with_diagonal_form(frame, i, u, v, w)?;
    }
    Ok(sum * INV_2PI_I_NEG)
}

/// Pulled-back curving in its long shape:
/// (i/(4 pi)) sum_{i != k} (log_z p_i - log_z p_k + (p_k - p_i)/p_k)
/// tr(P_i dP_k dP_k).
pub fn basic_curving_long(
    z: &ZPoint,
    t: &TorusPoint,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    check_rank(frame, &[t.dim(), xt.dim(), yt.dim()])?;
    let logs: Vec<Complex64> = (0..n)
        .map(|i| branch_log(z, t.entry(i)))
        .collect::<Result<_>>()?;
    let mut sum = Complex64::ZERO;
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let ratio = t.entry(i) / t.entry(k);
            let coeff = logs[i] - logs[k] + (Complex64::new(1.0, 0.0) - ratio);
            sum += coeff * trace_two_form(frame, i, k, k, xt, yt)?;
        }
    }
    Ok(sum * I_OVER_4PI)
}

/// Pulled-back curving in its reduced shape:
/// sum_k (-1/(2 pi i)) log_z p_k tr(P_k dP_k dP_k).
pub fn basic_curving_reduced(
    z: &ZPoint,
    t: &TorusPoint,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    check_rank(frame, &[t.dim(), xt.dim(), yt.dim()])?;
    let mut sum = Complex64::ZERO;
    for k in 0..n {
        let log = branch_log(z, t.entry(k))?;
        sum += log * INV_2PI_I_NEG * diagonal_trace_form(frame, k, xt, yt)?;
    }
    Ok(sum)
}

/// The comparison 2-form on the base:
/// beta = -(i/(4 pi)) sum_{i != k} (p_i / p_k) tr(P_i dP_k dP_k).
pub fn beta_form(
    t: &TorusPoint,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    check_rank(frame, &[t.dim(), xt.dim(), yt.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let ratio = t.entry(i) / t.entry(k);
            sum += ratio * trace_two_form(frame, i, k, k, xt, yt)?;
        }
    }
    Ok(-sum * I_OVER_4PI)
}

/// Curvature of the pulled-back connection on the two-fold fibre product
/// of the cut-circle cover: sum_i eps_i(z1, z2, t) tr(P_i dP_i dP_i).
pub fn basic_curvature(
    z1: &ZPoint,
    z2: &ZPoint,
    t: &TorusPoint,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    check_rank(frame, &[t.dim(), xt.dim(), yt.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..frame.dim() {
        let eps = crossing_sign(z1, z2, t, i)?;
        if eps != 0 {
            sum += diagonal_trace_form(frame, i, xt, yt)? * Complex64::new(eps as f64, 0.0);
        }
    }
    Ok(sum)
}

/// Curvature of the trivializing line-bundle connection:
/// sum_i h_i(x, z, t) tr(P_i dP_i dP_i) for the winding integers h_i.
pub fn trivializing_curvature(
    x: &XtLift,
    z: &ZPoint,
    t: &TorusPoint,
    frame: &ProjectionFrame,
    xt: &FlagTangent,
    yt: &FlagTangent,
) -> Result<Complex64> {
    check_rank(frame, &[x.dim(), t.dim(), xt.dim(), yt.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..frame.dim() {
        let h = branch_winding(x, z, t, i)?;
        if h != 0 {
            sum += diagonal_trace_form(frame, i, xt, yt)? * Complex64::new(h as f64, 0.0);
        }
    }
    Ok(sum)
}

/// Exterior derivative of beta, assembled analytically: the coefficient
/// p_i/p_k differentiates to 2 pi i (a_i - a_k) p_i/p_k along torus
/// directions, and the flag part contributes tr(dP_i dP_k dP_k).
pub fn dbeta_form(
    t: &TorusPoint,
    frame: &ProjectionFrame,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    check_rank(frame, &[t.dim(), u.dim(), v.dim(), w.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let ratio = t.entry(i) / t.entry(k);
            let coeff = |s: &ProductTangent| {
                Complex64::new(0.0, TAU * (s.angular_rate(i) - s.angular_rate(k))) * ratio
            };
            let t2 = |a: &ProductTangent, b: &ProductTangent| {
                trace_two_form(frame, i, k, k, a.flag(), b.flag())
            };
            let wedge = coeff(u) * t2(v, w)? - coeff(v) * t2(u, w)? + coeff(w) * t2(u, v)?;
            let t3 = trace_three_form(frame, i, k, k, u.flag(), v.flag(), w.flag())?;
            sum += wedge + ratio * t3;
        }
    }
    Ok(-sum * I_OVER_4PI)
}

/// Pulled-back three-curvature in its long shape:
/// (i/(4 pi)) sum_{i != k} ((1/p_i) dp_i - (1/p_k) dp_k - (1/p_k) dp_i
/// + (p_i/p_k^2) dp_k) tr(P_i dP_k dP_k)
/// - (i/(4 pi)) sum_{i != k} (p_i/p_k) tr(dP_i dP_k dP_k).
///
/// The expression carries no dependence on the cut point, so it is
/// evaluated directly on the base.
pub fn basic_three_curvature_long(
    t: &TorusPoint,
    frame: &ProjectionFrame,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    check_rank(frame, &[t.dim(), u.dim(), v.dim(), w.dim()])?;
    let mut sum = Complex64::ZERO;
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let ratio = t.entry(i) / t.entry(k);
            let coeff = |s: &ProductTangent| {
                let (ai, ak) = (s.angular_rate(i), s.angular_rate(k));
                Complex64::new(0.0, TAU)
                    * (Complex64::new(ai - ak, 0.0) + Complex64::new(ak - ai, 0.0) * ratio)
            };
            let t2 = |a: &ProductTangent, b: &ProductTangent| {
                trace_two_form(frame, i, k, k, a.flag(), b.flag())
            };
            let wedge = coeff(u) * t2(v, w)? - coeff(v) * t2(u, w)? + coeff(w) * t2(u, v)?;
            let t3 = trace_three_form(frame, i, k, k, u.flag(), v.flag(), w.flag())?;
            sum += wedge - ratio * t3;
        }
    }
    Ok(sum * I_OVER_4PI)
}

/// Pulled-back three-curvature in reduced shape, which coincides with the
/// cup-product three-curvature (the remainder is `dbeta_form`).
pub fn basic_three_curvature_reduced(
    frame: &ProjectionFrame,
    u: &ProductTangent,
    v: &ProductTangent,
    w: &ProductTangent,
) -> Result<Complex64> {
    weyl_three_curvature(frame, u, v, w)
}

/// Cover on which a curving lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverTag {
    /// Coordinate-lift cover of the torus factor.
    CoordinateLift,
    /// Cut-circle cover of the torus factor.
    CutCircle,
    /// Fibre product of both covers.
    FiberProduct,
}

type PairEval =
    dyn Fn(&Point, &Point, &FlagTangent, &FlagTangent) -> Result<Complex64> + Send + Sync;

/// A 2-form on the two-fold fibre product of a cover, evaluated on a pair
/// of points over the same base.
#[derive(Clone)]
pub struct PairForm {
    eval: Arc<PairEval>,
}

impl PairForm {
    pub fn new(
        eval: impl Fn(&Point, &Point, &FlagTangent, &FlagTangent) -> Result<Complex64>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
        }
    }

    pub fn eval(
        &self,
        first: &Point,
        second: &Point,
        xt: &FlagTangent,
        yt: &FlagTangent,
    ) -> Result<Complex64> {
        let residual = (0..first.dim())
            .map(|k| (first.torus().entry(k) - second.torus().entry(k)).norm())
            .fold(0.0f64, f64::max);
        if residual > crate::tol::TOL_ALG {
            return Err(Error::FiberMismatch { residual });
        }
        (self.eval)(first, second, xt, yt)
    }
}

/// Curving, curvature and three-curvature of one of the two bundles of
/// connective data, with the cover the curving lives on.
///
/// The defining relation ties the three together: the curving difference
/// across a fibre pair equals the curvature of the pair, and the exterior
/// derivative of the curving descends to the three-curvature.
#[derive(Clone)]
pub struct ConnectiveData {
    pub cover: CoverTag,
    pub curving: FormValue,
    pub curvature: PairForm,
    pub three_curvature: FormValue,
}

impl ConnectiveData {
    /// Cup-product connective data on the coordinate-lift cover.
    pub fn weyl() -> Self {
        ConnectiveData {
            cover: CoverTag::CoordinateLift,
            curving: FormValue::new(2, |p, v| {
                weyl_curving(p.lift()?, p.frame(), v[0].flag(), v[1].flag())
            }),
            curvature: PairForm::new(|p1, p2, xt, yt| {
                weyl_curvature(p1.lift()?, p2.lift()?, p1.frame(), xt, yt)
            }),
            three_curvature: FormValue::new(3, |p, v| {
                weyl_three_curvature(p.frame(), &v[0], &v[1], &v[2])
            }),
        }
    }

    /// Pulled-back connective data on the cut-circle cover, long shape.
    pub fn basic_pullback() -> Self {
        ConnectiveData {
            cover: CoverTag::CutCircle,
            curving: FormValue::new(2, |p, v| {
                basic_curving_long(p.cut()?, p.torus(), p.frame(), v[0].flag(), v[1].flag())
            }),
            curvature: PairForm::new(|p1, p2, xt, yt| {
                basic_curvature(p1.cut()?, p2.cut()?, p1.torus(), p1.frame(), xt, yt)
            }),
            three_curvature: FormValue::new(3, |p, v| {
                basic_three_curvature_long(p.torus(), p.frame(), &v[0], &v[1], &v[2])
            }),
        }
    }

    /// Pulled-back connective data with the reduced curving, which differs
    /// from the long shape by the pullback of beta.
    pub fn basic_pullback_reduced() -> Self {
        ConnectiveData {
            cover: CoverTag::CutCircle,
            curving: FormValue::new(2, |p, v| {
                basic_curving_reduced(p.cut()?, p.torus(), p.frame(), v[0].flag(), v[1].flag())
            }),
            curvature: PairForm::new(|p1, p2, xt, yt| {
                basic_curvature(p1.cut()?, p2.cut()?, p1.torus(), p1.frame(), xt, yt)
            }),
            three_curvature: FormValue::new(3, |p, v| {
                basic_three_curvature_reduced(p.frame(), &v[0], &v[1], &v[2])
            }),
        }
    }
}

impl std::fmt::Debug for ConnectiveData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConnectiveData")
            .field("cover", &self.cover)
            .finish()
    }
}

/// The beta 2-form as a form value on the base.
pub fn beta_form_value() -> FormValue {
    FormValue::new(2, |p, v| {
        beta_form(p.torus(), p.frame(), v[0].flag(), v[1].flag())
    })
}

/// The diagonal trace form tr(P_i dP_i dP_i) as a form value.
pub fn diagonal_form_value(i: usize) -> FormValue {
    FormValue::new(2, move |p, v| {
        diagonal_trace_form(p.frame(), i, v[0].flag(), v[1].flag())
    })
}
