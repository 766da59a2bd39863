//! Exact evaluation of the differential forms built from projection frames:
//! derivatives dP_i through commutators, the trace 2- and 3-forms, torus
//! logarithmic 1-forms, wedges, and the group three-form.
//!
//! Forms are handled as antisymmetric multilinear evaluators at a point,
//! never symbolically. Evaluation conventions: a 2-form built from two
//! matrix-valued 1-forms is the signed sum over both argument orders with
//! no 1/2 factor, and 3-forms use the full signed sum over all six
//! permutations with no 1/6 factor. The conventions are pinned by the
//! quadrature calibration in the holonomy module, which requires the
//! tautological Chern integral to come out at -1.

use num_complex::Complex64;
use std::f64::consts::TAU;
use std::sync::Arc;

use crate::cover::{XtLift, YtPoint, ZPoint};
use crate::error::{Error, Result};
use crate::linalg::{
    ensure_square_finite, CMatrix, FlagTangent, ProjectionFrame, TorusPoint, TorusTangent,
};
use crate::tol::{TOL_ALG, TOL_SUM_ZERO};

/// Tangent to the product of the torus (or one of its covers) with the
/// flag manifold. Unused components stay zero.
#[derive(Debug, Clone)]
pub struct ProductTangent {
    torus: TorusTangent,
    flag: FlagTangent,
    xdot: Vec<f64>,
    zdot: f64,
}

impl ProductTangent {
    pub fn new(torus: TorusTangent, flag: FlagTangent, xdot: Vec<f64>, zdot: f64) -> Result<Self> {
        let n = torus.dim();
        if flag.dim() != n || xdot.len() != n {
            return Err(Error::InvalidTangent(
                "tangent components have mismatched dimensions".into(),
            ));
        }
        if xdot.iter().any(|v| !v.is_finite()) || !zdot.is_finite() {
            return Err(Error::InvalidTangent(
                "tangent components not finite".into(),
            ));
        }
        let sum: f64 = xdot.iter().sum();
        if sum.abs() > TOL_SUM_ZERO {
            return Err(Error::InvalidTangent(format!(
                "lift direction sums to {sum:.3e}, not 0"
            )));
        }
        Ok(Self {
            torus,
            flag,
            xdot,
            zdot,
        })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            torus: TorusTangent::zero(n),
            flag: FlagTangent::zero(n),
            xdot: vec![0.0; n],
            zdot: 0.0,
        }
    }

    pub fn from_flag(flag: FlagTangent) -> Self {
        let n = flag.dim();
        Self {
            torus: TorusTangent::zero(n),
            flag,
            xdot: vec![0.0; n],
            zdot: 0.0,
        }
    }

    pub fn from_torus(torus: TorusTangent) -> Self {
        let n = torus.dim();
        Self {
            torus,
            flag: FlagTangent::zero(n),
            xdot: vec![0.0; n],
            zdot: 0.0,
        }
    }

    pub fn from_xdot(xdot: Vec<f64>) -> Result<Self> {
        let n = xdot.len();
        Self::new(TorusTangent::zero(n), FlagTangent::zero(n), xdot, 0.0)
    }

    pub fn dim(&self) -> usize {
        self.torus.dim()
    }

    pub fn torus(&self) -> &TorusTangent {
        &self.torus
    }

    pub fn flag(&self) -> &FlagTangent {
        &self.flag
    }

    pub fn xdot(&self) -> &[f64] {
        &self.xdot
    }

    pub fn zdot(&self) -> f64 {
        self.zdot
    }

    /// Combined velocity of the i-th torus character along this tangent
    /// (torus directions and lift directions project to the same thing).
    pub fn angular_rate(&self, i: usize) -> f64 {
        self.torus.component(i) + self.xdot[i]
    }
}

/// A point of the base T x SU(n)/T, optionally with lift coordinates and a
/// cut point when it lives on one of the covers.
#[derive(Debug, Clone)]
pub struct Point {
    t: TorusPoint,
    frame: ProjectionFrame,
    x: Option<XtLift>,
    z: Option<ZPoint>,
}

impl Point {
    pub fn base(t: TorusPoint, frame: ProjectionFrame) -> Result<Self> {
        if t.dim() != frame.dim() {
            return Err(Error::InvalidValue(
                "torus and frame dimensions differ".into(),
            ));
        }
        Ok(Self {
            t,
            frame,
            x: None,
            z: None,
        })
    }

    /// Point on the coordinate-lift cover: the lift must project onto the
    /// stored torus point.
    pub fn with_lift(x: XtLift, frame: ProjectionFrame) -> Result<Self> {
        let t = x.project();
        let mut p = Self::base(t, frame)?;
        p.x = Some(x);
        Ok(p)
    }

    /// Point on the cut-circle cover: the cut must avoid the spectrum.
    pub fn with_cut(z: ZPoint, t: TorusPoint, frame: ProjectionFrame) -> Result<Self> {
        YtPoint::new(z, t.clone())?;
        let mut p = Self::base(t, frame)?;
        p.z = Some(z);
        Ok(p)
    }

    /// Point on the fibre product of both covers.
    pub fn with_lift_and_cut(x: XtLift, z: ZPoint, frame: ProjectionFrame) -> Result<Self> {
        let mut p = Self::with_lift(x, frame)?;
        YtPoint::new(z, p.t.clone())?;
        p.z = Some(z);
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn torus(&self) -> &TorusPoint {
        &self.t
    }

    pub fn frame(&self) -> &ProjectionFrame {
        &self.frame
    }

    pub fn lift(&self) -> Result<&XtLift> {
        self.x.as_ref().ok_or(Error::CoverMismatch {
            needed: "coordinate-lift",
        })
    }

    pub fn cut(&self) -> Result<&ZPoint> {
        self.z.as_ref().ok_or(Error::CoverMismatch {
            needed: "cut-circle",
        })
    }
}

type FormEval = dyn Fn(&Point, &[ProductTangent]) -> Result<Complex64> + Send + Sync;

/// A 1-, 2- or 3-form as an antisymmetric multilinear evaluator.
#[derive(Clone)]
pub struct FormValue {
    degree: usize,
    eval: Arc<FormEval>,
}

impl FormValue {
    pub fn new(
        degree: usize,
        eval: impl Fn(&Point, &[ProductTangent]) -> Result<Complex64> + Send + Sync + 'static,
    ) -> Self {
        assert!((1..=3).contains(&degree), "form degree must be 1, 2 or 3");
        Self {
            degree,
            eval: Arc::new(eval),
        }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(degree, |_, _| Ok(Complex64::ZERO))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, point: &Point, tangents: &[ProductTangent]) -> Result<Complex64> {
        if tangents.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: tangents.len(),
            });
        }
        (self.eval)(point, tangents)
    }
}

impl std::fmt::Debug for FormValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FormValue")
            .field("degree", &self.degree)
            .finish()
    }
}

/// Derivative of the i-th frame projection along a horizontal tangent:
/// dP_i(X) = g [X, O_i] g*.
pub fn dp(frame: &ProjectionFrame, i: usize, x: &FlagTangent) -> Result<CMatrix> {
    let n = frame.dim();
    if i >= n {
        return Err(Error::IndexError { index: i, n });
    }
    if x.dim() != n {
        return Err(Error::InvalidTangent(
            "tangent dimension does not match the frame".into(),
        ));
    }
    let g = frame.witness().matrix();
    let xm = x.matrix();
    // [X, O_i] has column i of X in column i and minus row i of X in row i
    let mut comm = CMatrix::zeros(n, n);
    for r in 0..n {
        comm[(r, i)] += xm[(r, i)];
        comm[(i, r)] -= xm[(i, r)];
    }
    Ok(g * comm * g.adjoint())
}

fn trace_product(a: &CMatrix, b: &CMatrix, c: &CMatrix) -> Complex64 {
    (a * b * c).trace()
}

/// The 2-form tr(P_i dP_j dP_k) on a pair of horizontal tangents:
/// tr(P_i dP_j(X) dP_k(Y)) - tr(P_i dP_j(Y) dP_k(X)).
pub fn trace_two_form(
    frame: &ProjectionFrame,
    i: usize,
    j: usize,
    k: usize,
    x: &FlagTangent,
    y: &FlagTangent,
) -> Result<Complex64> {
    let n = frame.dim();
    if i >= n {
        return Err(Error::IndexError { index: i, n });
    }
    let djx = dp(frame, j, x)?;
    let dky = dp(frame, k, y)?;
    let djy = dp(frame, j, y)?;
    let dkx = dp(frame, k, x)?;
    let p = frame.projection(i);
    Ok(trace_product(p, &djx, &dky) - trace_product(p, &djy, &dkx))
}

/// Shorthand for the diagonal trace form tr(P_i dP_i dP_i).
pub fn diagonal_trace_form(
    frame: &ProjectionFrame,
    i: usize,
    x: &FlagTangent,
    y: &FlagTangent,
) -> Result<Complex64> {
    trace_two_form(frame, i, i, i, x, y)
}

/// Signed permutations of three slots.
const SIGNED_PERMS: [([usize; 3], f64); 6] = [
    ([0, 1, 2], 1.0),
    ([1, 2, 0], 1.0),
    ([2, 0, 1], 1.0),
    ([0, 2, 1], -1.0),
    ([2, 1, 0], -1.0),
    ([1, 0, 2], -1.0),
];

/// The 3-form tr(dP_i dP_j dP_k): full signed sum over all six orderings
/// of the tangents.
pub fn trace_three_form(
    frame: &ProjectionFrame,
    i: usize,
    j: usize,
    k: usize,
    x: &FlagTangent,
    y: &FlagTangent,
    z: &FlagTangent,
) -> Result<Complex64> {
    let di = [dp(frame, i, x)?, dp(frame, i, y)?, dp(frame, i, z)?];
    let dj = [dp(frame, j, x)?, dp(frame, j, y)?, dp(frame, j, z)?];
    let dk = [dp(frame, k, x)?, dp(frame, k, y)?, dp(frame, k, z)?];
    let mut sum = Complex64::ZERO;
    for (perm, sign) in SIGNED_PERMS {
        sum += trace_product(&di[perm[0]], &dj[perm[1]], &dk[perm[2]]) * Complex64::new(sign, 0.0);
    }
    Ok(sum)
}

/// Pairing of the logarithmic 1-form (1/p_i) dp_i with a product tangent:
/// 2 pi i times the combined angular rate of the i-th character. The value
/// does not depend on the base point.
pub fn dlog_p(i: usize, v: &ProductTangent) -> Result<Complex64> {
    if i >= v.dim() {
        return Err(Error::IndexError {
            index: i,
            n: v.dim(),
        });
    }
    Ok(Complex64::new(0.0, TAU * v.angular_rate(i)))
}

/// Wedge of a 1-form with a 2-form:
/// (a ^ b)(u, v, w) = a(u) b(v, w) - a(v) b(u, w) + a(w) b(u, v).
pub fn wedge_1_2(alpha: &FormValue, beta: &FormValue) -> Result<FormValue> {
    if alpha.degree() != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            got: alpha.degree(),
        });
    }
    if beta.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: beta.degree(),
        });
    }
    let a = alpha.clone();
    let b = beta.clone();
    Ok(FormValue::new(3, move |p, v| {
        let (u, w1, w2) = (&v[0], &v[1], &v[2]);
        Ok(
            a.eval(p, std::slice::from_ref(u))? * b.eval(p, &[w1.clone(), w2.clone()])?
                - a.eval(p, std::slice::from_ref(w1))? * b.eval(p, &[u.clone(), w2.clone()])?
                + a.eval(p, std::slice::from_ref(w2))? * b.eval(p, &[u.clone(), w1.clone()])?,
        )
    }))
}

fn ensure_group_tangent(m: &CMatrix) -> Result<()> {
    ensure_square_finite(m)?;
    let skew = (m + m.adjoint()).norm();
    if skew > TOL_ALG {
        return Err(Error::InvalidTangent(format!(
            "not skew-Hermitian (residual {skew:.3e})"
        )));
    }
    let tr = m.trace().norm();
    if tr > TOL_ALG {
        return Err(Error::InvalidTangent(format!("trace is {tr:.3e}, not 0")));
    }
    Ok(())
}

/// The group three-form -(1/(24 pi^2)) tr((g^{-1} dg)^3) on left-translated
/// tangents, which are plain skew-Hermitian traceless matrices (diagonal
/// entries allowed).
pub fn basic_three_form(x: &CMatrix, y: &CMatrix, z: &CMatrix) -> Result<Complex64> {
    for m in [x, y, z] {
        ensure_group_tangent(m)?;
    }
    if x.nrows() != y.nrows() || y.nrows() != z.nrows() {
        return Err(Error::InvalidTangent("tangent dimensions differ".into()));
    }
    let slots = [x, y, z];
    let mut sum = Complex64::ZERO;
    for (perm, sign) in SIGNED_PERMS {
        sum += trace_product(slots[perm[0]], slots[perm[1]], slots[perm[2]])
            * Complex64::new(sign, 0.0);
    }
    Ok(sum * Complex64::new(-1.0 / (24.0 * std::f64::consts::PI.powi(2)), 0.0))
}
