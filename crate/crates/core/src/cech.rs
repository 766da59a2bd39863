//! Finite model of the fibre products of a cover and the alternating
//! coboundary acting on functions of fibre tuples.
//!
//! A tuple holds one base point and p lifts of it, all of the same kind.
//! Cochains evaluate tuples into an abelian value type (integers, reals,
//! complex numbers, or forms already evaluated on fixed tangents); the
//! coboundary of a p-cochain eats a (p+1)-tuple by the usual alternating
//! sum over omitted entries. Only evaluation is modelled, so the complex
//! stays finite and testable.

use num_traits::Zero;
use std::ops::{Add, Sub};
use std::sync::Arc;

use crate::cover::{XtLift, YtPoint, ZPoint};
use crate::error::{Error, Result};
use crate::linalg::{ProjectionFrame, TorusPoint};
use crate::tol::TOL_ALG;

/// Base point of a fibre tuple.
#[derive(Debug, Clone)]
pub enum BaseTag {
    Torus(TorusPoint),
    TorusFlag(TorusPoint, ProjectionFrame),
}

impl BaseTag {
    pub fn torus(&self) -> &TorusPoint {
        match self {
            BaseTag::Torus(t) => t,
            BaseTag::TorusFlag(t, _) => t,
        }
    }

    pub fn frame(&self) -> Option<&ProjectionFrame> {
        match self {
            BaseTag::Torus(_) => None,
            BaseTag::TorusFlag(_, f) => Some(f),
        }
    }
}

/// One lift of the base point into a cover.
#[derive(Debug, Clone)]
pub enum Lift {
    /// Coordinate lift.
    X(XtLift),
    /// Cut point off the spectrum of the base.
    Z(ZPoint),
    /// Point of the fibre product of both covers.
    XZ(XtLift, ZPoint),
}

impl Lift {
    fn kind(&self) -> &'static str {
        match self {
            Lift::X(_) => "coordinate-lift",
            Lift::Z(_) => "cut-circle",
            Lift::XZ(_, _) => "fibre-product",
        }
    }

    fn check_over(&self, base: &TorusPoint) -> Result<()> {
        match self {
            Lift::X(x) => check_projects(x, base),
            Lift::Z(z) => YtPoint::new(*z, base.clone()).map(|_| ()),
            Lift::XZ(x, z) => {
                check_projects(x, base)?;
                YtPoint::new(*z, base.clone()).map(|_| ())
            }
        }
    }

    pub fn x(&self) -> Option<&XtLift> {
        match self {
            Lift::X(x) | Lift::XZ(x, _) => Some(x),
            Lift::Z(_) => None,
        }
    }

    pub fn z(&self) -> Option<&ZPoint> {
        match self {
            Lift::Z(z) | Lift::XZ(_, z) => Some(z),
            Lift::X(_) => None,
        }
    }
}

fn check_projects(x: &XtLift, t: &TorusPoint) -> Result<()> {
    if x.dim() != t.dim() {
        return Err(Error::InvalidValue("lift dimension mismatch".into()));
    }
    let projected = x.project();
    let residual = (0..t.dim())
        .map(|k| (projected.entry(k) - t.entry(k)).norm())
        .fold(0.0f64, f64::max);
    if residual > TOL_ALG {
        return Err(Error::FiberMismatch { residual });
    }
    Ok(())
}

/// An element of the p-fold fibre product of a cover over its base.
#[derive(Debug, Clone)]
pub struct FiberTuple {
    base: BaseTag,
    lifts: Vec<Lift>,
}

impl FiberTuple {
    pub fn new(base: BaseTag, lifts: Vec<Lift>) -> Result<Self> {
        if lifts.is_empty() {
            return Err(Error::InvalidValue("a fibre tuple needs p >= 1".into()));
        }
        let kind = lifts[0].kind();
        for lift in &lifts {
            if lift.kind() != kind {
                return Err(Error::InvalidValue(format!(
                    "mixed lift kinds in one tuple: {} vs {}",
                    kind,
                    lift.kind()
                )));
            }
            lift.check_over(base.torus())?;
        }
        Ok(Self { base, lifts })
    }

    pub fn arity(&self) -> usize {
        self.lifts.len()
    }

    pub fn base(&self) -> &BaseTag {
        &self.base
    }

    pub fn lift(&self, i: usize) -> &Lift {
        &self.lifts[i]
    }

    /// Drops the i-th lift (0-based), keeping the base. For a pair,
    /// omitting the first entry leaves the second and vice versa.
    pub fn face(&self, i: usize) -> Result<FiberTuple> {
        if self.arity() < 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: self.arity(),
            });
        }
        if i >= self.arity() {
            return Err(Error::IndexError {
                index: i,
                n: self.arity(),
            });
        }
        let mut lifts = self.lifts.clone();
        lifts.remove(i);
        Ok(FiberTuple {
            base: self.base.clone(),
            lifts,
        })
    }
}

/// Value types the coboundary can act on.
pub trait CochainValue:
    Clone + Zero + Add<Output = Self> + Sub<Output = Self> + Send + Sync + 'static
{
}

impl<T> CochainValue for T where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + Send + Sync + 'static
{
}

type CochainEval<V> = dyn Fn(&FiberTuple) -> Result<V> + Send + Sync;

/// A p-cochain: a total evaluator on valid tuples of arity p.
#[derive(Clone)]
pub struct Cochain<V> {
    arity: usize,
    eval: Arc<CochainEval<V>>,
}

impl<V: CochainValue> Cochain<V> {
    pub fn new(
        arity: usize,
        eval: impl Fn(&FiberTuple) -> Result<V> + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "cochain arity must be at least 1");
        Self {
            arity,
            eval: Arc::new(eval),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, tuple: &FiberTuple) -> Result<V> {
        if tuple.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: tuple.arity(),
            });
        }
        (self.eval)(tuple)
    }

    /// The coboundary: delta(c) on a (p+1)-tuple is the alternating sum of
    /// c over the p+1 faces, starting with a plus sign for the face that
    /// omits the first lift.
    pub fn delta(&self) -> Cochain<V> {
        let inner = self.clone();
        Cochain::new(self.arity + 1, move |tuple| {
            let mut acc = V::zero();
            for i in 0..tuple.arity() {
                let value = inner.eval(&tuple.face(i)?)?;
                acc = if i % 2 == 0 { acc + value } else { acc - value };
            }
            Ok(acc)
        })
    }
}

/// delta(delta(c)) evaluated on one tuple; zero for every cochain.
pub fn delta_squared<V: CochainValue>(c: &Cochain<V>, tuple: &FiberTuple) -> Result<V> {
    c.delta().delta().eval(tuple)
}
