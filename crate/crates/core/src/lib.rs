//! Numerical verification engine for trace-form, cocycle and holonomy
//! identities attached to unitary projection frames.
//!
//! The crate models points of the flag manifold SU(n)/T as frames of
//! rank-1 projections, evaluates the differential forms built from them
//! exactly through commutators, implements branch-cut circle logarithms
//! and the integer cocycles they generate, runs the alternating coboundary
//! on finite fibre tuples, and integrates 2-forms over embedded spheres
//! with product Gauss-Legendre quadrature. Named check suites bundle the
//! identities into machine-readable reports; see [`suites::run_suite`].

pub mod cech;
pub mod cover;
pub mod error;
pub mod forms;
pub mod gerbe;
pub mod holonomy;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod suites;
pub mod tol;

pub use cech::{BaseTag, Cochain, FiberTuple, Lift};
pub use cover::{
    branch_log, branch_winding, crossing_sign, lift_offset, lift_offsets, weyl_map, FiberPairXY,
    XtLift, YtPoint, ZPoint,
};
pub use error::{Error, Result};
pub use forms::{
    basic_three_form, diagonal_trace_form, dlog_p, dp, trace_three_form, trace_two_form, wedge_1_2,
    FormValue, Point, ProductTangent,
};
pub use gerbe::{
    basic_curvature, basic_curving_long, basic_curving_reduced, basic_three_curvature_long,
    basic_three_curvature_reduced, beta_form, dbeta_form, trivializing_curvature, weyl_curvature,
    weyl_curving, weyl_three_curvature, ConnectiveData, CoverTag,
};
pub use holonomy::{
    chern_number, holonomy_ratio, integrate_2form, integrate_beta_sigma, sigma_torus_point,
    QuadratureMesh, SphereChart,
};
pub use linalg::{
    principal_angle, root_vector, spectrum, spectrum_distance, CMatrix, FlagTangent,
    ProjectionFrame, SpecialUnitary, TorusPoint, TorusTangent,
};
pub use report::{Check, CheckStatus, SuiteReport};
pub use suites::{run_suite, Suite, SuiteConfig};
