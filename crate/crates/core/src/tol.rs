//! Tolerance constants used for validation and by the verification suites.
//!
//! Two classes of thresholds appear throughout the crate. Algebraic
//! tolerances bound accumulated f64 rounding in products of small dense
//! matrices (n <= 8). Geometric tolerances keep circle points a safe
//! angular distance away from branch cuts and eigenvalues, where the
//! implemented maps are discontinuous.

/// Algebraic validation tolerance for invariants of matrices, torus points
/// and integer roundings. Double-precision accumulation over rank n <= 8
/// stays several orders of magnitude below this.
pub const TOL_ALG: f64 = 1e-9;

/// Minimum angular separation (radians) from a branch cut or an eigenvalue.
/// Operations reject rather than silently pick a side of the cut.
pub const TOL_CUT: f64 = 1e-8;

/// Construction tolerance for lift coordinates that must sum to zero
/// exactly. Samplers subtract the mean, so only rounding noise remains.
pub const TOL_SUM_ZERO: f64 = 1e-12;

/// Residual tolerance for the trace-form identity suites.
pub const TOL_IDENTITY: f64 = 1e-9;

/// Residual tolerance for root-space evaluations.
pub const TOL_ROOT_SPACE: f64 = 1e-10;

/// Residual tolerance for the three-curvature comparison (assembled
/// exterior derivatives accumulate slightly more rounding).
pub const TOL_THREE_CURVATURE: f64 = 1e-8;

/// Residual tolerance for finite-difference diagnostics (central
/// differences with step `FD_STEP`).
pub const TOL_FINITE_DIFF: f64 = 1e-6;

/// Step used by finite-difference diagnostics.
pub const FD_STEP: f64 = 1e-5;

/// Tolerance for the Chern-number quadrature at mesh order 32.
pub const TOL_CHERN: f64 = 1e-6;

/// Tolerance for quadrature self-calibration and convergence checks.
pub const TOL_QUADRATURE: f64 = 1e-8;

/// Tolerance on the restriction of the group three-form to diagonal
/// tangents, which cancels exactly up to rounding.
pub const TOL_EXACT_CANCEL: f64 = 1e-12;

/// Minimum distance of the holonomy ratio from 1 for the obstruction check.
pub const HOLONOMY_GAP: f64 = 0.1;

/// Tolerance for spectrum comparisons.
pub const TOL_SPECTRUM: f64 = 1e-10;
