//! Dense complex matrix algebra and the special-unitary / projection-frame
//! types the rest of the crate consumes.
//!
//! A projection frame is a point of the flag manifold SU(n)/T presented as
//! n mutually orthogonal rank-1 Hermitian idempotents P_1, ..., P_n summing
//! to the identity. Frames always carry the group element g that produced
//! them (P_i = g O_i g* for O_i the diagonal elementary projection), so
//! derivatives of the P_i can be evaluated exactly through commutators.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::tol::TOL_ALG;

/// Dense complex square matrix.
pub type CMatrix = DMatrix<Complex64>;

/// The complex unit 1.
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
/// The imaginary unit i.
pub const IM: Complex64 = Complex64::new(0.0, 1.0);

/// Angle of a nonzero complex number normalised to [0, 2*pi).
pub fn principal_angle(c: Complex64) -> f64 {
    let a = c.arg();
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Angular distance between two angles on the circle.
pub(crate) fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

pub(crate) fn ensure_square_finite(m: &CMatrix) -> Result<()> {
    if m.nrows() == 0 || m.nrows() != m.ncols() {
        return Err(Error::InvalidValue(format!(
            "expected a square matrix with n >= 1, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::InvalidValue("matrix has non-finite entries".into()));
    }
    Ok(())
}

fn ensure_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::IndexError { index: i, n })
    } else {
        Ok(())
    }
}

/// Element of SU(n): unitary with determinant 1, both within `TOL_ALG`.
#[derive(Debug, Clone)]
pub struct SpecialUnitary {
    m: CMatrix,
}

impl SpecialUnitary {
    pub fn new(m: CMatrix) -> Result<Self> {
        ensure_square_finite(&m)?;
        let n = m.nrows();
        let unitary_residual = (m.adjoint() * &m - CMatrix::identity(n, n)).norm();
        let det_residual = (m.determinant() - ONE).norm();
        let residual = unitary_residual.max(det_residual);
        if residual > TOL_ALG {
            return Err(Error::InvalidUnitary { residual });
        }
        Ok(Self { m })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            m: CMatrix::identity(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }
}

/// Diagonal special-unitary element: unit-modulus entries with product 1.
#[derive(Debug, Clone)]
pub struct TorusPoint {
    diag: Vec<Complex64>,
}

impl TorusPoint {
    pub fn new(diag: Vec<Complex64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidValue("torus point needs n >= 1".into()));
        }
        let mut product = ONE;
        for t in &diag {
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(Error::InvalidValue("torus entry not finite".into()));
            }
            if (t.norm() - 1.0).abs() > TOL_ALG {
                return Err(Error::InvalidValue(format!(
                    "torus entry {t} is not unit modulus"
                )));
            }
            product *= t;
        }
        if (product - ONE).norm() > TOL_ALG {
            return Err(Error::InvalidValue(format!(
                "product of torus entries is {product}, not 1"
            )));
        }
        Ok(Self { diag })
    }

    pub fn identity(n: usize) -> Self {
        Self { diag: vec![ONE; n] }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// The i-th diagonal entry (the character p_i evaluated at this point).
    pub fn entry(&self, i: usize) -> Complex64 {
        self.diag[i]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.diag
    }

    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_fn(self.dim(), self.dim(), |r, c| {
            if r == c {
                self.diag[r]
            } else {
                Complex64::ZERO
            }
        })
    }
}

/// A point of the flag manifold: rank-1 projections P_i = g O_i g*.
///
/// Only constructible from a witness g, never from raw projections.
#[derive(Debug, Clone)]
pub struct ProjectionFrame {
    witness: SpecialUnitary,
    projections: Vec<CMatrix>,
}

impl ProjectionFrame {
    /// Builds the frame (g O_1 g*, ..., g O_n g*).
    pub fn new(witness: SpecialUnitary) -> Self {
        let n = witness.dim();
        let g = witness.matrix();
        let projections = (0..n)
            .map(|i| {
                let col = g.column(i);
                // rank-1 projection onto the i-th column of g
                CMatrix::from_fn(n, n, |r, c| col[r] * col[c].conj())
            })
            .collect();
        Self {
            witness,
            projections,
        }
    }

    pub fn dim(&self) -> usize {
        self.witness.dim()
    }

    pub fn witness(&self) -> &SpecialUnitary {
        &self.witness
    }

    pub fn projection(&self, i: usize) -> &CMatrix {
        &self.projections[i]
    }

    /// Largest violation of the frame invariants: Hermiticity, idempotence,
    /// unit trace, mutual orthogonality and completeness.
    pub fn invariant_residual(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        let mut sum = CMatrix::zeros(n, n);
        for (i, p) in self.projections.iter().enumerate() {
            worst = worst.max((p - p.adjoint()).norm());
            worst = worst.max((p * p - p).norm());
            worst = worst.max((p.trace() - ONE).norm());
            for q in self.projections.iter().skip(i + 1) {
                worst = worst.max((p * q).norm());
            }
            sum += p;
        }
        worst.max((sum - CMatrix::identity(n, n)).norm())
    }
}

/// Horizontal tangent to SU(n)/T at a frame: a zero-diagonal
/// skew-Hermitian matrix X, for the curve s -> g exp(sX) T.
#[derive(Debug, Clone)]
pub struct FlagTangent {
    m: CMatrix,
}

impl FlagTangent {
    pub fn new(m: CMatrix) -> Result<Self> {
        ensure_square_finite(&m)?;
        let skew = (&m + m.adjoint()).norm();
        if skew > TOL_ALG {
            return Err(Error::InvalidTangent(format!(
                "not skew-Hermitian (residual {skew:.3e})"
            )));
        }
        let diag = (0..m.nrows())
            .map(|i| m[(i, i)].norm())
            .fold(0.0f64, f64::max);
        if diag > TOL_ALG {
            return Err(Error::InvalidTangent(format!(
                "diagonal not zero (residual {diag:.3e})"
            )));
        }
        Ok(Self { m })
    }

    /// Gauge-fixes an arbitrary matrix: skew-symmetrises and drops the
    /// diagonal (the vertical part of the tangent).
    pub fn horizontal(m: &CMatrix) -> Result<Self> {
        ensure_square_finite(m)?;
        let mut h = (m - m.adjoint()) * Complex64::new(0.5, 0.0);
        for i in 0..h.nrows() {
            h[(i, i)] = Complex64::ZERO;
        }
        Self::new(h)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            m: CMatrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|c| c.norm() == 0.0)
    }
}

/// Tangent to the torus: velocity a of s -> t exp(2 pi i s diag(a)),
/// a real vector summing to zero.
#[derive(Debug, Clone)]
pub struct TorusTangent {
    a: Vec<f64>,
}

impl TorusTangent {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        if a.is_empty() || a.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidTangent("torus tangent not finite".into()));
        }
        let sum: f64 = a.iter().sum();
        if sum.abs() > TOL_ALG {
            return Err(Error::InvalidTangent(format!(
                "components sum to {sum:.3e}, not 0"
            )));
        }
        Ok(Self { a })
    }

    pub fn zero(n: usize) -> Self {
        Self { a: vec![0.0; n] }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn component(&self, i: usize) -> f64 {
        self.a[i]
    }

    pub fn components(&self) -> &[f64] {
        &self.a
    }
}

/// Root-space tangent mu E_ij - conj(mu) E_ji (zero elsewhere).
pub fn root_vector(n: usize, i: usize, j: usize, mu: Complex64) -> Result<FlagTangent> {
    ensure_index(i, n)?;
    ensure_index(j, n)?;
    if i == j {
        return Err(Error::IndexError { index: i, n });
    }
    let mut m = CMatrix::zeros(n, n);
    m[(i, j)] = mu;
    m[(j, i)] = -mu.conj();
    FlagTangent::new(m)
}

/// Eigenvalues of a special-unitary matrix, with multiplicity, sorted by
/// angle in [0, 2*pi).
pub fn spectrum(u: &SpecialUnitary) -> Result<Vec<Complex64>> {
    let ev = u
        .matrix()
        .clone()
        .eigenvalues()
        .ok_or_else(|| Error::InvalidValue("eigenvalue iteration failed".into()))?;
    let mut out: Vec<Complex64> = ev.iter().copied().collect();
    for v in &out {
        if (v.norm() - 1.0).abs() > TOL_ALG {
            return Err(Error::InvalidValue(format!(
                "computed eigenvalue {v} is not unit modulus"
            )));
        }
    }
    out.sort_by(|a, b| principal_angle(*a).total_cmp(&principal_angle(*b)));
    Ok(out)
}

/// Distance between two angle-sorted unit spectra, compared as circular
/// multisets (minimum over cyclic alignments, so a wrap at angle 0 does
/// not split a cluster).
pub fn spectrum_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra must have equal length");
    let n = a.len();
    (0..n)
        .map(|shift| {
            (0..n)
                .map(|k| (a[k] - b[(k + shift) % n]).norm())
                .fold(0.0f64, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Matrix exponential by scaling and squaring with a Taylor tail.
pub fn exp_matrix(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    let norm = m.norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m * Complex64::new(1.0 / f64::powi(2.0, squarings as i32), 0.0);
    let mut result = CMatrix::identity(n, n);
    let mut term = CMatrix::identity(n, n);
    for k in 1..40 {
        term = &term * &scaled * Complex64::new(1.0 / k as f64, 0.0);
        result += &term;
        if term.norm() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_frame_is_diagonal() {
        let frame = ProjectionFrame::new(SpecialUnitary::identity(3));
        for i in 0..3 {
            for r in 0..3 {
                for s in 0..3 {
                    let want = if r == i && s == i {
                        ONE
                    } else {
                        Complex64::ZERO
                    };
                    assert_eq!(frame.projection(i)[(r, s)], want);
                }
            }
        }
    }

    #[test]
    fn random_frame_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let frame = sample::random_frame(4, &mut rng);
        assert!(frame.invariant_residual() < 1e-12);
    }

    #[test]
    fn rotation_frame_matches_hand_computation() {
        let a = std::f64::consts::FRAC_PI_4;
        let g = CMatrix::from_row_slice(
            2,
            2,
            &[
                c(a.cos(), 0.0),
                c(-a.sin(), 0.0),
                c(a.sin(), 0.0),
                c(a.cos(), 0.0),
            ],
        );
        let frame = ProjectionFrame::new(SpecialUnitary::new(g).unwrap());
        let p1 = frame.projection(0);
        for r in 0..2 {
            for s in 0..2 {
                assert!((p1[(r, s)] - c(0.5, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn frame_conjugation_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = sample::random_special_unitary(4, &mut rng);
        let h = sample::random_special_unitary(4, &mut rng);
        let hg = SpecialUnitary::new(h.matrix() * g.matrix()).unwrap();
        let base = ProjectionFrame::new(g);
        let moved = ProjectionFrame::new(hg);
        for i in 0..4 {
            let expect = h.matrix() * base.projection(i) * h.matrix().adjoint();
            assert!((moved.projection(i) - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.1, 0.0), c(0.0, 0.0), ONE]);
        assert!(matches!(
            SpecialUnitary::new(m),
            Err(Error::InvalidUnitary { .. })
        ));
    }

    #[test]
    fn rejects_unit_determinant_violation() {
        // unitary but det = -1
        let m = CMatrix::from_row_slice(2, 2, &[Complex64::ZERO, ONE, ONE, Complex64::ZERO]);
        assert!(matches!(
            SpecialUnitary::new(m),
            Err(Error::InvalidUnitary { .. })
        ));
    }

    #[test]
    fn root_vector_two_by_two() {
        let x = root_vector(2, 0, 1, ONE).unwrap();
        let want = CMatrix::from_row_slice(2, 2, &[Complex64::ZERO, ONE, -ONE, Complex64::ZERO]);
        assert_eq!(x.matrix(), &want);
    }

    #[test]
    fn root_vector_imaginary_entry() {
        // mu = i in slot (0, 2): the (2, 0) entry is -conj(i) = i as well
        let x = root_vector(3, 0, 2, IM).unwrap();
        assert_eq!(x.matrix()[(0, 2)], IM);
        assert_eq!(x.matrix()[(2, 0)], IM);
        assert_eq!(x.matrix()[(1, 1)], Complex64::ZERO);
        assert_eq!(x.matrix()[(0, 1)], Complex64::ZERO);
    }

    #[test]
    fn root_vector_rejects_equal_indices() {
        assert!(matches!(
            root_vector(3, 1, 1, ONE),
            Err(Error::IndexError { .. })
        ));
        assert!(matches!(
            root_vector(3, 0, 3, ONE),
            Err(Error::IndexError { .. })
        ));
    }

    #[test]
    fn spectrum_of_identity() {
        let s = spectrum(&SpecialUnitary::identity(5)).unwrap();
        for v in s {
            assert!((v - ONE).norm() < 1e-12);
        }
    }

    #[test]
    fn spectrum_of_diagonal() {
        let u = SpecialUnitary::new(TorusPoint::new(vec![IM, -IM]).unwrap().matrix()).unwrap();
        let s = spectrum(&u).unwrap();
        assert!((s[0] - IM).norm() < 1e-12);
        assert!((s[1] + IM).norm() < 1e-12);
    }

    #[test]
    fn spectrum_conjugation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = sample::random_special_unitary(2, &mut rng);
        let d = TorusPoint::new(vec![IM, -IM]).unwrap().matrix();
        let u = SpecialUnitary::new(g.matrix() * d * g.matrix().adjoint()).unwrap();
        let s = spectrum(&u).unwrap();
        let expect = [IM, -IM];
        assert!(spectrum_distance(&s, &expect) < 1e-10);
    }

    #[test]
    fn exp_matrix_matches_scalar_exponential() {
        let x = CMatrix::from_row_slice(
            2,
            2,
            &[Complex64::ZERO, c(0.0, 2.0), c(0.0, 2.0), Complex64::ZERO],
        );
        // exp of i*2*sigma_x = cos(2) I + i sin(2) sigma_x
        let e = exp_matrix(&x);
        assert!((e[(0, 0)] - c(2.0f64.cos(), 0.0)).norm() < 1e-13);
        assert!((e[(0, 1)] - c(0.0, 2.0f64.sin())).norm() < 1e-13);
    }

    #[test]
    fn spectrum_distance_handles_wrap() {
        let eps = 1e-13;
        let a = [
            Complex64::from_polar(1.0, eps),
            Complex64::from_polar(1.0, 2.0),
        ];
        let b = [
            Complex64::from_polar(1.0, 2.0),
            Complex64::from_polar(1.0, TAU - eps),
        ];
        assert!(spectrum_distance(&a, &b) < 1e-12);
    }
}
