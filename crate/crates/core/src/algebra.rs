//! Shared single-qubit algebra: state vectors, Bloch-sphere geometry, and
//! 2×2 Hermitian/unitary matrix operations.
//!
//! Conventions used throughout:
//!
//! * amplitudes are [`num_complex::Complex64`] pairs `(c0, c1)` in the
//!   `{|0⟩, |1⟩}` basis, normalized at construction;
//! * the Bloch vector of `|ψ⟩` is `r⃗ = (2 Re c0*c1, 2 Im c0*c1, |c0|² − |c1|²)`;
//! * Hermitian operators are written `H = ε₀·1 + ε⃗·σ⃗` with real `ε₀`, `ε⃗`;
//! * the **angular distance** between two states is the Bloch-sphere angle
//!   `θ = 2 arccos|⟨A|B⟩| ∈ [0, π]`, twice the Fubini–Study distance;
//! * ħ = 1, so a stationary `H` evolves states by `U(t) = e^{−iHt}`.

use num_complex::Complex64;

use crate::{Error, Result};

/// Overlap / sin θ magnitudes below this are treated as exactly degenerate.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Tolerance on the anti-Hermitian residual accepted by operations that
/// require a Hermitian input.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Tolerance on `‖v⃗‖ − 1` accepted where a unit Bloch vector is required.
pub const UNIT_TOL: f64 = 1e-9;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

// ---------------------------------------------------------------------------
// Bloch vectors
// ---------------------------------------------------------------------------

/// A real 3-vector: a point on (or inside) the Bloch sphere, or the
/// coefficient vector ε⃗ of a Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector { x, y, z }
    }

    /// +x̂ unit vector.
    pub const X: BlochVector = BlochVector::new(1.0, 0.0, 0.0);
    /// +ŷ unit vector.
    pub const Y: BlochVector = BlochVector::new(0.0, 1.0, 0.0);
    /// +ẑ unit vector.
    pub const Z: BlochVector = BlochVector::new(0.0, 0.0, 1.0);
    /// The zero vector.
    pub const ZERO: BlochVector = BlochVector::new(0.0, 0.0, 0.0);

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Right-handed cross product `self × other`.
    pub fn cross(&self, other: &BlochVector) -> BlochVector {
        BlochVector::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// `v⃗ / ‖v⃗‖`; errors on the zero vector.
    pub fn normalized(&self) -> Result<BlochVector> {
        let n = self.norm();
        if !(n.is_finite() && n > DEGENERACY_TOL) {
            return Err(Error::InvalidArgument(format!(
                "cannot normalize a vector of norm {n:e}"
            )));
        }
        Ok(*self * (1.0 / n))
    }

    /// Errors unless `‖v⃗‖ = 1` within [`UNIT_TOL`].
    pub fn require_unit(&self) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidArgument(format!(
                "expected a unit vector, got norm {n}"
            )));
        }
        Ok(())
    }
}

impl std::ops::Add for BlochVector {
    type Output = BlochVector;
    fn add(self, rhs: BlochVector) -> BlochVector {
        BlochVector::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for BlochVector {
    type Output = BlochVector;
    fn sub(self, rhs: BlochVector) -> BlochVector {
        BlochVector::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for BlochVector {
    type Output = BlochVector;
    fn neg(self) -> BlochVector {
        BlochVector::new(-self.x, -self.y, -self.z)
    }
}

impl std::ops::Mul<f64> for BlochVector {
    type Output = BlochVector;
    fn mul(self, s: f64) -> BlochVector {
        BlochVector::new(self.x * s, self.y * s, self.z * s)
    }
}

// ---------------------------------------------------------------------------
// Qubit states
// ---------------------------------------------------------------------------

/// A normalized pure state `c0|0⟩ + c1|1⟩`.
///
/// The constructor normalizes, so `|c0|² + |c1|² = 1` within 1e-12 always
/// holds.  Global phase is physically irrelevant but **is** tracked: several
/// constructions promise arrival at a specific representative, not merely at
/// the ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    pub c0: Complex64,
    pub c1: Complex64,
}

impl QubitState {
    /// Builds a state from amplitudes, normalizing them.
    ///
    /// Errors if the amplitudes are non-finite or numerically zero
    /// (norm < 1e-9): such input carries no direction information.
    pub fn new(c0: Complex64, c1: Complex64) -> Result<Self> {
        let norm = (c0.norm_sqr() + c1.norm_sqr()).sqrt();
        if !norm.is_finite() {
            return Err(Error::InvalidArgument(
                "state amplitudes must be finite".into(),
            ));
        }
        if norm < DEGENERACY_TOL {
            return Err(Error::InvalidArgument(format!(
                "state amplitudes have norm {norm:e}; cannot normalize"
            )));
        }
        Ok(QubitState { c0: c0 / norm, c1: c1 / norm })
    }

    /// `|0⟩`, the north pole of the Bloch sphere.
    pub const fn basis_zero() -> Self {
        QubitState { c0: ONE, c1: ZERO }
    }

    /// `|1⟩`, the south pole of the Bloch sphere.
    pub const fn basis_one() -> Self {
        QubitState { c0: ZERO, c1: ONE }
    }

    /// Internal constructor for amplitudes already known to be normalized.
    pub(crate) fn from_normalized(c0: Complex64, c1: Complex64) -> Self {
        debug_assert!(
            (c0.norm_sqr() + c1.norm_sqr() - 1.0).abs() < 1e-9,
            "from_normalized called with norm² = {}",
            c0.norm_sqr() + c1.norm_sqr()
        );
        QubitState { c0, c1 }
    }

    pub fn norm(&self) -> f64 {
        (self.c0.norm_sqr() + self.c1.norm_sqr()).sqrt()
    }

    /// Transition probability `|⟨self|other⟩|²` (phase-invariant).
    pub fn fidelity(&self, other: &QubitState) -> f64 {
        inner_product(self, other).norm_sqr()
    }
}

/// `⟨a|b⟩`, conjugating the left argument.
pub fn inner_product(a: &QubitState, b: &QubitState) -> Complex64 {
    a.c0.conj() * b.c0 + a.c1.conj() * b.c1
}

/// The Bloch vector of a state (global-phase invariant, unit norm).
pub fn state_to_bloch(psi: &QubitState) -> BlochVector {
    let t = psi.c0.conj() * psi.c1;
    BlochVector::new(2.0 * t.re, 2.0 * t.im, psi.c0.norm_sqr() - psi.c1.norm_sqr())
}

/// The canonical representative of the ray with Bloch vector `v⃗`:
/// `c0 = cos(θ/2)` real and ≥ 0, `c1 = sin(θ/2) e^{iφ}` with `φ = atan2(y, x)`.
///
/// On the polar axis `atan2(0, 0) = 0`, so `φ := 0` there; in particular the
/// south pole maps to exactly `(0, 1)`.  Amplitude components smaller than
/// 1e-15 (pure rounding residue of `cos(π/2)`) are snapped to zero so the
/// poles come out exact.
///
/// Errors if `v⃗` is not a unit vector within [`UNIT_TOL`].
pub fn bloch_to_state(v: &BlochVector) -> Result<QubitState> {
    v.require_unit()?;
    let theta = v.z.clamp(-1.0, 1.0).acos();
    let phi = f64::atan2(v.y, v.x);
    let snap = |x: f64| if x.abs() < 1e-15 { 0.0 } else { x };
    let c0 = Complex64::new(snap((theta / 2.0).cos()), 0.0);
    let half_sin = snap((theta / 2.0).sin());
    let c1 = Complex64::new(half_sin * phi.cos(), half_sin * phi.sin());
    Ok(QubitState::from_normalized(c0, c1))
}

/// The Bloch-sphere angle `θ = 2 arccos|⟨A|B⟩| ∈ [0, π]` between two states
/// (twice their Fubini–Study distance).
pub fn angular_distance(a: &QubitState, b: &QubitState) -> f64 {
    let overlap = inner_product(a, b).norm().clamp(0.0, 1.0);
    2.0 * overlap.acos()
}

// ---------------------------------------------------------------------------
// 2×2 complex matrices
// ---------------------------------------------------------------------------

/// A dense 2×2 complex matrix in row-major entry order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub m00: Complex64,
    pub m01: Complex64,
    pub m10: Complex64,
    pub m11: Complex64,
}

impl Matrix2 {
    pub const fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Matrix2 { m00, m01, m10, m11 }
    }

    pub const fn identity() -> Self {
        Matrix2::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Matrix2::new(ZERO, ZERO, ZERO, ZERO)
    }

    /// Conjugate transpose `M†`.
    pub fn adjoint(&self) -> Matrix2 {
        Matrix2::new(self.m00.conj(), self.m10.conj(), self.m01.conj(), self.m11.conj())
    }

    pub fn trace(&self) -> Complex64 {
        self.m00 + self.m11
    }

    pub fn determinant(&self) -> Complex64 {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.m00.norm_sqr() + self.m01.norm_sqr() + self.m10.norm_sqr() + self.m11.norm_sqr())
            .sqrt()
    }

    /// Frobenius norm of the anti-Hermitian part `(M − M†)/2`.
    pub fn hermitian_residual(&self) -> f64 {
        let d = (*self - self.adjoint()) * Complex64::new(0.5, 0.0);
        d.frobenius_norm()
    }

    /// Errors with the residual norm unless `M = M†` within `tol`.
    pub fn require_hermitian(&self, tol: f64) -> Result<()> {
        let residual = self.hermitian_residual();
        if residual > tol {
            return Err(Error::NotHermitian { residual });
        }
        Ok(())
    }

    /// Frobenius norm of `M†M − 1` (zero for unitaries).
    pub fn unitarity_residual(&self) -> f64 {
        (self.adjoint() * *self - Matrix2::identity()).frobenius_norm()
    }

    /// Raw linear action on an amplitude pair.
    pub fn apply(&self, c0: Complex64, c1: Complex64) -> (Complex64, Complex64) {
        (self.m00 * c0 + self.m01 * c1, self.m10 * c0 + self.m11 * c1)
    }

    /// Applies a (near-)unitary to a state, renormalizing the rounding dust.
    pub fn apply_state(&self, psi: &QubitState) -> QubitState {
        let (c0, c1) = self.apply(psi.c0, psi.c1);
        let norm = (c0.norm_sqr() + c1.norm_sqr()).sqrt();
        debug_assert!(
            (norm - 1.0).abs() < 1e-6,
            "apply_state used with a norm-changing matrix (norm {norm})"
        );
        QubitState::from_normalized(c0 / norm, c1 / norm)
    }
}

impl std::ops::Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.m00 + rhs.m00,
            self.m01 + rhs.m01,
            self.m10 + rhs.m10,
            self.m11 + rhs.m11,
        )
    }
}

impl std::ops::Sub for Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.m00 - rhs.m00,
            self.m01 - rhs.m01,
            self.m10 - rhs.m10,
            self.m11 - rhs.m11,
        )
    }
}

impl std::ops::Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.m00 * rhs.m00 + self.m01 * rhs.m10,
            self.m00 * rhs.m01 + self.m01 * rhs.m11,
            self.m10 * rhs.m00 + self.m11 * rhs.m10,
            self.m10 * rhs.m01 + self.m11 * rhs.m11,
        )
    }
}

impl std::ops::Mul<Complex64> for Matrix2 {
    type Output = Matrix2;
    fn mul(self, s: Complex64) -> Matrix2 {
        Matrix2::new(self.m00 * s, self.m01 * s, self.m10 * s, self.m11 * s)
    }
}

impl std::ops::Mul<f64> for Matrix2 {
    type Output = Matrix2;
    fn mul(self, s: f64) -> Matrix2 {
        self * Complex64::new(s, 0.0)
    }
}

/// `|p⟩⟨q|` as a matrix.
pub fn outer_product(p: &QubitState, q: &QubitState) -> Matrix2 {
    Matrix2::new(
        p.c0 * q.c0.conj(),
        p.c0 * q.c1.conj(),
        p.c1 * q.c0.conj(),
        p.c1 * q.c1.conj(),
    )
}

/// Eigenvalues of a Hermitian 2×2 matrix, returned as `(E₊, E₋)` with
/// `E₊ ≥ E₋`:
///
/// ```text
/// E± = (s + u)/2 ± ½√((s − u)² + 4|m10|²),   s = M₀₀, u = M₁₁.
/// ```
///
/// Errors if the matrix is not Hermitian within [`HERMITICITY_TOL`].
pub fn eigen2(m: &Matrix2) -> Result<(f64, f64)> {
    m.require_hermitian(HERMITICITY_TOL)?;
    let s = m.m00.re;
    let u = m.m11.re;
    let gap = ((s - u).powi(2) + 4.0 * m.m10.norm_sqr()).sqrt();
    let mean = (s + u) / 2.0;
    Ok((mean + gap / 2.0, mean - gap / 2.0))
}

// ---------------------------------------------------------------------------
// Pauli form and stationary evolution
// ---------------------------------------------------------------------------

/// A Hermitian operator in Pauli form, `H = ε₀·1 + ε⃗·σ⃗`.
///
/// The eigenvalues are `ε₀ ± ‖ε⃗‖`, so the spectral gap is `2‖ε⃗‖` and the
/// rotation axis on the Bloch sphere is `ε⃗/‖ε⃗‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliOperator {
    /// Coefficient of the identity.
    pub eps0: f64,
    /// Real coefficient vector of `(σx, σy, σz)`.
    pub eps: BlochVector,
}

impl PauliOperator {
    pub const fn new(eps0: f64, eps: BlochVector) -> Self {
        PauliOperator { eps0, eps }
    }

    /// The dense matrix `ε₀·1 + ε⃗·σ⃗`.
    pub fn matrix(&self) -> Matrix2 {
        Matrix2::new(
            Complex64::new(self.eps0 + self.eps.z, 0.0),
            Complex64::new(self.eps.x, -self.eps.y),
            Complex64::new(self.eps.x, self.eps.y),
            Complex64::new(self.eps0 - self.eps.z, 0.0),
        )
    }

    /// Eigenvalues `(E₊, E₋) = (ε₀ + ‖ε⃗‖, ε₀ − ‖ε⃗‖)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let e = self.eps.norm();
        (self.eps0 + e, self.eps0 - e)
    }

    /// The spectral gap `E₊ − E₋ = 2‖ε⃗‖`.
    pub fn gap(&self) -> f64 {
        2.0 * self.eps.norm()
    }
}

/// Splits a Hermitian matrix into Pauli components.
///
/// Errors if the input is not Hermitian within [`HERMITICITY_TOL`],
/// reporting the anti-Hermitian residual norm.  The imaginary rounding dust
/// on the extracted components (≤ tolerance) is discarded, so composing the
/// result reproduces the input within 1e-12.
pub fn pauli_decompose(m: &Matrix2) -> Result<PauliOperator> {
    m.require_hermitian(HERMITICITY_TOL)?;
    let eps0 = (m.m00.re + m.m11.re) / 2.0;
    let eps = BlochVector::new(
        (m.m01.re + m.m10.re) / 2.0,
        (m.m10.im - m.m01.im) / 2.0,
        (m.m00.re - m.m11.re) / 2.0,
    );
    Ok(PauliOperator::new(eps0, eps))
}

/// The stationary propagator `U(t) = e^{−iHt}` in closed form:
///
/// ```text
/// U(t) = e^{−iε₀t} [cos(εt)·1 − i sin(εt) (ε⃗/ε)·σ⃗],   ε = ‖ε⃗‖,
/// ```
///
/// with `U(t) = e^{−iε₀t}·1` when `ε⃗ = 0`.  Exactly unitary up to rounding:
/// `‖U†U − 1‖_F < 1e-12` and `det U = e^{−2iε₀t}`.
pub fn evolve_closed_form(h: &PauliOperator, t: f64) -> Matrix2 {
    let phase = (-I * (h.eps0 * t)).exp();
    let eps = h.eps.norm();
    if eps == 0.0 {
        return Matrix2::identity() * phase;
    }
    let n = h.eps * (1.0 / eps);
    let (c, s) = ((eps * t).cos(), (eps * t).sin());
    let m = Matrix2::new(
        Complex64::new(c, -s * n.z),
        Complex64::new(-s * n.y, -s * n.x),
        Complex64::new(s * n.y, -s * n.x),
        Complex64::new(c, s * n.z),
    );
    m * phase
}

/// The energy uncertainty `ΔE = √(⟨ψ|H²|ψ⟩ − ⟨ψ|H|ψ⟩²)`.
///
/// Evaluated as the norm of the mean-shifted image, `‖(H − ⟨H⟩)ψ‖`: for
/// Hermitian `H` this is the same variance written as a manifestly
/// nonnegative sum of squares, so it keeps full precision even when `ΔE`
/// is tiny against a large trace offset (where `‖Hψ‖² − ⟨H⟩²` would cancel
/// catastrophically).
///
/// Invariant under `H → H + c·1` and bounded by half the spectral gap,
/// `0 ≤ ΔE ≤ ‖ε⃗‖`, with equality exactly when `ψ` is an equal-weight
/// superposition of the two eigenstates.
pub fn energy_uncertainty(h: &PauliOperator, psi: &QubitState) -> f64 {
    let (h0, h1) = h.matrix().apply(psi.c0, psi.c1);
    let mean = (psi.c0.conj() * h0 + psi.c1.conj() * h1).re;
    let d0 = h0 - psi.c0 * mean;
    let d1 = h1 - psi.c1 * mean;
    (d0.norm_sqr() + d1.norm_sqr()).sqrt()
}
