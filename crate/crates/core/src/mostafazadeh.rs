//! The maximal-energy-uncertainty construction of the time-optimal
//! stationary Hamiltonian.
//!
//! Fix an energy scale `E > 0` and ask: among all stationary two-level
//! Hamiltonians whose energy uncertainty in the initial state is at most
//! `E`, which one carries `|A⟩` to (the ray of) `|B⟩` fastest?  The answer
//! is the generator of the great-circle rotation taking the Bloch vector
//! `â` to `b̂`:
//!
//! ```text
//! H = i E cot(θ/2) (|B⟩⟨A|/⟨A|B⟩ − |A⟩⟨B|/⟨B|A⟩)
//!   = (E / sin θ) (â × b̂)·σ⃗,                      θ = ∠(â, b̂),
//! ```
//!
//! a traceless operator with eigenvalues ±E that is maximally uncertain in
//! both endpoints (ΔE = E, saturating the half-gap bound).  Evolution runs
//! along the geodesic arc at the maximum speed allowed by the
//! Anandan–Aharonov bound, arriving at
//!
//! ```text
//! τ_min = arccos|⟨A|B⟩| / E = (θ/2) / E       (ħ = 1).
//! ```
//!
//! Both forms of `H` are projectively invariant: re-phasing either endpoint
//! representative leaves them unchanged.  The eigenframe built by
//! [`build_eigenframe`], by contrast, fixes representative phases so that
//! exact, non-projective identities such as `U(τ_min)|ψ_I⟩ = e^{iθ/2}|ψ_F⟩`
//! hold literally.

use num_complex::Complex64;

use crate::algebra::{
    angular_distance, inner_product, outer_product, pauli_decompose, state_to_bloch,
    BlochVector, Matrix2, PauliOperator, QubitState, DEGENERACY_TOL,
};
use crate::{Error, Result};

/// A complete time-optimal evolution plan at fixed energy uncertainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MostafazadehPlan {
    /// The optimal generator; traceless (`eps0 = 0` exactly) with
    /// eigenvalues ±`energy`.
    pub hamiltonian: PauliOperator,
    /// The Pauli coefficient vector `(E/sin θ)(â × b̂)`; norm `energy`.
    pub field: BlochVector,
    /// Unit rotation axis `(â × b̂)/sin θ`, normal to the great circle
    /// through the endpoints.
    pub axis: BlochVector,
    /// Minimal passage time `(θ/2)/energy`.
    pub tau_min: f64,
    /// Angular (Bloch) distance between the endpoints, in `(0, π)`.
    pub theta: f64,
    /// The energy scale `E`: half the spectral gap and the energy
    /// uncertainty in both endpoints.
    pub energy: f64,
}

fn require_positive_energy(energy: f64) -> Result<()> {
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "energy scale must be positive and finite, got {energy}"
        )));
    }
    Ok(())
}

/// Classifies a pair of states by overlap magnitude, rejecting the two
/// degenerate geometries.  Returns `(⟨A|B⟩, θ)` with `θ ∈ (0, π)`.
fn endpoint_geometry(a: &QubitState, b: &QubitState) -> Result<(Complex64, f64)> {
    let overlap = inner_product(a, b);
    let m = overlap.norm().clamp(0.0, 1.0);
    if m < DEGENERACY_TOL {
        return Err(Error::OrthogonalEndpoints);
    }
    let theta = 2.0 * m.acos();
    if theta.sin() < DEGENERACY_TOL {
        // sin θ vanishes at both ends of [0, π]; we already excluded θ ≈ π.
        return Err(Error::DegenerateEndpoints);
    }
    Ok((overlap, theta))
}

/// Orthonormal eigenframe `(ψ₁, ψ₂)` of the optimal Hamiltonian, with
/// representative phases fixed so the passage identities hold exactly.
///
/// With `θ` the angular distance and the final representative re-phased to
/// `⟨ψ_I|ψ_F⟩ = e^{−iθ/2} cos(θ/2)` (the initial representative is taken
/// as given),
///
/// ```text
/// ψ₁ = √2 (ψ_F − e^{−iθ} ψ_I) / (1 − e^{−iθ}),
/// ψ₂ = √2 (ψ_I − ψ_F) / (1 − e^{−iθ}),
/// ```
///
/// so that `ψ_I = (ψ₁ + ψ₂)/√2` and `ψ_F = (ψ₁ + e^{−iθ} ψ₂)/√2`.  The
/// optimal Hamiltonian at scale `E` is `E(|ψ₂⟩⟨ψ₂| − |ψ₁⟩⟨ψ₁|)`: `ψ₂`
/// carries `+E` and `ψ₁` carries `−E`, and both endpoints sit at the
/// equal-weight latitude, `|⟨ψ₁|A⟩| = |⟨ψ₂|A⟩| = |⟨ψ₁|B⟩| = |⟨ψ₂|B⟩| = 1/√2`.
///
/// Errors: [`Error::DegenerateEndpoints`] for coincident rays,
/// [`Error::OrthogonalEndpoints`] for (anti-)podal ones — there the frame
/// formula divides by `1 − e^{−iθ} → 0` or the overlap phase is undefined.
pub fn build_eigenframe(a: &QubitState, b: &QubitState) -> Result<(QubitState, QubitState)> {
    let (overlap, theta) = endpoint_geometry(a, b)?;

    // Re-phase the final representative: arg⟨ψI|ψF⟩ = −θ/2.
    let rephase = Complex64::from_polar(1.0, -theta / 2.0 - overlap.arg());
    let fi = (b.c0 * rephase, b.c1 * rephase);
    let denom = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -theta);
    let back = Complex64::from_polar(1.0, -theta);
    let sqrt2 = Complex64::new(std::f64::consts::SQRT_2, 0.0);

    let psi1 = QubitState::new(
        sqrt2 * (fi.0 - back * a.c0) / denom,
        sqrt2 * (fi.1 - back * a.c1) / denom,
    )?;
    let psi2 = QubitState::new(sqrt2 * (a.c0 - fi.0) / denom, sqrt2 * (a.c1 - fi.1) / denom)?;
    Ok((psi1, psi2))
}

/// The time-optimal traceless Hamiltonian at energy uncertainty `E`,
/// built from state representatives:
///
/// ```text
/// H = i E cot(θ/2) (|B⟩⟨A|/⟨A|B⟩ − |A⟩⟨B|/⟨B|A⟩).
/// ```
///
/// The result is Hermitian, exactly traceless, and has eigenvalues ±E;
/// it is invariant under re-phasing of either input.
pub fn optimal_hamiltonian(a: &QubitState, b: &QubitState, energy: f64) -> Result<PauliOperator> {
    require_positive_energy(energy)?;
    let (overlap, theta) = endpoint_geometry(a, b)?;
    let cot_half = (theta / 2.0).cos() / (theta / 2.0).sin();

    let ba = outer_product(b, a) * (Complex64::new(1.0, 0.0) / overlap);
    let ab = outer_product(a, b) * (Complex64::new(1.0, 0.0) / overlap.conj());
    let h = (ba - ab) * Complex64::new(0.0, energy * cot_half);

    // Analytically Hermitian and traceless; strip the rounding dust so the
    // identity coefficient is exactly zero.
    let p = pauli_decompose(&h)?;
    Ok(PauliOperator::new(0.0, p.eps))
}

/// The full optimal plan from Bloch-sphere data: rotation about
/// `(â × b̂)/sin θ` with field strength `E`, arriving in `(θ/2)/E`.
///
/// Errors on non-unit inputs, non-positive `E`, and (anti-)parallel
/// endpoint vectors.
pub fn optimal_plan(a_hat: &BlochVector, b_hat: &BlochVector, energy: f64) -> Result<MostafazadehPlan> {
    require_positive_energy(energy)?;
    a_hat.require_unit()?;
    b_hat.require_unit()?;

    let cross = a_hat.cross(b_hat);
    let sin_theta = cross.norm();
    let cos_theta = a_hat.dot(b_hat).clamp(-1.0, 1.0);
    if sin_theta < DEGENERACY_TOL {
        return if cos_theta > 0.0 {
            Err(Error::DegenerateEndpoints)
        } else {
            Err(Error::OrthogonalEndpoints)
        };
    }
    let theta = f64::atan2(sin_theta, cos_theta);
    let axis = cross * (1.0 / sin_theta);
    let field = cross * (energy / sin_theta);

    Ok(MostafazadehPlan {
        hamiltonian: PauliOperator::new(0.0, field),
        field,
        axis,
        tau_min: (theta / 2.0) / energy,
        theta,
        energy,
    })
}

/// Convenience wrapper: the optimal plan between two state representatives
/// (via their Bloch vectors; the construction is projectively invariant).
///
/// The separation angle and minimal time are taken from the overlap
/// `|⟨A|B⟩|` rather than from the Bloch dot product: with representatives
/// on hand the half-angle is the directly available, better-conditioned
/// datum, and the plan stays bit-consistent with [`minimal_time`] and
/// [`angular_distance`].
///
/// ```
/// use bloch_geodesic::algebra::QubitState;
/// use bloch_geodesic::{mostafazadeh, Complex64};
///
/// // North pole to the equator at phi = 0, at energy uncertainty E = 2.
/// let a = QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?;
/// let b = QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))?;
/// let plan = mostafazadeh::optimal_plan_between(&a, &b, 2.0)?;
///
/// assert!((plan.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
/// assert!((plan.tau_min - std::f64::consts::FRAC_PI_8).abs() < 1e-15);
/// assert!((plan.axis.y - 1.0).abs() < 1e-15); // rotation about +y
/// # Ok::<(), bloch_geodesic::Error>(())
/// ```
pub fn optimal_plan_between(a: &QubitState, b: &QubitState, energy: f64) -> Result<MostafazadehPlan> {
    let mut plan = optimal_plan(&state_to_bloch(a), &state_to_bloch(b), energy)?;
    plan.theta = angular_distance(a, b);
    plan.tau_min = (plan.theta / 2.0) / energy;
    Ok(plan)
}

/// The optimal propagator in closed form,
///
/// ```text
/// U(t) = cos(Et)·1 − i sin(Et) (axis·σ⃗),
/// ```
///
/// a rotation of the Bloch sphere about `plan.axis` by the angle `2Et`.
/// `U(π/E) = −1` (a full 2π Bloch rotation flips the spinor sign) and
/// `U(2π/E) = 1`.
pub fn optimal_unitary(plan: &MostafazadehPlan, t: f64) -> Matrix2 {
    let (s, c) = (plan.energy * t).sin_cos();
    let n = plan.axis;
    Matrix2::new(
        Complex64::new(c, -s * n.z),
        Complex64::new(-s * n.y, -s * n.x),
        Complex64::new(s * n.y, -s * n.x),
        Complex64::new(c, s * n.z),
    )
}

/// Minimal passage time `arccos|⟨A|B⟩| / E` between two states at energy
/// uncertainty `E` (ħ = 1).  Zero for coincident rays, `(π/2)/E` for
/// orthogonal ones.
pub fn minimal_time(a: &QubitState, b: &QubitState, energy: f64) -> Result<f64> {
    require_positive_energy(energy)?;
    Ok(angular_distance(a, b) / 2.0 / energy)
}

/// The optimal Hamiltonian with a prescribed spectrum `{E₊, E₋}` instead of
/// the symmetric `±E`:
///
/// ```text
/// H = (E₊ + E₋)/2 · 1 + i (E₊ − E₋)/2 · cot(θ/2) (|B⟩⟨A|/⟨A|B⟩ − |A⟩⟨B|/⟨B|A⟩).
/// ```
///
/// The identity part only contributes a global phase `e^{−i(E₊+E₋)t/2}` to
/// the evolution; the passage time depends on the gap alone:
/// `τ_min = 2 arccos|⟨A|B⟩| / (E₊ − E₋)`.
pub fn generalized_hamiltonian(
    a: &QubitState,
    b: &QubitState,
    e_plus: f64,
    e_minus: f64,
) -> Result<PauliOperator> {
    if !(e_plus.is_finite() && e_minus.is_finite() && e_plus > e_minus) {
        return Err(Error::InvalidArgument(format!(
            "eigenvalues must be finite with E+ > E-, got E+ = {e_plus}, E- = {e_minus}"
        )));
    }
    let base = optimal_hamiltonian(a, b, (e_plus - e_minus) / 2.0)?;
    Ok(PauliOperator::new((e_plus + e_minus) / 2.0, base.eps))
}
