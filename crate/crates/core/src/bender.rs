//! The fixed-gap construction of the time-optimal stationary Hamiltonian.
//!
//! Parametrise the general 2×2 Hermitian Hamiltonian as
//!
//! ```text
//! H = [[ s,        r e^{−iθ} ],
//!      [ r e^{iθ}, u         ]],      r ≥ 0,
//! ```
//!
//! with eigenvalue gap `ω = √((s − u)² + 4r²)` held fixed, and ask how fast
//! it can carry `|0⟩ = (1, 0)ᵀ` to a state whose `|1⟩`-amplitude has a given
//! magnitude `|b|`.  The evolving amplitude obeys `|b(t)| = (2r/ω) sin(ωt/2)`,
//! so the first arrival is at
//!
//! ```text
//! t = (2/ω) arcsin(ω |b| / 2r),
//! ```
//!
//! defined only when `ω|b| ≤ 2r`.  Minimising over the parameter circle
//! `(s − u)² + 4r² = ω²` puts all the budget into the coupling: `r = ω/2`,
//! `s = u`, and `τ_min = (2/ω) arcsin|b|`.
//!
//! Given a full target representative `(a, b)ᵀ`, the two remaining knobs are
//! fixed by requiring *exact* arrival at that representative — phase
//! included — rather than at the ray:
//!
//! ```text
//! s = −(ω/2)·arg(a)/arcsin|b|,       θ = arg(b) − arg(a) − 3π/2,
//! ```
//!
//! with the convention `arg(0) := 0` (relevant for antipodal targets) and θ
//! reported reduced to the principal range `(−π, π]`.  Then
//! `U(τ_min)(1, 0)ᵀ = (a, b)ᵀ` exactly, and the rotation axis is the
//! equatorial unit vector `(cos θ, sin θ, 0) = (−sin φ_B, cos φ_B, 0)`,
//! where `φ_B` is the azimuth of the target's Bloch vector.

use num_complex::Complex64;

use crate::algebra::{BlochVector, Matrix2, QubitState, DEGENERACY_TOL};
use crate::{Error, Result};

/// A complete time-optimal evolution plan at fixed spectral gap `ω`,
/// starting from `|0⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenderPlan {
    /// The optimal Hamiltonian: equal diagonal entries `s` and off-diagonal
    /// magnitude `ω/2`, so the gap is exactly `ω`.
    pub hamiltonian: Matrix2,
    /// The spectral gap.
    pub omega: f64,
    /// Minimal arrival time `(2/ω) arcsin|b|`.
    pub tau_min: f64,
    /// Off-diagonal phase θ, reduced to `(−π, π]`.
    pub theta_param: f64,
    /// Unit rotation axis `(cos θ, sin θ, 0)`; always equatorial.
    pub axis: BlochVector,
}

/// Principal representative of an angle in `(−π, π]`.
fn principal_angle(x: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let r = x.rem_euclid(two_pi);
    if r > std::f64::consts::PI {
        r - two_pi
    } else {
        r
    }
}

/// `arg z` with the convention `arg(0) := 0`, and `−π` folded to `+π` so the
/// result always lies in `(−π, π]`.
fn arg_or_zero(z: Complex64) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        return 0.0;
    }
    let a = z.arg();
    if a == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

fn require_positive_gap(omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "spectral gap must be positive and finite, got {omega}"
        )));
    }
    Ok(())
}

/// The general fixed-gap Hamiltonian `[[s, r e^{−iθ}], [r e^{iθ}, u]]`.
pub fn hamiltonian_from_params(r: f64, s: f64, u: f64, theta: f64) -> Matrix2 {
    let off = Complex64::from_polar(r, theta);
    Matrix2::new(
        Complex64::new(s, 0.0),
        off.conj(),
        off,
        Complex64::new(u, 0.0),
    )
}

/// First time at which the `|1⟩`-amplitude magnitude reaches `b_mod`,
/// starting from `|0⟩` under `hamiltonian_from_params(r, s, u, ·)`:
///
/// ```text
/// t = (2/ω) arcsin(ω·b_mod / 2r),    ω = √((s − u)² + 4r²).
/// ```
///
/// The off-diagonal phase θ does not enter.  Errors
/// [`Error::UnreachableTarget`] when `ω·b_mod > 2r` — the evolution's
/// amplitude never climbs that high — and rejects `r ≤ 0` or `b_mod`
/// outside `[0, 1]`.
pub fn arrival_time(r: f64, s: f64, u: f64, b_mod: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "coupling magnitude must be positive and finite, got {r}"
        )));
    }
    if !(s.is_finite() && u.is_finite()) {
        return Err(Error::InvalidArgument(
            "diagonal entries must be finite".into(),
        ));
    }
    if !(0.0..=1.0).contains(&b_mod) {
        return Err(Error::InvalidArgument(format!(
            "target amplitude magnitude must lie in [0, 1], got {b_mod}"
        )));
    }
    let omega = f64::hypot(s - u, 2.0 * r);
    let ratio = omega * b_mod / (2.0 * r);
    if ratio > 1.0 {
        return Err(Error::UnreachableTarget {
            requested: b_mod,
            max_reachable: 2.0 * r / omega,
        });
    }
    Ok(2.0 / omega * ratio.asin())
}

/// Minimal arrival time over all Hamiltonians with gap `ω`:
/// `τ_min = (2/ω) arcsin(b_mod)`, attained at `r = ω/2`, `s = u`.
pub fn minimal_time(b_mod: f64, omega: f64) -> Result<f64> {
    require_positive_gap(omega)?;
    if !(0.0..=1.0).contains(&b_mod) {
        return Err(Error::InvalidArgument(format!(
            "target amplitude magnitude must lie in [0, 1], got {b_mod}"
        )));
    }
    Ok(2.0 / omega * b_mod.asin())
}

/// The time-optimal fixed-gap plan from `|0⟩` to the given target
/// representative `(a, b)ᵀ`.
///
/// Arrival is representative-exact: `optimal_unitary(plan, plan.tau_min)`
/// applied to `(1, 0)ᵀ` reproduces `(a, b)ᵀ` to machine precision, global
/// phase included (the diagonal entry `s` is spent on exactly that).
///
/// Errors [`Error::DegenerateEndpoints`] when `|b| < 1e-9`: the target ray
/// coincides with the start and no gap budget is needed.
///
/// ```
/// use bloch_geodesic::algebra::QubitState;
/// use bloch_geodesic::{bender, Complex64};
///
/// // Reach (|0⟩ + |1⟩)/√2 at gap omega = 2.
/// let target = QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))?;
/// let plan = bender::optimal_plan(&target, 2.0)?;
/// assert!((plan.tau_min - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
///
/// // Arrival is exact in the representative, global phase included.
/// let u = bender::optimal_unitary(&plan, plan.tau_min);
/// let (a, b) = u.apply(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
/// assert!((a - target.c0).norm() < 1e-15 && (b - target.c1).norm() < 1e-15);
/// # Ok::<(), bloch_geodesic::Error>(())
/// ```
pub fn optimal_plan(target: &QubitState, omega: f64) -> Result<BenderPlan> {
    require_positive_gap(omega)?;
    let b_mod = target.c1.norm().clamp(0.0, 1.0);
    if b_mod < DEGENERACY_TOL {
        return Err(Error::DegenerateEndpoints);
    }
    let arg_a = arg_or_zero(target.c0);
    let arg_b = arg_or_zero(target.c1);
    let arcsin_b = b_mod.asin();

    let s = -(omega / 2.0) * arg_a / arcsin_b;
    let theta = principal_angle(arg_b - arg_a - 3.0 * std::f64::consts::FRAC_PI_2);
    let axis = BlochVector::new(theta.cos(), theta.sin(), 0.0);

    Ok(BenderPlan {
        hamiltonian: hamiltonian_from_params(omega / 2.0, s, s, theta),
        omega,
        tau_min: 2.0 / omega * arcsin_b,
        theta_param: theta,
        axis,
    })
}

/// The optimal propagator in closed form,
///
/// ```text
/// U(t) = e^{−ist} [cos(ωt/2)·1 − i sin(ωt/2)(cos θ·σx + sin θ·σy)],
/// ```
///
/// where `s` is the (equal) diagonal entry of the plan's Hamiltonian.  At
/// `s = 0` the bracket alone gives `U(2π/ω) = −1` and `U(4π/ω) = 1` (the
/// spinor period is twice the Bloch period).
pub fn optimal_unitary(plan: &BenderPlan, t: f64) -> Matrix2 {
    let s_diag = plan.hamiltonian.m00.re;
    let phase = Complex64::from_polar(1.0, -s_diag * t);
    let (sin, cos) = (plan.omega * t / 2.0).sin_cos();
    let minus_i_sin = Complex64::new(0.0, -sin);
    Matrix2::new(
        Complex64::new(cos, 0.0),
        minus_i_sin * Complex64::from_polar(1.0, -plan.theta_param),
        minus_i_sin * Complex64::from_polar(1.0, plan.theta_param),
        Complex64::new(cos, 0.0),
    ) * phase
}
