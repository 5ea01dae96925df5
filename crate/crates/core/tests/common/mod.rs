//! Shared helpers for the integration suites: an independent power-series
//! matrix exponential (the oracle the closed-form propagator is checked
//! against) and seeded random input generators.

use bloch_geodesic::algebra::{BlochVector, Matrix2, PauliOperator, QubitState};
use bloch_geodesic::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `exp(−iHt)` by scaling-and-squaring on the plain Taylor series.
///
/// Deliberately shares no code or algebra with `evolve_closed_form`: no
/// Pauli decomposition, no trigonometry — just `Σ Aᵏ/k!` with `A = −iHt`
/// halved until `‖A‖_F ≤ 1/4`, then squared back up.
pub fn series_propagator(h: &Matrix2, t: f64) -> Matrix2 {
    let a = *h * Complex64::new(0.0, -t);
    let mut halvings = 0u32;
    let mut norm = a.frobenius_norm();
    while norm > 0.25 && halvings < 60 {
        norm /= 2.0;
        halvings += 1;
    }
    let scaled = a * (0.5f64).powi(halvings as i32);

    let mut sum = Matrix2::identity();
    let mut term = Matrix2::identity();
    for k in 1..=30 {
        term = term * scaled * (1.0 / k as f64);
        sum = sum + term;
        if term.frobenius_norm() < 1e-22 {
            break;
        }
    }
    for _ in 0..halvings {
        sum = sum * sum;
    }
    sum
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point on the unit sphere.
pub fn random_unit_bloch(rng: &mut ChaCha8Rng) -> BlochVector {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    BlochVector::new(rho * phi.cos(), rho * phi.sin(), z)
}

/// Haar-ish random state: uniform ray plus a uniform global phase, so the
/// representative's phases are also exercised.
pub fn random_state(rng: &mut ChaCha8Rng) -> QubitState {
    let v = random_unit_bloch(rng);
    let half = (v.z.clamp(-1.0, 1.0)).acos() / 2.0;
    let phi = v.y.atan2(v.x);
    let gamma: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    QubitState::new(
        Complex64::from_polar(half.cos(), gamma),
        Complex64::from_polar(half.sin(), gamma + phi),
    )
    .expect("nonzero amplitudes by construction")
}

/// Random state pair whose Bloch separation stays away from both the
/// coincident and the antipodal degeneracies.
pub fn random_separated_pair(rng: &mut ChaCha8Rng) -> (QubitState, QubitState) {
    loop {
        let a = random_state(rng);
        let b = random_state(rng);
        let theta = bloch_geodesic::algebra::angular_distance(&a, &b);
        if (0.05..=std::f64::consts::PI - 0.05).contains(&theta) {
            return (a, b);
        }
    }
}

/// Random Hermitian operator with `|ε⃗|` in `[0.1, max_field]` and a trace
/// offset in `[−2, 2]`.
pub fn random_pauli(rng: &mut ChaCha8Rng, max_field: f64) -> PauliOperator {
    let eps0: f64 = rng.random_range(-2.0..2.0);
    let scale: f64 = rng.random_range(0.1..max_field);
    PauliOperator::new(eps0, random_unit_bloch(rng) * scale)
}

/// Random special unitary, as the closed-form evolution of a random
/// generator for unit time.
pub fn random_rotation(rng: &mut ChaCha8Rng) -> Matrix2 {
    let scale: f64 = rng.random_range(0.1..3.0);
    let gen = PauliOperator::new(0.0, random_unit_bloch(rng) * scale);
    bloch_geodesic::algebra::evolve_closed_form(&gen, 1.0)
}

/// Random target representative with `|b|` in the given range and both
/// component phases uniform.
pub fn random_target(rng: &mut ChaCha8Rng, b_lo: f64, b_hi: f64) -> QubitState {
    let b_mod: f64 = rng.random_range(b_lo..b_hi);
    let a_mod = (1.0 - b_mod * b_mod).max(0.0).sqrt();
    let arg_a: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    let arg_b: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    QubitState::new(
        Complex64::from_polar(a_mod, arg_a),
        Complex64::from_polar(b_mod, arg_b),
    )
    .expect("nonzero by construction")
}
