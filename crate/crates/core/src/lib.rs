//! Time-optimal stationary Hamiltonian evolutions for a single qubit.
//!
//! Given two points on the Bloch sphere and an energy budget, this crate
//! constructs the time-independent Hamiltonian that carries one state into
//! the other along a great-circle (geodesic) arc in the least possible time,
//! and verifies the construction against an independent numerical integrator.
//!
//! Two equivalent constructions are provided:
//!
//! * [`mostafazadeh`] — fixes the energy uncertainty ΔE = E and produces the
//!   traceless generator `H = (E/sin θ) (â × b̂)·σ⃗`, where `â`, `b̂` are the
//!   Bloch vectors of the endpoints and θ is the angle between them.  The
//!   minimal passage time is `τ_min = arccos|⟨A|B⟩| / E` (ħ = 1).
//! * [`bender`] — fixes the eigenvalue gap ω of a 2×2 Hermitian matrix
//!   parametrised as `[[s, r e^{−iθ}], [r e^{iθ}, u]]` and minimises the
//!   arrival time at a target amplitude, landing on `r = ω/2`, `s = u` with
//!   `τ_min = (2/ω) arcsin|b|`.
//!
//! With the identification ω = 2E the two Hamiltonians coincide up to a
//! multiple of the identity, which only contributes a global phase; the
//! [`equivalence`] module checks this entrywise and in time.  The [`oracle`]
//! module integrates the Schrödinger equation with a fixed-step RK4 scheme —
//! sharing no code path with the closed-form propagators — and measures path
//! lengths, geodesic efficiency, and first-arrival times.
//!
//! Throughout, ħ = 1 and the Fubini–Study distance between rays is
//! `arccos|⟨A|B⟩|`, i.e. half the angular distance between Bloch vectors.
//!
//! # Example
//!
//! Drive `|0⟩` to `(|0⟩ + |1⟩)/√2` with energy uncertainty `E = 1`: the
//! optimal generator is `σy`, the passage takes `π/4`, and the evolved state
//! arrives with unit fidelity.
//!
//! ```
//! use bloch_geodesic::algebra::{evolve_closed_form, QubitState};
//! use bloch_geodesic::{mostafazadeh, Complex64};
//!
//! let a = QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?;
//! let b = QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))?;
//!
//! let plan = mostafazadeh::optimal_plan_between(&a, &b, 1.0)?;
//! assert!((plan.tau_min - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
//!
//! let arrived = evolve_closed_form(&plan.hamiltonian, plan.tau_min).apply_state(&a);
//! assert!(arrived.fidelity(&b) > 1.0 - 1e-12);
//! # Ok::<(), bloch_geodesic::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod bender;
pub mod equivalence;
mod error;
pub mod mostafazadeh;
pub mod oracle;

pub use error::{Error, Result};

/// Re-export of the complex scalar type used throughout the public API.
pub use num_complex::Complex64;
