//! Error type shared by every module in the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while planning or verifying an evolution.
///
/// Each variant maps onto one of four stable machine-readable codes (see
/// [`Error::code`]); front ends key their exit paths off the code, not the
/// message text.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The two endpoints describe the same ray, so every Hamiltonian
    /// "arrives" at t = 0 and no direction is preferred.
    #[error("initial and final states coincide (projectively); no evolution is needed")]
    DegenerateEndpoints,

    /// The endpoints are orthogonal rays.  The geodesic construction divides
    /// by ⟨A|B⟩, and the antipodal great circle is not unique.
    #[error("initial and final states are orthogonal; the eigenframe construction is singular")]
    OrthogonalEndpoints,

    /// The requested target amplitude can never be reached at the given
    /// coupling: |b(t)| ≤ 2r/ω for all t.
    #[error(
        "target amplitude {requested} is unreachable: the coupling bounds |b(t)| by {max_reachable}"
    )]
    UnreachableTarget {
        /// The |b| that was asked for.
        requested: f64,
        /// The supremum 2r/ω of reachable amplitudes.
        max_reachable: f64,
    },

    /// A matrix that must be Hermitian is not, beyond tolerance.
    #[error("matrix is not Hermitian: anti-Hermitian residual norm {residual:.3e}")]
    NotHermitian {
        /// Frobenius norm of (M − M†)/2.
        residual: f64,
    },

    /// A zero-length trajectory has no meaningful geodesic efficiency.
    #[error("trajectory has zero path length; geodesic efficiency is undefined")]
    UndefinedEfficiency,

    /// Catch-all for argument validation (non-unit vectors, non-positive
    /// energies, too few samples, and the like).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code for this error.
    ///
    /// One of `DEGENERATE_ENDPOINTS`, `ORTHOGONAL_ENDPOINTS`,
    /// `UNREACHABLE_TARGET`, `INVALID_ARGUMENT`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateEndpoints => "DEGENERATE_ENDPOINTS",
            Error::OrthogonalEndpoints => "ORTHOGONAL_ENDPOINTS",
            Error::UnreachableTarget { .. } => "UNREACHABLE_TARGET",
            Error::NotHermitian { .. } | Error::UndefinedEfficiency | Error::InvalidArgument(_) => {
                "INVALID_ARGUMENT"
            }
        }
    }
}
