//! Two-qubit CHSH analysis.
//!
//! The crate computes the exact maximal CHSH value `2·√(1 + sin²θ)` of any
//! two-qubit pure state, builds measurement settings that reach it, evaluates
//! the Horodecki criterion for mixed states and carries an independent
//! multistart optimizer that searches all measurement schemes numerically.
//!
//! Everything works on fixed-size stack matrices, so the crate is `no_std`
//! and does not allocate. Build with `--no-default-features --features libm`
//! for targets without `std`.
//!
//! Basis order everywhere is `|00⟩, |01⟩, |10⟩, |11⟩` with qubit `a` (Alice)
//! as the left tensor factor.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
#![allow(clippy::needless_range_loop)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("chsh-core needs either the `std` or the `libm` feature for float math");

pub mod bell;
mod error;
pub(crate) mod math;
pub mod numerics;
pub mod optimize;
pub mod states;

pub use error::{Error, Result};

pub use bell::{
    analytic_max_violation, bell_operator, bell_spectrum, chsh_value, eta_basis, horodecki_m, landau_bound,
    max_violation_pure, optimal_settings_for, BellSpectrum, BlochVector, MeasurementScheme, Observable,
    OptimalSettings,
};
pub use numerics::{Complex, Matrix, Matrix2, Matrix4, SeededRng};
pub use optimize::{local_search, maximize_chsh, LocalSearchResult, OptResult, OptimizerConfig};
pub use states::{
    canonical_state, concurrence, correlation_matrix, entanglement_entropy, partial_trace, purity, random_density,
    random_pure, schmidt_decompose, CorrelationMatrix, DensityMatrix, LocalUnitary, PureState, SchmidtForm, Subsystem,
};
