//! Hardy-type nonlocality certification for bipartite mixed states.
//!
//! Given a density operator `σ` on `C^d1 ⊗ C^d2` and a pure candidate state
//! `ψ` whose Schmidt decomposition has two distinct weights, the crate
//! computes the trace distance `ε = D(σ, |ψ⟩⟨ψ|)`, the Hardy parameter `a`
//! of the candidate, and reports whether `6ε < a`. When that holds, no local
//! realistic model reproduces the statistics of `σ` on the Hardy observables.
//!
//! The [`lhv`] module is an independent check: it decides by linear
//! programming whether the behavior of `σ` on the four Hardy observables is a
//! mixture of the 81 deterministic local strategies.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod certify;
pub mod eigen;
mod error;
pub mod lhv;
pub mod matrix;
pub mod observables;
#[cfg(feature = "sampling")]
pub mod sampling;
pub mod schmidt;
pub mod simplex;
pub mod state;

pub use certify::{
    candidate_from_state, certify, noise_threshold, trace_distance, CertificationReport,
    NoiseThresholdReport, Verdict, CERTIFICATION_TOL,
};
pub use eigen::{hermitian_eig, trace_norm, EigenSystem};
pub use error::{Error, Result};
pub use lhv::{
    behavior_from_state, enumerate_strategies, lhv_feasible, Behavior, DeterministicStrategy,
    LhvResult, DEFAULT_LHV_TOL,
};
pub use matrix::{partial_trace, tensor_product, ComplexMatrix, Subsystem};
pub use num_complex::Complex64;
pub use observables::{
    build_bases, build_observables, build_rotations, hardy_parameter_a, hardy_probability_table,
    joint_probability, HardyObservableSet, HardyProbabilityTable, MeasurementBases, Observable,
    ObservableLabel, Outcome, RotationPair,
};
pub use schmidt::{find_hardy_pair, schmidt_decompose, HardyPair, SchmidtForm, DEFAULT_DELTA};
pub use simplex::{solve_feasibility_lp, LpOutcome};
pub use state::{validate_density, DensityOperator, StateVector};
