//! Brute-force verification of the closed forms: exact group action,
//! Reynolds averaging, graded ideal ranks, quotient dimensions, character
//! traces and basis certification.

pub mod action;
pub mod certify;
pub mod experiment;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod report;
pub mod trace;

pub use action::{diagonal_reynolds, eigen_to_real, fundamental_invariants, GroupAction};
pub use certify::{certify_basis, CertifyFailure, CertifyReport};
pub use experiment::{generator_experiment, GeneratorExperiment};
pub use hilbert::{invariant_ideal, quotient_hilbert_oracle, Coordinates, OracleHilbert};
pub use ideal::{Component, GradedIdeal};
pub use linalg::{field_rank, IntEchelon};
pub use report::{verify_cell, Mismatch, VerifyCell};
pub use trace::{basis_for, character_trace_oracle, character_traces};
