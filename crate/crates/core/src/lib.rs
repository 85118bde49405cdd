//! Coinvariant rings of dihedral and cyclic groups in bosonic and fermionic
//! variable sets: closed-form character and Hilbert series, monomial bases
//! with a straightening rewriter, and a brute-force invariant-theory oracle.

mod error;

pub mod chartab;
pub mod grading;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod superring;
pub mod symfunc;

pub use chartab::{CharLabel, Cyclotomic, GroupElement};
pub use error::{Error, Result};
pub use grading::GradingPoly;
pub use scalar::Scalar;
pub use series::{CharacterSeries, GradedDims, GroupKind};
pub use superring::{Layout, SuperMonomial, SuperPoly};
pub use symfunc::Partition;
