//! Supercommutative polynomials in bosonic and fermionic variable sets.

mod basis;
mod generators;
mod monomial;
mod polarize;
mod poly;
mod reduce;

pub use basis::{basis_enumerate, cyclic_basis_enumerate};
pub use generators::{first_index_monomials, ideal_generators, quadratic_generators};
pub use monomial::{Layout, SuperMonomial};
pub use polarize::polarize;
pub use poly::SuperPoly;
pub use reduce::{reduce, reduce_poly, Signed};
