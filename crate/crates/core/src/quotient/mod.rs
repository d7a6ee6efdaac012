//! Quotients by strongly regular relations, classical Lie algebras and the
//! linear-algebra oracle for single-valued structures.

mod algebra;
mod build;
mod field;
mod linear;

pub use algebra::{subspace_dim, DerivedSeries, FiniteLieAlgebra, DEFAULT_SERIES_DEPTH};
pub use build::{quotient_field, quotient_lie_algebra};
pub use field::FiniteField;
pub use linear::{reduce_mod, row_reduce, vector_name, LieConstants, LinearModel, Vector};
