//! Parts, transitivity, stabilization and the minimality oracle.

mod lattice;
mod parts;
mod search;
mod stabilize;

pub use lattice::*;
pub use parts::*;
pub use search::*;
pub use stabilize::*;
