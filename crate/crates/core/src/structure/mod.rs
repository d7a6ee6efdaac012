//! Carriers, hyperoperation tables, hyperfields and Lie hyperalgebras.

mod axioms;
mod carrier;
pub mod generate;
mod hyperfield;
mod lie;
mod table;

pub use axioms::{check_hyperfield, check_hypergroup, check_lie_hyperalgebra, AxiomReport, Violation};
pub use carrier::{Carrier, DEFAULT_MAX_CARRIER};
pub use hyperfield::FiniteHyperfield;
pub use lie::FiniteLieHyperalgebra;
pub use table::HyperOpTable;
