//! Fundamental relations on finite Lie hyperalgebras.
//!
//! Structures are stored as dense set-valued tables over small carriers.
//! The relation engine enumerates bounded hyperbracket expressions, the
//! quotient layer turns strongly regular partitions into classical Lie
//! algebras, and the analysis layer checks parts, transitivity and
//! minimality by brute force.

#![no_std]

extern crate alloc;
#[cfg(feature = "parallel")]
extern crate std;

pub mod analysis;
pub mod error;
mod par;
pub mod quotient;
pub mod relation;
pub mod structure;
pub mod subset;

pub use error::{Error, Result};
pub use subset::Subset;
