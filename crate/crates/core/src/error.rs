use alloc::string::String;
use alloc::vec::Vec;

use crate::structure::AxiomReport;

/// Errors raised by the structure, relation, quotient and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed table `{table}`: {detail}")]
    MalformedTable { table: &'static str, detail: String },

    #[error("scalar table refers to field element {index} but the field has {field_size} elements")]
    FieldMismatch { index: usize, field_size: usize },

    #[error("carrier has {size} elements, limit is {limit}")]
    CarrierTooLarge { size: usize, limit: usize },

    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),

    #[error("empty identifier at position {0}")]
    EmptyIdentifier(usize),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("structure constants do not define a Lie algebra: {0}")]
    NotLie(String),

    #[error("generated structure failed validation")]
    AxiomFailure(AxiomReport),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("expression bounds {requested:?} exceed cap {cap:?}")]
    BoundsExceeded { requested: [u8; 4], cap: [u8; 4] },

    #[error("enumeration would exceed the work limit of {limit} evaluations")]
    WorkLimit { limit: u64 },

    #[error("relation is not symmetric: ({0}, {1}) present without its mirror")]
    NotSymmetric(usize, usize),

    #[error("quotient operation `{op}` is not well defined: {witness:?} map to distinct classes")]
    NotWellDefined { op: &'static str, witness: Vec<String> },

    #[error("{size} elements is not a power of the field order {order}")]
    NotAVectorSpace { size: usize, order: usize },

    #[error("scalar quotient is not a field: {0}")]
    NotAField(String),

    #[error("quotient field has characteristic 2")]
    CharTwoGate,

    #[error("carrier of {size} elements exceeds the exhaustive-search limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("no partition is strongly regular with a solvable quotient")]
    NoSolvableQuotient,

    #[error("S_n* partitions were still refining at n = {0}")]
    NoStabilization(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;
