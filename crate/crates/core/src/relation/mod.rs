//! The relations 𝓛, 𝒜, 𝒮ₙ and α, their closures, and strong regularity.

mod bounds;
mod engine;
mod escalate;
mod partition;
mod regular;

pub use bounds::ExpressionBounds;
pub use engine::{
    coefficient_pair_family, hyper_derived_sets, relation_a, relation_alpha, relation_l, relation_sn, Engine,
    ExprNames, Mode, PairFamily, ValuePair, DEFAULT_WORK_LIMIT,
};
pub use escalate::{relation_with_escalation, RelationKind, RelationStatus, StatusMode};
pub use partition::{BinaryRelation, EquivalenceRelation, Partition};
pub use regular::{field_regularity_witness, is_strongly_regular, regularity_witness, RegularityWitness};
