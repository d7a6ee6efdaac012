use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::relation::{Engine, ExpressionBounds, Partition, RelationKind};
use crate::structure::FiniteLieHyperalgebra;

/// Default largest `n` tried by [`relation_s`].
pub const DEFAULT_N_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    /// `𝒮 = ⋂ₙ 𝒮ₙ*`, equal to `𝒮ₘ*`.
    pub relation: Partition,
    /// First `m` with `𝒮ₘ* = 𝒮ₘ₊₁*`.
    pub m: usize,
    /// `𝒮₁*, 𝒮₂*, …` as computed, including the repeat at `m + 1`.
    pub chain: Vec<Partition>,
    /// The explicit lattice meet of the chain equals `relation`.
    pub meet_agrees: bool,
}

/// Compute `𝒮ₙ*` for `n = 1, 2, …` until two consecutive partitions agree.
pub fn relation_s(
    algebra: &FiniteLieHyperalgebra,
    bounds: &ExpressionBounds,
    n_cap: usize,
) -> Result<Stabilization> {
    relation_s_with(&Engine::default(), algebra, bounds, n_cap)
}

pub fn relation_s_with(
    engine: &Engine,
    algebra: &FiniteLieHyperalgebra,
    bounds: &ExpressionBounds,
    n_cap: usize,
) -> Result<Stabilization> {
    if n_cap < 2 {
        return Err(Error::InvalidParameter("n_cap must be at least 2".into()));
    }
    let mut chain: Vec<Partition> = Vec::new();
    for n in 1..=n_cap {
        let p = engine.closure(algebra, RelationKind::Sn(n), bounds)?;
        if let Some(prev) = chain.last() {
            if !p.refines(prev) {
                return Err(Error::Invariant(alloc::format!("S{n}* does not refine S{}*", n - 1)));
            }
            if *prev == p {
                chain.push(p.clone());
                let meet = chain.iter().skip(1).fold(chain[0].clone(), |acc, q| acc.meet(q));
                return Ok(Stabilization { meet_agrees: meet == p, relation: p, m: n - 1, chain });
            }
        }
        chain.push(p);
    }
    Err(Error::NoStabilization(n_cap))
}
