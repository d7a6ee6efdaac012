use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{Engine, ExpressionBounds, Mode, Partition};
use crate::error::{Error, Result};
use crate::structure::FiniteLieHyperalgebra;

/// Which relation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    L,
    A,
    Sn(usize),
    /// α on the scalar hyperfield.
    Alpha,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::L => write!(f, "L"),
            RelationKind::A => write!(f, "A"),
            RelationKind::Sn(n) => write!(f, "S{n}"),
            RelationKind::Alpha => write!(f, "alpha"),
        }
    }
}

/// How far a computed partition can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatusMode {
    /// Equal to an independently computed exact answer.
    ExactOracleMatch,
    /// Unchanged over two consecutive escalations, or already all-pairs.
    StabilizedHeuristic,
    /// Neither; the last computed bounds are reported.
    BoundLimited,
}

impl StatusMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            StatusMode::ExactOracleMatch => "exact-oracle-match",
            StatusMode::StabilizedHeuristic => "stabilized-heuristic",
            StatusMode::BoundLimited => "bound-limited",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationStatus {
    pub mode: StatusMode,
    pub bounds_used: ExpressionBounds,
    /// Class counts at each bound setting tried, in order.
    pub history: Vec<(ExpressionBounds, usize)>,
    /// The escalation stopped early because the next step exceeded the
    /// engine's work limit.
    pub hit_work_limit: bool,
}

impl Engine {
    /// Closure of one relation at fixed bounds.
    pub fn closure(
        &self,
        algebra: &FiniteLieHyperalgebra,
        kind: RelationKind,
        bounds: &ExpressionBounds,
    ) -> Result<Partition> {
        let r = match kind {
            RelationKind::L => self.algebra_family(algebra, Mode::Identity, bounds)?.relation(),
            RelationKind::A => self.algebra_family(algebra, Mode::Gated(1), bounds)?.relation(),
            RelationKind::Sn(n) => self.algebra_family(algebra, Mode::Gated(n), bounds)?.relation(),
            RelationKind::Alpha => self.relation_alpha(algebra.field(), bounds)?,
        };
        r.closure()
    }

    /// Closure at `start`, then at each step of the escalation ladder up to
    /// `cap`, stopping on an oracle match, on stabilization (two
    /// consecutive unchanged escalations, or the all-pairs partition), at
    /// the cap, or when the next step would exceed the work limit.
    pub fn relation_with_escalation(
        &self,
        algebra: &FiniteLieHyperalgebra,
        kind: RelationKind,
        start: &ExpressionBounds,
        cap: &ExpressionBounds,
        oracle: Option<&Partition>,
    ) -> Result<(Partition, RelationStatus)> {
        let ladder = start.ladder(cap)?;
        let mut history = Vec::new();
        let mut current: Option<Partition> = None;
        let mut unchanged = 0;
        let mut hit_work_limit = false;
        for bounds in &ladder {
            let p = match self.closure(algebra, kind, bounds) {
                Ok(p) => p,
                Err(Error::WorkLimit { .. }) if current.is_some() => {
                    hit_work_limit = true;
                    break;
                }
                Err(e) => return Err(e),
            };
            history.push((*bounds, p.num_classes()));
            if let Some(prev) = &current {
                if !prev.refines(&p) {
                    return Err(Error::Invariant(format!("{kind} partition at {bounds} does not coarsen the previous one")));
                }
                unchanged = if *prev == p { unchanged + 1 } else { 0 };
            }
            let status = |mode| RelationStatus { mode, bounds_used: *bounds, history: history.clone(), hit_work_limit };
            if oracle.is_some_and(|o| *o == p) {
                return Ok((p, status(StatusMode::ExactOracleMatch)));
            }
            if p.is_full() || unchanged >= 2 {
                return Ok((p, status(StatusMode::StabilizedHeuristic)));
            }
            current = Some(p);
        }
        let bounds_used = history.last().map(|h| h.0).unwrap_or(*start);
        let p = current.expect("at least one bound setting is computed");
        Ok((p, RelationStatus { mode: StatusMode::BoundLimited, bounds_used, history, hit_work_limit }))
    }
}

pub fn relation_with_escalation(
    algebra: &FiniteLieHyperalgebra,
    kind: RelationKind,
    start: &ExpressionBounds,
    cap: &ExpressionBounds,
    oracle: Option<&Partition>,
) -> Result<(Partition, RelationStatus)> {
    Engine::default().relation_with_escalation(algebra, kind, start, cap, oracle)
}
