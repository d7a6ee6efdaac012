//! Relation computation with oracle checks and escalation, shared by the
//! commands.

use hyperlie_core::quotient::{FiniteField, LinearModel};
use hyperlie_core::relation::{Engine, ExpressionBounds, Partition, RelationKind, RelationStatus, StatusMode};
use hyperlie_core::structure::FiniteLieHyperalgebra;

use crate::CliError;

/// Parse `--rel` together with `--n`. `Sn:k` is accepted as a spelling of
/// `--rel Sn --n k`.
pub fn parse_selector(rel: &str, n: Option<usize>) -> Result<RelationKind, CliError> {
    let (name, inline) = match rel.split_once(':') {
        Some((a, b)) => (a, Some(b.parse::<usize>().map_err(|_| CliError::Input(format!("bad index in `{rel}`")))?)),
        None => (rel, None),
    };
    let k = inline.or(n);
    match (name, k) {
        ("L", None) => Ok(RelationKind::L),
        ("A", None) => Ok(RelationKind::A),
        ("alpha", None) => Ok(RelationKind::Alpha),
        ("Sn", Some(k)) if k >= 1 => Ok(RelationKind::Sn(k)),
        ("Sn", _) => Err(CliError::Input("Sn needs --n k with k ≥ 1".into())),
        ("L" | "A" | "alpha", Some(_)) => Err(CliError::Input(format!("--n does not apply to {name}"))),
        _ => Err(CliError::Input(format!("unknown relation `{rel}`, expected L, A, Sn or alpha"))),
    }
}

/// `T,M,P,Q`. Range checks are left to the core so that oversize bounds
/// surface as `BoundsExceeded`.
pub fn parse_bounds(s: &str) -> Result<ExpressionBounds, anyhow::Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let nums: Option<Vec<u8>> = parts.iter().map(|p| p.parse::<u8>().ok()).collect();
    match nums.as_deref() {
        Some(&[t, m, p, q]) => Ok(ExpressionBounds::new(t, m, p, q)?),
        _ => Err(CliError::Input(format!("bounds must be four integers T,M,P,Q, got `{s}`")).into()),
    }
}

/// The exact answer when the structure is a classical Lie algebra over a
/// field: cosets of the derived subspaces, and the diagonal for `𝓛` and α.
pub fn oracle(algebra: &FiniteLieHyperalgebra, kind: RelationKind) -> Option<Partition> {
    if kind == RelationKind::Alpha {
        return algebra.field().as_field().map(|f: FiniteField| Partition::discrete(f.order()));
    }
    let model = LinearModel::recover(algebra).ok()?;
    match kind {
        RelationKind::L => Some(Partition::discrete(algebra.len())),
        RelationKind::A => model.oracle_sn(1).ok(),
        RelationKind::Sn(n) => model.oracle_sn(n).ok(),
        RelationKind::Alpha => None,
    }
}

#[derive(Clone, Debug)]
pub struct Computed {
    pub partition: Partition,
    pub status: RelationStatus,
}

impl Computed {
    pub fn is_exact(&self) -> bool {
        self.status.mode == StatusMode::ExactOracleMatch
    }

    /// `None` for exact results, otherwise the caveat every report carries.
    pub fn caveat(&self) -> Option<String> {
        (!self.is_exact()).then(|| caveat(&self.status.bounds_used))
    }
}

pub fn caveat(bounds: &ExpressionBounds) -> String {
    format!("relative to computed relation at bounds {}", bounds_str(bounds))
}

pub fn bounds_str(b: &ExpressionBounds) -> String {
    let [t, m, p, q] = b.as_array();
    format!("{t},{m},{p},{q}")
}

/// With the oracle on, escalate from `bounds` toward the cap and stop at
/// the first oracle match; with it off, compute once at `bounds`.
pub fn compute(
    engine: &Engine,
    algebra: &FiniteLieHyperalgebra,
    kind: RelationKind,
    bounds: &ExpressionBounds,
    use_oracle: bool,
) -> hyperlie_core::Result<Computed> {
    if use_oracle {
        let o = oracle(algebra, kind);
        let (partition, status) = engine.relation_with_escalation(algebra, kind, bounds, &ExpressionBounds::CAP, o.as_ref())?;
        return Ok(Computed { partition, status });
    }
    bounds.validate()?;
    let partition = engine.closure(algebra, kind, bounds)?;
    let mode = if partition.is_full() { StatusMode::StabilizedHeuristic } else { StatusMode::BoundLimited };
    let status = RelationStatus { mode, bounds_used: *bounds, history: vec![(*bounds, partition.num_classes())], hit_work_limit: false };
    Ok(Computed { partition, status })
}

/// Combining mark used for classes of each relation: `x̄` for `𝓛*`, `x̃`
/// for `𝒜*`, `x̂` for `𝒮ₙ*`.
pub fn class_label(kind: RelationKind, rep: &str) -> String {
    let mark = match kind {
        RelationKind::L => '\u{0304}',
        RelationKind::A => '\u{0303}',
        RelationKind::Sn(_) => '\u{0302}',
        RelationKind::Alpha => return format!("α({rep})"),
    };
    if rep.chars().count() == 1 {
        format!("{rep}{mark}")
    } else {
        format!("({rep}){mark}")
    }
}
