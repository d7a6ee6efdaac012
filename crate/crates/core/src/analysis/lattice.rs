//! Exhaustive checks over the partition lattice of a small carrier.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::par::map_collect;
use crate::quotient::{quotient_field, quotient_lie_algebra, DEFAULT_SERIES_DEPTH};
use crate::relation::{is_strongly_regular, Partition};
use crate::structure::FiniteLieHyperalgebra;

/// Largest carrier for [`smallest_solvable_oracle`].
pub const ORACLE_MAX_CARRIER: usize = 6;

/// Number of partitions of an `n`-set.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &r in &row {
            let v = next.last().unwrap() + r;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Restricted growth strings of length `n` in lexicographic order: `a₀ = 0`
/// and `aᵢ ≤ 1 + max(a₀..aᵢ₋₁)`.
pub struct RestrictedGrowth {
    current: Option<Vec<usize>>,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        Self { current: Some(vec![0; n]) }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut a = out.clone();
        let n = a.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            let bound = a[..i].iter().max().copied().unwrap_or(0) + 1;
            if a[i] < bound {
                a[i] += 1;
                for x in a.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                self.current = Some(a);
                break;
            }
        }
        Some(out)
    }
}

/// All partitions of `0..n` in restricted-growth order.
pub fn partitions(n: usize) -> impl Iterator<Item = Partition> {
    RestrictedGrowth::new(n).map(|a| Partition::from_dense_labels(&a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientLemmaReport {
    pub checked: usize,
    pub strongly_regular: usize,
    /// Partitions where strong regularity and "quotient is a well-defined
    /// Lie algebra" disagree, with the regularity verdict.
    pub disagreements: Vec<(Partition, bool)>,
}

/// Over every partition `ρ` of the carrier: `ρ` strongly regular iff the
/// quotient `L/ρ` over `F/δ` is well defined and a Lie algebra.
pub fn quotient_lemma_check(algebra: &FiniteLieHyperalgebra, delta: &Partition, max_carrier: usize) -> Result<QuotientLemmaReport> {
    let n = algebra.len();
    if n > max_carrier {
        return Err(Error::TooLarge { size: n, limit: max_carrier });
    }
    let all: Vec<Partition> = partitions(n).collect();
    let verdicts = map_collect(all.len(), |i| {
        let regular = is_strongly_regular(algebra, &all[i]);
        match quotient_lie_algebra(algebra, &all[i], delta) {
            Ok(_) => Ok((regular, true)),
            Err(Error::NotWellDefined { .. } | Error::NotLie(_) | Error::NotAField(_)) => Ok((regular, false)),
            Err(e) => Err(e),
        }
    });
    let mut report = QuotientLemmaReport { checked: 0, strongly_regular: 0, disagreements: Vec::new() };
    for (rho, v) in all.into_iter().zip(verdicts) {
        let (regular, lie) = v?;
        report.checked += 1;
        report.strongly_regular += regular as usize;
        if regular != lie {
            report.disagreements.push((rho, regular));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// The least qualifying partition, if the qualifying set has one.
    pub minimal: Option<Partition>,
    /// Strongly regular partitions whose quotient is a solvable Lie algebra.
    pub qualifying: Vec<Partition>,
    pub checked: u64,
    /// The supplied 𝒮 is itself qualifying.
    pub engine_qualifies: bool,
    /// Qualifying partitions that the supplied 𝒮 does not refine.
    pub minimality_violations: usize,
    pub agrees_with_engine: bool,
}

/// Enumerate every partition of the carrier and keep the strongly regular
/// ones with a solvable quotient over `F/δ`; compare their least element
/// with the computed `𝒮`.
pub fn smallest_solvable_oracle(
    algebra: &FiniteLieHyperalgebra,
    delta: &Partition,
    engine_s: &Partition,
) -> Result<Certificate> {
    let n = algebra.len();
    if n > ORACLE_MAX_CARRIER {
        return Err(Error::TooLarge { size: n, limit: ORACLE_MAX_CARRIER });
    }
    quotient_field(algebra.field(), delta)?.require_char_not_2()?;
    let all: Vec<Partition> = partitions(n).collect();
    let checked = all.len() as u64;
    let keep = map_collect(all.len(), |i| {
        if !is_strongly_regular(algebra, &all[i]) {
            return Ok(false);
        }
        match quotient_lie_algebra(algebra, &all[i], delta) {
            Ok(q) => Ok(q.derived_series(DEFAULT_SERIES_DEPTH).solvable_length.is_some()),
            Err(Error::NotWellDefined { .. } | Error::NotLie(_)) => Ok(false),
            Err(e) => Err(e),
        }
    });
    let mut qualifying = Vec::new();
    for (xi, k) in all.into_iter().zip(keep) {
        if k? {
            qualifying.push(xi);
        }
    }
    if qualifying.is_empty() {
        return Err(Error::NoSolvableQuotient);
    }
    let minimal = qualifying.iter().find(|m| qualifying.iter().all(|x| m.refines(x))).cloned();
    let engine_qualifies = qualifying.contains(engine_s);
    let minimality_violations = qualifying.iter().filter(|x| !engine_s.refines(x)).count();
    let agrees_with_engine = minimal.as_ref() == Some(engine_s);
    Ok(Certificate { minimal, qualifying, checked, engine_qualifies, minimality_violations, agrees_with_engine })
}
