use alloc::string::String;
use alloc::vec::Vec;

use super::parts::{is_transitive_sn, SnView, TransitivityReport};
use crate::error::{Error, Result};
use crate::relation::{Engine, ExpressionBounds};
use crate::structure::FiniteLieHyperalgebra;

/// One evaluated `(structure, n, bounds)` triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchEntry {
    pub name: String,
    pub n: usize,
    pub bounds: ExpressionBounds,
    /// `None` when the engine refused (work limit).
    pub report: Option<TransitivityReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchLog {
    pub entries: Vec<SearchEntry>,
    /// Index into `entries` of the first non-transitive hit.
    pub hit: Option<usize>,
}

/// Walk the candidates in order, stopping at the first `𝒮ₙ` that is not
/// transitive. Work-limit refusals are logged and skipped.
pub fn search_non_transitive(
    engine: &Engine,
    candidates: &[(String, FiniteLieHyperalgebra)],
    ns: &[usize],
    bounds: &[ExpressionBounds],
) -> Result<SearchLog> {
    let mut log = SearchLog::default();
    for (name, algebra) in candidates {
        for &n in ns {
            for b in bounds {
                let report = match SnView::with_engine(engine, algebra, n, b) {
                    Ok(view) => Some(is_transitive_sn(&view)),
                    Err(Error::WorkLimit { .. }) => None,
                    Err(e) => return Err(e),
                };
                let found = report.as_ref().is_some_and(|r| !r.transitive);
                log.entries.push(SearchEntry { name: name.clone(), n, bounds: *b, report });
                if found {
                    log.hit = Some(log.entries.len() - 1);
                    return Ok(log);
                }
            }
        }
    }
    Ok(log)
}
