use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A set-valued binary table `rows × cols → 𝒫*(0..range)`.
///
/// When every entry is a singleton the table also keeps the flat
/// single-valued form for the fast path in [`HyperOpTable::apply`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperOpTable {
    rows: usize,
    cols: usize,
    range: usize,
    entries: Vec<Subset>,
    singles: Option<Vec<u32>>,
}

impl HyperOpTable {
    pub fn new(
        name: &'static str,
        rows: usize,
        cols: usize,
        range: usize,
        entries: Vec<Subset>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MalformedTable {
                table: name,
                detail: format!("expected {} entries, found {}", rows * cols, entries.len()),
            });
        }
        for (k, e) in entries.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::MalformedTable {
                    table: name,
                    detail: format!("entry ({}, {}) is empty", k / cols, k % cols),
                });
            }
            if !e.fits(range) {
                return Err(Error::MalformedTable {
                    table: name,
                    detail: format!("entry ({}, {}) is out of range", k / cols, k % cols),
                });
            }
        }
        let singles = entries.iter().map(|e| e.single().map(|x| x as u32)).collect::<Option<Vec<_>>>();
        Ok(Self { rows, cols, range, entries, singles })
    }

    /// Build a single-valued table from a flat row-major list of results.
    pub fn from_singles(
        name: &'static str,
        rows: usize,
        cols: usize,
        range: usize,
        values: &[u32],
    ) -> Result<Self> {
        let entries = values.iter().map(|&v| {
            if (v as usize) < range {
                Ok(Subset::singleton(range, v as usize))
            } else {
                Err(Error::MalformedTable { table: name, detail: format!("value {v} out of range") })
            }
        });
        Self::new(name, rows, cols, range, entries.collect::<Result<Vec<_>>>()?)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn range(&self) -> usize {
        self.range
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Subset {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Subset] {
        &self.entries
    }

    pub fn is_single_valued(&self) -> bool {
        self.singles.is_some()
    }

    #[inline]
    pub fn single(&self, i: usize, j: usize) -> Option<usize> {
        self.singles.as_ref().map(|s| s[i * self.cols + j] as usize)
    }

    /// Setwise evaluation `A ∘ B = ⋃ { a ∘ b : a ∈ A, b ∈ B }`.
    pub fn apply(&self, left: &Subset, right: &Subset) -> Subset {
        if let (Some(a), Some(b)) = (left.single(), right.single()) {
            return self.get(a, b).clone();
        }
        let mut out = Subset::empty(self.range);
        for a in left.iter() {
            for b in right.iter() {
                out.union_with(self.get(a, b));
            }
        }
        out
    }

    /// `{a} ∘ B`.
    pub fn apply_left(&self, a: usize, right: &Subset) -> Subset {
        let mut out = Subset::empty(self.range);
        for b in right.iter() {
            out.union_with(self.get(a, b));
        }
        out
    }

    /// `A ∘ {b}`.
    pub fn apply_right(&self, left: &Subset, b: usize) -> Subset {
        let mut out = Subset::empty(self.range);
        for a in left.iter() {
            out.union_with(self.get(a, b));
        }
        out
    }

    /// Whether `a ∘ b = b ∘ a` for every pair (square tables only).
    pub fn is_commutative(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }
}
