use alloc::format;
use alloc::vec::Vec;

use super::{Carrier, HyperOpTable};
use crate::error::{Error, Result};
use crate::quotient::FiniteField;

/// A finite hyperfield: set-valued addition and multiplication tables with
/// distinguished `0` and `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHyperfield {
    carrier: Carrier,
    add: HyperOpTable,
    mul: HyperOpTable,
    zero: usize,
    one: usize,
}

impl FiniteHyperfield {
    /// Assemble a hyperfield without checking axioms; see
    /// [`crate::structure::check_hyperfield`].
    pub fn new(carrier: Carrier, add: HyperOpTable, mul: HyperOpTable, zero: usize, one: usize) -> Result<Self> {
        let n = carrier.len();
        for (name, t) in [("add", &add), ("mul", &mul)] {
            if t.rows() != n || t.cols() != n || t.range() != n {
                return Err(Error::MalformedTable {
                    table: name,
                    detail: format!("expected {n}×{n} over {n} elements"),
                });
            }
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidParameter("zero/one index out of range".into()));
        }
        Ok(Self { carrier, add, mul, zero, one })
    }

    /// The classical field `𝔽_q` viewed with singleton-valued operations.
    pub fn trivial(q: usize) -> Result<Self> {
        Self::from_field(&FiniteField::galois(q)?)
    }

    pub fn from_field(field: &FiniteField) -> Result<Self> {
        let n = field.order();
        let carrier = Carrier::new(field.names().to_vec())?;
        let add = HyperOpTable::from_singles("add", n, n, n, field.add_table())?;
        let mul = HyperOpTable::from_singles("mul", n, n, n, field.mul_table())?;
        Self::new(carrier, add, mul, field.zero(), field.one())
    }

    /// The classical field behind a single-valued hyperfield, if its
    /// tables satisfy the field axioms.
    pub fn as_field(&self) -> Option<FiniteField> {
        if !self.is_trivial() {
            return None;
        }
        let n = self.len();
        let flat = |t: &HyperOpTable| -> Vec<u32> {
            (0..n * n).map(|k| t.single(k / n, k % n).unwrap() as u32).collect()
        };
        FiniteField::from_tables(n, flat(&self.add), flat(&self.mul), self.zero, self.one, self.carrier.names().to_vec())
            .ok()
            .filter(|f| !f.is_zero_ring())
    }

    pub fn is_trivial(&self) -> bool {
        self.add.is_single_valued() && self.mul.is_single_valued()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn add(&self) -> &HyperOpTable {
        &self.add
    }

    pub fn mul(&self) -> &HyperOpTable {
        &self.mul
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }
}
