use alloc::format;

use super::{Carrier, FiniteHyperfield, HyperOpTable};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A finite Lie hyperalgebra over a finite hyperfield.
///
/// The scalar table is indexed by `(field element, carrier element)`.
/// Hyperaddition is never assumed commutative; whether it is commutative is
/// detected once at construction and exposed through
/// [`FiniteLieHyperalgebra::is_additively_commutative`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLieHyperalgebra {
    carrier: Carrier,
    add: HyperOpTable,
    scalar: HyperOpTable,
    bracket: HyperOpTable,
    field: FiniteHyperfield,
    zero: usize,
    commutative_add: bool,
}

impl FiniteLieHyperalgebra {
    /// Assemble a structure from its tables. Shapes are validated here;
    /// axioms are checked by [`crate::structure::check_lie_hyperalgebra`].
    pub fn new(
        carrier: Carrier,
        add: HyperOpTable,
        scalar: HyperOpTable,
        bracket: HyperOpTable,
        field: FiniteHyperfield,
        zero: usize,
    ) -> Result<Self> {
        let n = carrier.len();
        for (name, t) in [("add", &add), ("bracket", &bracket)] {
            if t.rows() != n || t.cols() != n || t.range() != n {
                return Err(Error::MalformedTable {
                    table: name,
                    detail: format!("expected {n}×{n} over {n} elements"),
                });
            }
        }
        if scalar.rows() != field.len() {
            return Err(Error::FieldMismatch { index: scalar.rows().saturating_sub(1), field_size: field.len() });
        }
        if scalar.cols() != n || scalar.range() != n {
            return Err(Error::MalformedTable {
                table: "scalar",
                detail: format!("expected {}×{n} over {n} elements", field.len()),
            });
        }
        if zero >= n {
            return Err(Error::InvalidParameter("zero index out of range".into()));
        }
        let commutative_add = add.is_commutative();
        Ok(Self { carrier, add, scalar, bracket, field, zero, commutative_add })
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

    pub fn scalar(&self) -> &HyperOpTable {
        &self.scalar
    }

    pub fn bracket(&self) -> &HyperOpTable {
        &self.bracket
    }

    pub fn field(&self) -> &FiniteHyperfield {
        &self.field
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn is_additively_commutative(&self) -> bool {
        self.commutative_add
    }

    /// Every hyperoperation (including the scalar field's) is single-valued.
    pub fn is_trivial(&self) -> bool {
        self.add.is_single_valued()
            && self.scalar.is_single_valued()
            && self.bracket.is_single_valued()
            && self.field.is_trivial()
    }

    /// `λ·X = ⋃ { λ·x : x ∈ X }` for a set of scalars and a set of elements.
    pub fn scale(&self, scalars: &Subset, elements: &Subset) -> Subset {
        self.scalar.apply(scalars, elements)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn singleton(&self, x: usize) -> Subset {
        Subset::singleton(self.len(), x)
    }
}
