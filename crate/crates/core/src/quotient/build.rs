use alloc::string::String;
use alloc::vec::Vec;

use super::{FiniteField, FiniteLieAlgebra};
use crate::error::{Error, Result};
use crate::relation::Partition;
use crate::structure::{Carrier, FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable};

/// Induced single-valued table on classes: for every pair of classes all
/// results must fall into one class.
fn induced(
    op: &'static str,
    table: &HyperOpTable,
    rows: &Partition,
    cols: &Partition,
    out: &Partition,
    row_names: &Carrier,
    col_names: &Carrier,
    out_names: &Carrier,
) -> Result<Vec<u32>> {
    let mut values = Vec::with_capacity(rows.num_classes() * cols.num_classes());
    for a in rows.classes() {
        for b in cols.classes() {
            let mut first: Option<(usize, usize, usize)> = None;
            for &x in a {
                for &y in b {
                    for z in table.get(x, y).iter() {
                        match first {
                            None => first = Some((x, y, z)),
                            Some((x0, y0, z0)) if !out.related(z0, z) => {
                                let witness = [
                                    row_names.name(x0),
                                    col_names.name(y0),
                                    out_names.name(z0),
                                    row_names.name(x),
                                    col_names.name(y),
                                    out_names.name(z),
                                ];
                                return Err(Error::NotWellDefined {
                                    op,
                                    witness: witness.iter().map(|s| String::from(*s)).collect(),
                                });
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
            let (_, _, z) = first.expect("table entries are non-empty");
            values.push(out.class_of(z) as u32);
        }
    }
    Ok(values)
}

fn class_names(carrier: &Carrier, p: &Partition) -> Vec<String> {
    p.classes().iter().map(|c| String::from(carrier.name(c[0]))).collect()
}

/// `F/δ` with operations `x̄ ⊕ ȳ = z̄` for `z ∈ x + y`. Fails if `δ` does
/// not induce single-valued operations or the result is not a field.
pub fn quotient_field(field: &FiniteHyperfield, delta: &Partition) -> Result<FiniteField> {
    if delta.len() != field.len() {
        return Err(Error::InvalidParameter("partition does not match the hyperfield".into()));
    }
    let c = field.carrier();
    let add = induced("field add", field.add(), delta, delta, delta, c, c, c)?;
    let mul = induced("field mul", field.mul(), delta, delta, delta, c, c, c)?;
    FiniteField::from_tables(
        delta.num_classes(),
        add,
        mul,
        delta.class_of(field.zero()),
        delta.class_of(field.one()),
        class_names(c, delta),
    )
}

/// `L/ρ` over `F/δ`. Every induced operation is checked for
/// well-definedness on all representatives and the output is validated as
/// a classical Lie algebra.
pub fn quotient_lie_algebra(
    algebra: &FiniteLieHyperalgebra,
    rho: &Partition,
    delta: &Partition,
) -> Result<FiniteLieAlgebra> {
    if rho.len() != algebra.len() {
        return Err(Error::InvalidParameter("partition does not match the algebra".into()));
    }
    let field = quotient_field(algebra.field(), delta)?;
    let (c, fc) = (algebra.carrier(), algebra.field().carrier());
    let add = induced("add", algebra.add(), rho, rho, rho, c, c, c)?;
    let scalar = induced("scalar", algebra.scalar(), delta, rho, rho, fc, c, c)?;
    let bracket = induced("bracket", algebra.bracket(), rho, rho, rho, c, c, c)?;
    FiniteLieAlgebra::new(field, class_names(c, rho), add, scalar, bracket, rho.class_of(algebra.zero()))
}
