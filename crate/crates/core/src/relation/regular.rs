use super::Partition;
use crate::structure::{FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable};
use crate::subset::Subset;

/// A failure of strong regularity: `x ρ y` but `op(x)` and `op(y)` reach
/// two different classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    /// `a+x`, `x+a`, `λ·x`, `[a,x]` or `[x,a]` (hyperfields: `a·x`, `x·a`).
    pub condition: &'static str,
    pub x: usize,
    pub y: usize,
    /// The fixed operand `a` (or scalar `λ`).
    pub a: usize,
}

/// For a class `C` and a fixed operand, every result of `op` over `C` must
/// fall in one class.
fn class_image_witness(
    rho: &Partition,
    class: &[usize],
    op: impl Fn(usize) -> Subset,
) -> Option<(usize, usize)> {
    let mut first: Option<(usize, usize)> = None;
    for &x in class {
        for z in op(x).iter() {
            match first {
                None => first = Some((x, rho.class_of(z))),
                Some((x0, c)) if rho.class_of(z) != c => return Some((x0, x)),
                Some(_) => {}
            }
        }
    }
    None
}

fn check_table(
    rho: &Partition,
    table: &HyperOpTable,
    operands: usize,
    left: &'static str,
    right: Option<&'static str>,
) -> Option<RegularityWitness> {
    for class in rho.classes() {
        for a in 0..operands {
            if let Some((x, y)) = class_image_witness(rho, class, |x| table.get(a, x).clone()) {
                return Some(RegularityWitness { condition: left, x, y, a });
            }
            if let Some(cond) = right {
                if let Some((x, y)) = class_image_witness(rho, class, |x| table.get(x, a).clone()) {
                    return Some(RegularityWitness { condition: cond, x, y, a });
                }
            }
        }
    }
    None
}

/// Whether `ρ` is strongly regular on both sides with respect to
/// hyperaddition, the scalar action and the hyperbracket; otherwise the
/// first failing condition.
pub fn regularity_witness(algebra: &FiniteLieHyperalgebra, rho: &Partition) -> Option<RegularityWitness> {
    let n = algebra.len();
    check_table(rho, algebra.add(), n, "a+x", Some("x+a"))
        .or_else(|| check_table(rho, algebra.scalar(), algebra.field().len(), "λ·x", None))
        .or_else(|| check_table(rho, algebra.bracket(), n, "[a,x]", Some("[x,a]")))
}

pub fn is_strongly_regular(algebra: &FiniteLieHyperalgebra, rho: &Partition) -> bool {
    regularity_witness(algebra, rho).is_none()
}

/// Strong regularity of a partition of a hyperfield for `+` and `·`.
pub fn field_regularity_witness(field: &FiniteHyperfield, delta: &Partition) -> Option<RegularityWitness> {
    let n = field.len();
    check_table(delta, field.add(), n, "a+x", Some("x+a")).or_else(|| check_table(delta, field.mul(), n, "a·x", Some("x·a")))
}
