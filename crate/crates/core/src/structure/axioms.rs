//! Exhaustive axiom checkers for hypergroups, hyperfields and Lie
//! hyperalgebras.
//!
//! Every axiom is an equation or containment between subsets, evaluated on
//! every tuple of elements. Each failing axiom is reported once, with the
//! lexicographically first witness tuple.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Carrier, FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable};
use crate::error::{Error, Result};
use crate::par;
use crate::subset::Subset;

/// One failed axiom with the witness that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    /// Witness elements by identifier, in the axiom's argument order.
    pub witness: Vec<String>,
    /// The same witness as indices (field elements for scalar slots).
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn merge_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut v in other.violations {
            v.axiom = format!("{prefix}{}", v.axiom);
            self.violations.push(v);
        }
    }
}

/// Which carrier a witness slot is drawn from.
#[derive(Clone, Copy)]
enum Slot {
    Field,
    Algebra,
}

struct Recorder<'a> {
    report: AxiomReport,
    field: &'a Carrier,
    algebra: &'a Carrier,
}

impl<'a> Recorder<'a> {
    fn new(field: &'a Carrier, algebra: &'a Carrier) -> Self {
        Self { report: AxiomReport::default(), field, algebra }
    }

    fn record(&mut self, axiom: &str, slots: &[Slot], found: Option<Vec<usize>>) {
        if let Some(indices) = found {
            let witness = indices
                .iter()
                .zip(slots)
                .map(|(&i, s)| match s {
                    Slot::Field => self.field.name(i).into(),
                    Slot::Algebra => self.algebra.name(i).into(),
                })
                .collect();
            self.report.violations.push(Violation { axiom: axiom.into(), witness, indices });
        }
    }
}

fn square_check(table: &HyperOpTable, carrier: &Carrier, name: &'static str) -> Result<()> {
    let n = carrier.len();
    if table.rows() != n || table.cols() != n || table.range() != n {
        return Err(Error::MalformedTable { table: name, detail: format!("expected {n}×{n} over {n} elements") });
    }
    Ok(())
}

fn sum(table: &HyperOpTable, a: &Subset, b: &Subset) -> Subset {
    table.apply(a, b)
}

fn first_assoc_failure(table: &HyperOpTable, n: usize) -> Option<Vec<usize>> {
    par::find_first(n, |a| {
        for b in 0..n {
            let ab = table.get(a, b);
            for c in 0..n {
                let left = table.apply_right(ab, c);
                let right = table.apply_left(a, table.get(b, c));
                if left != right {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    })
}

fn first_reproduction_failure(table: &HyperOpTable, domain: &Subset) -> Option<Vec<usize>> {
    domain.iter().find_map(|a| {
        let mut left = Subset::empty(table.range());
        let mut right = Subset::empty(table.range());
        for x in domain.iter() {
            left.union_with(table.get(a, x));
            right.union_with(table.get(x, a));
        }
        (&left != domain || &right != domain).then(|| vec![a])
    })
}

fn hypergroup_report(table: &HyperOpTable, carrier: &Carrier) -> AxiomReport {
    let n = carrier.len();
    let mut rec = Recorder::new(carrier, carrier);
    let all = [Slot::Algebra; 3];
    rec.record("associativity", &all, first_assoc_failure(table, n));
    rec.record("reproduction", &all[..1], first_reproduction_failure(table, &Subset::full(n)));
    rec.report
}

/// Setwise associativity and reproduction of a hyperoperation.
pub fn check_hypergroup(table: &HyperOpTable, carrier: &Carrier) -> Result<AxiomReport> {
    square_check(table, carrier, "add")?;
    Ok(hypergroup_report(table, carrier))
}

/// Hyperfield axioms: `(F,+)` a hypergroup with scalar identity `0`, `(F,·)`
/// a semihypergroup with `0` absorbing and unit `1`, `(F∖{0},·)` a
/// hypergroup, and two-sided setwise distributivity.
pub fn check_hyperfield(field: &FiniteHyperfield) -> Result<AxiomReport> {
    let carrier = field.carrier();
    square_check(field.add(), carrier, "add")?;
    square_check(field.mul(), carrier, "mul")?;
    let n = field.len();
    let (add, mul) = (field.add(), field.mul());
    let (zero, one) = (field.zero(), field.one());
    let mut report = AxiomReport::default();
    report.merge_prefixed("add.", hypergroup_report(add, carrier));

    let mut rec = Recorder::new(carrier, carrier);
    let s1 = [Slot::Field; 3];
    rec.record("mul.associativity", &s1, first_assoc_failure(mul, n));

    let mut nonzero = Subset::full(n);
    nonzero.remove(zero);
    let closure = par::find_first(n, |a| {
        (a != zero).then(|| (0..n).find(|&b| b != zero && mul.get(a, b).contains(zero)).map(|b| vec![a, b]))?
    });
    rec.record("mul.nonzero_closure", &s1, closure);
    if n > 1 {
        rec.record("mul.nonzero_reproduction", &s1, first_reproduction_failure(mul, &nonzero));
    }
    rec.record("zero_ne_one", &s1, (n > 1 && zero == one).then(|| vec![zero]));

    let single = |x: usize| Subset::singleton(n, x);
    rec.record(
        "zero_identity",
        &s1,
        (0..n).find(|&a| add.get(a, zero) != &single(a) || add.get(zero, a) != &single(a)).map(|a| vec![a]),
    );
    rec.record(
        "zero_absorbing",
        &s1,
        (0..n).find(|&a| mul.get(a, zero) != &single(zero) || mul.get(zero, a) != &single(zero)).map(|a| vec![a]),
    );
    rec.record(
        "unit",
        &s1,
        (0..n).find(|&a| mul.get(a, one) != &single(a) || mul.get(one, a) != &single(a)).map(|a| vec![a]),
    );
    let distributive = par::find_first(n, |a| {
        for b in 0..n {
            for c in 0..n {
                let bc = add.get(b, c);
                let left = mul.apply_left(a, bc);
                let right = sum(add, mul.get(a, b), mul.get(a, c));
                let left2 = mul.apply_right(bc, a);
                let right2 = sum(add, mul.get(b, a), mul.get(c, a));
                if left != right || left2 != right2 {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    });
    rec.record("distributivity", &s1, distributive);
    report.violations.extend(rec.report.violations);
    Ok(report)
}

/// Lie hyperalgebra axioms: the scalar hyperfield's axioms, `(L,+)` a
/// hypergroup with scalar identity `0`, the hypermodule laws, the standing
/// scalar assumptions `0_F·x = {0}` and `1·x = {x}`, bilinearity of the
/// hyperbracket, `0 ∈ [x,x]`, and the Jacobi containment.
///
/// Bilinearity is checked as additivity `[x₁+x₂, y] = [x₁,y]+[x₂,y]` plus
/// homogeneity `[λx, y] = λ[x,y]` in each slot. Given the identity
/// assumptions checked alongside, this holds exactly when
/// `[λ₁x₁+λ₂x₂, y] = λ₁[x₁,y]+λ₂[x₂,y]` does.
pub fn check_lie_hyperalgebra(algebra: &FiniteLieHyperalgebra) -> Result<AxiomReport> {
    let carrier = algebra.carrier();
    let field = algebra.field();
    square_check(algebra.add(), carrier, "add")?;
    square_check(algebra.bracket(), carrier, "bracket")?;
    if algebra.scalar().rows() != field.len() {
        return Err(Error::FieldMismatch { index: algebra.scalar().rows() - 1, field_size: field.len() });
    }
    let n = algebra.len();
    let q = field.len();
    let (add, scal, br) = (algebra.add(), algebra.scalar(), algebra.bracket());
    let (fadd, fmul) = (field.add(), field.mul());
    let zero = algebra.zero();

    let mut report = AxiomReport::default();
    report.merge_prefixed("field.", check_hyperfield(field)?);
    report.merge_prefixed("add.", hypergroup_report(add, carrier));

    let mut rec = Recorder::new(field.carrier(), carrier);
    let a1 = [Slot::Algebra];
    let single = |x: usize| Subset::singleton(n, x);
    rec.record(
        "zero_identity",
        &a1,
        (0..n).find(|&x| add.get(x, zero) != &single(x) || add.get(zero, x) != &single(x)).map(|x| vec![x]),
    );
    rec.record(
        "scalar.zero",
        &a1,
        (0..n).find(|&x| scal.get(field.zero(), x) != &single(zero)).map(|x| vec![x]),
    );
    rec.record("scalar.unit", &a1, (0..n).find(|&x| scal.get(field.one(), x) != &single(x)).map(|x| vec![x]));

    // a(x+y) = ax + ay
    let found = par::find_first(q, |a| {
        for x in 0..n {
            for y in 0..n {
                let left = scal.apply_left(a, add.get(x, y));
                let right = add.apply(scal.get(a, x), scal.get(a, y));
                if left != right {
                    return Some(vec![a, x, y]);
                }
            }
        }
        None
    });
    rec.record("module.left_distributive", &[Slot::Field, Slot::Algebra, Slot::Algebra], found);

    // (a+b)x = ax + bx and (ab)x = a(bx)
    let fab = [Slot::Field, Slot::Field, Slot::Algebra];
    let found = par::find_first(q, |a| {
        for b in 0..q {
            for x in 0..n {
                let left = scal.apply_right(fadd.get(a, b), x);
                let right = add.apply(scal.get(a, x), scal.get(b, x));
                if left != right {
                    return Some(vec![a, b, x]);
                }
            }
        }
        None
    });
    rec.record("module.right_distributive", &fab, found);
    let found = par::find_first(q, |a| {
        for b in 0..q {
            for x in 0..n {
                let left = scal.apply_right(fmul.get(a, b), x);
                let right = scal.apply_left(a, scal.get(b, x));
                if left != right {
                    return Some(vec![a, b, x]);
                }
            }
        }
        None
    });
    rec.record("module.associative", &fab, found);

    let aaa = [Slot::Algebra; 3];
    let found = par::find_first(n, |x1| {
        for x2 in 0..n {
            for y in 0..n {
                let left = br.apply_right(add.get(x1, x2), y);
                let right = add.apply(br.get(x1, y), br.get(x2, y));
                if left != right {
                    return Some(vec![x1, x2, y]);
                }
            }
        }
        None
    });
    rec.record("bracket.additive_left", &aaa, found);
    let found = par::find_first(n, |x| {
        for y1 in 0..n {
            for y2 in 0..n {
                let left = br.apply_left(x, add.get(y1, y2));
                let right = add.apply(br.get(x, y1), br.get(x, y2));
                if left != right {
                    return Some(vec![x, y1, y2]);
                }
            }
        }
        None
    });
    rec.record("bracket.additive_right", &aaa, found);

    let faa = [Slot::Field, Slot::Algebra, Slot::Algebra];
    let found = par::find_first(q, |l| {
        for x in 0..n {
            for y in 0..n {
                let scaled = scal.apply_left(l, br.get(x, y));
                if br.apply_right(scal.get(l, x), y) != scaled || br.apply_left(y, scal.get(l, x)) != scal.apply_left(l, br.get(y, x)) {
                    return Some(vec![l, x, y]);
                }
            }
        }
        None
    });
    rec.record("bracket.homogeneous", &faa, found);

    rec.record("bracket.alternating", &a1, (0..n).find(|&x| !br.get(x, x).contains(zero)).map(|x| vec![x]));

    let found = par::find_first(n, |x| {
        for y in 0..n {
            for z in 0..n {
                let t1 = br.apply_left(x, br.get(y, z));
                let t2 = br.apply_left(y, br.get(z, x));
                let t3 = br.apply_left(z, br.get(x, y));
                if !add.apply(&add.apply(&t1, &t2), &t3).contains(zero) {
                    return Some(vec![x, y, z]);
                }
            }
        }
        None
    });
    rec.record("jacobi", &aaa, found);

    report.violations.extend(rec.report.violations);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn carrier(n: usize) -> Carrier {
        Carrier::new((0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn singleton_hypergroup_passes() {
        let t = HyperOpTable::from_singles("add", 1, 1, 1, &[0]).unwrap();
        assert!(check_hypergroup(&t, &carrier(1)).unwrap().passed());
    }

    #[test]
    fn absorbing_table_fails_reproduction() {
        // a+b={a}, b+a={a}, a+a={a}, b+b={b}: a + carrier = {a} ≠ carrier.
        let t = HyperOpTable::from_singles("add", 2, 2, 2, &[0, 0, 0, 1]).unwrap();
        let report = check_hypergroup(&t, &carrier(2)).unwrap();
        assert!(!report.passed());
        assert!(report.violates("reproduction"));
        assert!(!report.violates("associativity"));
        let v = report.violations.iter().find(|v| v.axiom == "reproduction").unwrap();
        assert_eq!(v.indices, vec![0]);
    }

    #[test]
    fn shape_mismatch_is_malformed() {
        let t = HyperOpTable::from_singles("add", 1, 1, 1, &[0]).unwrap();
        assert!(matches!(check_hypergroup(&t, &carrier(2)), Err(Error::MalformedTable { .. })));
    }

    #[test]
    fn trivial_prime_field_passes() {
        for q in [2, 3, 5, 9] {
            let f = FiniteHyperfield::trivial(q).unwrap();
            assert!(check_hyperfield(&f).unwrap().passed(), "F_{q}");
        }
    }

    #[test]
    fn broken_unit_fails() {
        // 𝔽₃ with 1·1 changed to {0}.
        let f = FiniteHyperfield::trivial(3).unwrap();
        let mut mul: Vec<u32> = (0..9).map(|k| ((k / 3) * (k % 3) % 3) as u32).collect();
        mul[4] = 0;
        let mul = HyperOpTable::from_singles("mul", 3, 3, 3, &mul).unwrap();
        let broken = FiniteHyperfield::new(f.carrier().clone(), f.add().clone(), mul, 0, 1).unwrap();
        let report = check_hyperfield(&broken).unwrap();
        assert!(report.violates("unit"));
        assert!(!report.passed());
    }
}
