use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteField;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Default depth for solvable-length searches.
pub const DEFAULT_SERIES_DEPTH: usize = 8;

/// A classical finite Lie algebra given by single-valued tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLieAlgebra {
    field: FiniteField,
    names: Vec<String>,
    add: Vec<u32>,
    scalar: Vec<u32>,
    bracket: Vec<u32>,
    zero: usize,
}

/// `L⁽⁰⁾ ⊇ L⁽¹⁾ ⊇ …` as element sets, computed until it reaches `{0}` or
/// stops shrinking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subset>,
    pub dims: Vec<usize>,
    /// Smallest `n` with `L⁽ⁿ⁾ = 0`, if reached within the depth.
    pub solvable_length: Option<usize>,
}

impl FiniteLieAlgebra {
    /// Assemble and validate: abelian group, vector-space laws, bilinear
    /// alternating bracket and the Jacobi identity, all exhaustively.
    pub fn new(
        field: FiniteField,
        names: Vec<String>,
        add: Vec<u32>,
        scalar: Vec<u32>,
        bracket: Vec<u32>,
        zero: usize,
    ) -> Result<Self> {
        let n = names.len();
        let q = field.order();
        if n == 0 || add.len() != n * n || bracket.len() != n * n || scalar.len() != q * n || zero >= n {
            return Err(Error::Invariant("quotient tables have the wrong shape".into()));
        }
        if add.iter().chain(&bracket).chain(&scalar).any(|&v| v as usize >= n) {
            return Err(Error::Invariant("quotient table value out of range".into()));
        }
        let algebra = Self { field, names, add, scalar, bracket, zero };
        if let Some(msg) = algebra.axiom_failure() {
            return Err(Error::NotLie(msg));
        }
        Ok(algebra)
    }

    fn axiom_failure(&self) -> Option<String> {
        let n = self.len();
        let f = &self.field;
        let q = f.order();
        let z = self.zero;
        let name = |x: usize| self.names[x].as_str();
        for x in 0..n {
            if self.add(x, z) != x {
                return Some(format!("0 is not an additive identity at {}", name(x)));
            }
            if !(0..n).any(|y| self.add(x, y) == z) {
                return Some(format!("{} has no additive inverse", name(x)));
            }
            if self.scale(f.one(), x) != x {
                return Some(format!("1·{} ≠ {}", name(x), name(x)));
            }
            if self.scale(f.zero(), x) != z {
                return Some(format!("0·{} ≠ 0", name(x)));
            }
            if self.bracket(x, x) != z {
                return Some(format!("[{0},{0}] ≠ 0", name(x)));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Some(format!("addition is not commutative at ({}, {})", name(x), name(y)));
                }
                for l in 0..q {
                    if self.scale(l, self.add(x, y)) != self.add(self.scale(l, x), self.scale(l, y))
                        || self.bracket(self.scale(l, x), y) != self.scale(l, self.bracket(x, y))
                    {
                        return Some(format!("scalar law fails at ({}, {}, {})", f.name(l), name(x), name(y)));
                    }
                    for m in 0..q {
                        if self.scale(f.add(l, m), x) != self.add(self.scale(l, x), self.scale(m, x))
                            || self.scale(f.mul(l, m), x) != self.scale(l, self.scale(m, x))
                        {
                            return Some(format!("scalar law fails at ({}, {}, {})", f.name(l), f.name(m), name(x)));
                        }
                    }
                }
                for w in 0..n {
                    let (xy, yw, wx) = (self.bracket(x, y), self.bracket(y, w), self.bracket(w, x));
                    if self.add(self.add(x, y), w) != self.add(x, self.add(y, w)) {
                        return Some(format!("addition is not associative at ({}, {}, {})", name(x), name(y), name(w)));
                    }
                    if self.bracket(self.add(x, y), w) != self.add(self.bracket(x, w), self.bracket(y, w)) {
                        return Some(format!("bracket is not additive at ({}, {}, {})", name(x), name(y), name(w)));
                    }
                    let jacobi = self.add(self.add(self.bracket(x, yw), self.bracket(y, wx)), self.bracket(w, xy));
                    if jacobi != z {
                        return Some(format!("Jacobi identity fails at ({}, {}, {})", name(x), name(y), name(w)));
                    }
                }
            }
        }
        None
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.len() + y] as usize
    }

    #[inline]
    pub fn scale(&self, l: usize, x: usize) -> usize {
        self.scalar[l * self.len() + x] as usize
    }

    #[inline]
    pub fn bracket(&self, x: usize, y: usize) -> usize {
        self.bracket[x * self.len() + y] as usize
    }

    /// `log_q |L|`.
    pub fn dimension(&self) -> Result<usize> {
        subspace_dim(self.len(), self.field.order())
    }

    /// Smallest subspace containing `seeds`: closure under `+` and scalars.
    pub fn span(&self, seeds: &Subset) -> Subset {
        let n = self.len();
        let mut span = Subset::singleton(n, self.zero);
        let mut queue: Vec<usize> = Vec::new();
        let push = |x: usize, span: &mut Subset, queue: &mut Vec<usize>| {
            if !span.contains(x) {
                span.insert(x);
                queue.push(x);
            }
        };
        for s in seeds.iter() {
            push(s, &mut span, &mut queue);
        }
        while let Some(x) = queue.pop() {
            for l in 0..self.field.order() {
                push(self.scale(l, x), &mut span, &mut queue);
            }
            let members: Vec<usize> = span.iter().collect();
            for y in members {
                push(self.add(x, y), &mut span, &mut queue);
            }
        }
        span
    }

    /// `⌊A, B⌋` spanned: the subspace generated by all brackets.
    pub fn bracket_span(&self, a: &Subset, b: &Subset) -> Subset {
        let mut images = Subset::empty(self.len());
        for x in a.iter() {
            for y in b.iter() {
                images.insert(self.bracket(x, y));
            }
        }
        self.span(&images)
    }

    pub fn derived_series(&self, max_depth: usize) -> DerivedSeries {
        let q = self.field.order();
        let zero_set = Subset::singleton(self.len(), self.zero);
        let mut terms = vec![Subset::full(self.len())];
        let mut solvable_length = None;
        for i in 0..=max_depth {
            if terms[i] == zero_set {
                solvable_length = Some(i);
                break;
            }
            if i == max_depth {
                break;
            }
            let next = self.bracket_span(&terms[i], &terms[i]);
            let stalled = next == terms[i];
            terms.push(next);
            if stalled {
                break;
            }
        }
        let dims = terms.iter().map(|t| subspace_dim(t.len(), q).unwrap_or(usize::MAX)).collect();
        DerivedSeries { terms, dims, solvable_length }
    }

    pub fn is_perfect(&self) -> bool {
        let full = Subset::full(self.len());
        self.bracket_span(&full, &full) == full
    }
}

/// `d` with `q^d = size`. Over the zero ring only the one-element module
/// exists and has dimension 0.
pub fn subspace_dim(size: usize, q: usize) -> Result<usize> {
    if q <= 1 {
        return if size == 1 { Ok(0) } else { Err(Error::NotAVectorSpace { size, order: q }) };
    }
    let mut d = 0;
    let mut p = 1;
    while p < size {
        p *= q;
        d += 1;
    }
    if p == size {
        Ok(d)
    } else {
        Err(Error::NotAVectorSpace { size, order: q })
    }
}
