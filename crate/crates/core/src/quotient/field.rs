//! Single-valued finite fields given by tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite field `𝔽_q` stored as addition and multiplication tables over
/// element indices `0..q`.
///
/// The one-element zero ring is also representable; it arises as the
/// quotient of a hyperfield whose fundamental relation collapses, and its
/// only module is the zero module. [`FiniteField::is_zero_ring`] tells the
/// two cases apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: usize,
    one: usize,
    names: Vec<String>,
}

fn factor_prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over `𝔽_p` (little-endian coefficients).
fn poly_rem(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - (lead * c) % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push(c % p);
                c /= p;
            }
            divisor.push(1);
            if poly_rem(poly.to_vec(), &divisor, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The Galois field of order `q`, a prime power. Elements of `𝔽_{p^k}`
    /// are numbered by their base-`p` coefficient vectors over the smallest
    /// monic irreducible polynomial in lexicographic search order.
    pub fn galois(q: usize) -> Result<Self> {
        let (p, k) = factor_prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        let k = k as usize;
        let digits = |mut x: usize| -> Vec<usize> {
            let mut v = vec![0; k];
            for d in v.iter_mut() {
                *d = x % p;
                x /= p;
            }
            v
        };
        let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(k as u32))
                .map(|code| {
                    let mut m = digits(code);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .ok_or_else(|| Error::Invariant(format!("no irreducible polynomial of degree {k} over F_{p}")))?
        };

        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u32;
                let mut prod = vec![0usize; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if k == 1 { vec![prod[0]] } else { poly_rem(prod, &modulus, p) };
                r.resize(k, 0);
                mul[a * q + b] = encode(&r) as u32;
            }
        }
        let names = (0..q).map(|i| i.to_string()).collect();
        Self::from_tables(q, add, mul, 0, 1, names)
    }

    /// Validate field axioms on explicit tables. A single-element table
    /// is accepted as the zero ring.
    pub fn from_tables(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        names: Vec<String>,
    ) -> Result<Self> {
        if order == 0 || add.len() != order * order || mul.len() != order * order || names.len() != order {
            return Err(Error::NotAField("table shape mismatch".into()));
        }
        if add.iter().chain(mul.iter()).any(|&v| v as usize >= order) || zero >= order || one >= order {
            return Err(Error::NotAField("value out of range".into()));
        }
        let field = Self { order, add, mul, zero, one, names };
        field.validate()?;
        Ok(field)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        if n == 1 {
            return Ok(());
        }
        if self.zero == self.one {
            return Err(Error::NotAField("0 = 1 in a ring with more than one element".into()));
        }
        let fail = |what: &str, w: &[usize]| -> Error {
            let names: Vec<&str> = w.iter().map(|&i| self.names[i].as_str()).collect();
            Error::NotAField(format!("{what} fails at {names:?}"))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a || self.mul(a, self.one) != a {
                return Err(fail("identity", &[a]));
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return Err(fail("additive inverse", &[a]));
            }
            if a != self.zero && !(0..n).any(|b| self.mul(a, b) == self.one) {
                return Err(fail("multiplicative inverse", &[a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(fail("commutativity", &[a, b]));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return Err(fail("associativity", &[a, b, c]));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(fail("distributivity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.add(a, b) == self.zero).expect("validated field")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (0..self.order).find(|&b| self.mul(a, b) == self.one)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    /// Smallest `p ≥ 1` with `p·1 = 0`. The zero ring has characteristic 1.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut p = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            p += 1;
        }
        p
    }

    /// Gate for results that assume the scalar field does not have
    /// characteristic 2.
    pub fn require_char_not_2(&self) -> Result<usize> {
        match self.characteristic() {
            2 => Err(Error::CharTwoGate),
            p => Ok(p),
        }
    }
}
