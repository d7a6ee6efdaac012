//! Classical linear algebra over `𝔽_q` on structure constants.
//!
//! Vectors are coefficient lists of field element indices. An element of
//! `𝔽_q^d` is numbered `Σ cᵢ·qⁱ`, which is the carrier order used by the
//! trivial generator.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteField;
use crate::error::{Error, Result};
use crate::relation::Partition;
use crate::structure::FiniteLieHyperalgebra;

pub type Vector = Vec<usize>;

/// Row-reduced basis of the span of `vectors`. Pivot entries are 1 and
/// pivot columns are cleared in every other row.
pub fn row_reduce(field: &FiniteField, vectors: &[Vector], dim: usize) -> Vec<Vector> {
    let mut rows: Vec<Vector> = vectors.iter().filter(|v| v.iter().any(|&c| c != field.zero())).cloned().collect();
    let mut basis: Vec<Vector> = Vec::new();
    let mut col = 0;
    while col < dim && !rows.is_empty() {
        if let Some(pos) = rows.iter().position(|r| r[col] != field.zero()) {
            let mut pivot = rows.swap_remove(pos);
            let inv = field.inv(pivot[col]).expect("nonzero pivot");
            for c in pivot.iter_mut() {
                *c = field.mul(*c, inv);
            }
            for r in rows.iter_mut().chain(basis.iter_mut()) {
                let f = r[col];
                if f != field.zero() {
                    for k in 0..dim {
                        r[k] = field.sub(r[k], field.mul(f, pivot[k]));
                    }
                }
            }
            rows.retain(|r| r.iter().any(|&c| c != field.zero()));
            basis.push(pivot);
        }
        col += 1;
    }
    basis.sort_by_key(|r| r.iter().position(|&c| c != field.zero()));
    basis
}

fn pivot(field: &FiniteField, row: &Vector) -> usize {
    row.iter().position(|&c| c != field.zero()).expect("basis rows are nonzero")
}

/// Canonical coset representative of `v` modulo the span of a reduced basis.
pub fn reduce_mod(field: &FiniteField, v: &Vector, basis: &[Vector]) -> Vector {
    let mut v = v.clone();
    for row in basis {
        let p = pivot(field, row);
        let f = v[p];
        if f != field.zero() {
            for (k, c) in v.iter_mut().enumerate() {
                *c = field.sub(*c, field.mul(f, row[k]));
            }
        }
    }
    v
}

/// Antisymmetric structure constants `[eᵢ, eⱼ] = Σₖ c_{ijk} eₖ` of a Lie
/// algebra over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieConstants {
    field: FiniteField,
    dim: usize,
    table: Vec<usize>,
}

impl LieConstants {
    /// The abelian algebra of dimension `dim`.
    pub fn abelian(field: FiniteField, dim: usize) -> Self {
        let zero = field.zero();
        Self { field, dim, table: vec![zero; dim * dim * dim] }
    }

    /// Constants from a list of brackets `[eᵢ, eⱼ] = v` with `i ≠ j`. The
    /// opposite bracket is filled in as `−v`; unlisted brackets are zero.
    /// Fails with [`Error::NotLie`] on a contradictory entry or a Jacobi
    /// failure.
    pub fn new(field: FiniteField, dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut c = Self::abelian(field, dim);
        let mut set = vec![false; dim * dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || v.len() != dim || v.iter().any(|&x| x >= c.field.order()) {
                return Err(Error::InvalidParameter(format!("bracket [{i},{j}] is out of range")));
            }
            let neg: Vector = v.iter().map(|&x| c.field.neg(x)).collect();
            if i == j {
                if v.iter().any(|&x| x != c.field.zero()) {
                    return Err(Error::NotLie(format!("[e{i},e{i}] must vanish")));
                }
                continue;
            }
            for (a, b, w) in [(i, j, v), (j, i, &neg)] {
                if set[a * dim + b] && c.bracket_basis(a, b) != w.as_slice() {
                    return Err(Error::NotLie(format!("[e{a},e{b}] is given twice with different values")));
                }
                set[a * dim + b] = true;
                c.table[(a * dim + b) * dim..(a * dim + b + 1) * dim].copy_from_slice(w);
            }
        }
        if let Some((i, j, k)) = c.jacobi_failure() {
            return Err(Error::NotLie(format!("Jacobi identity fails on (e{i}, e{j}, e{k})")));
        }
        Ok(c)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[usize] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|&c| c == self.field.zero())
    }

    /// Bilinear extension `[x, y] = Σ xᵢ yⱼ [eᵢ, eⱼ]`.
    pub fn bracket(&self, x: &[usize], y: &[usize]) -> Vector {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == f.zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == f.zero() {
                    continue;
                }
                let s = f.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(s, self.bracket_basis(i, j)[k]));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[usize], y: &[usize]) -> Vector {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn scale(&self, l: usize, x: &[usize]) -> Vector {
        x.iter().map(|&a| self.field.mul(l, a)).collect()
    }

    /// Classical Jacobi identity on basis triples (enough by trilinearity).
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        let e = |i: usize| -> Vector {
            let mut v = vec![self.field.zero(); d];
            v[i] = self.field.one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let t1 = self.bracket(&e(i), self.bracket_basis(j, k));
                    let t2 = self.bracket(&e(j), self.bracket_basis(k, i));
                    let t3 = self.bracket(&e(k), self.bracket_basis(i, j));
                    let s = self.add(&self.add(&t1, &t2), &t3);
                    if s.iter().any(|&c| c != self.field.zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// The same algebra written in the basis `new_basis` (rows are the new
    /// basis vectors in old coordinates). Fails if the rows are dependent.
    pub fn change_basis(&self, new_basis: &[Vector]) -> Result<Self> {
        let (f, d) = (&self.field, self.dim);
        if new_basis.len() != d || new_basis.iter().any(|v| v.len() != d) {
            return Err(Error::InvalidParameter("basis has the wrong shape".into()));
        }
        // Row-reduce [P | I] to [I | P⁻¹].
        let augmented: Vec<Vector> = new_basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = v.clone();
                row.extend((0..d).map(|j| if i == j { f.one() } else { f.zero() }));
                row
            })
            .collect();
        let reduced = row_reduce(f, &augmented, 2 * d);
        if reduced.len() < d || (0..d).any(|i| reduced[i][i] != f.one()) || reduced.iter().any(|r| r[..d].iter().filter(|&&c| c != f.zero()).count() != 1) {
            return Err(Error::InvalidParameter("basis vectors are linearly dependent".into()));
        }
        let coords = |v: &[usize]| -> Vector {
            let mut out = vec![f.zero(); d];
            for (k, &vk) in v.iter().enumerate() {
                for (j, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(vk, reduced[k][d + j]));
                }
            }
            out
        };
        let mut c = Self::abelian(f.clone(), d);
        for i in 0..d {
            for j in 0..d {
                let w = coords(&self.bracket(&new_basis[i], &new_basis[j]));
                c.table[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&w);
            }
        }
        Ok(c)
    }

    /// Carrier size `q^d`.
    pub fn size(&self) -> usize {
        self.field.order().pow(self.dim as u32)
    }

    pub fn encode(&self, v: &[usize]) -> usize {
        v.iter().rev().fold(0, |acc, &c| acc * self.field.order() + c)
    }

    pub fn decode(&self, mut index: usize) -> Vector {
        let q = self.field.order();
        (0..self.dim)
            .map(|_| {
                let c = index % q;
                index /= q;
                c
            })
            .collect()
    }

    /// Reduced basis of `L⁽ⁿ⁾`, the `n`-th classical derived subspace.
    pub fn derived_subspace(&self, n: usize) -> Vec<Vector> {
        let d = self.dim;
        let mut basis: Vec<Vector> = (0..d)
            .map(|i| {
                let mut v = vec![self.field.zero(); d];
                v[i] = self.field.one();
                v
            })
            .collect();
        for _ in 0..n {
            let mut images = Vec::new();
            for x in &basis {
                for y in &basis {
                    images.push(self.bracket(x, y));
                }
            }
            basis = row_reduce(&self.field, &images, d);
            if basis.is_empty() {
                break;
            }
        }
        basis
    }

    /// `dim L⁽ⁱ⁾` for `i = 0..=depth`.
    pub fn derived_dims(&self, depth: usize) -> Vec<usize> {
        (0..=depth).map(|i| self.derived_subspace(i).len()).collect()
    }

    /// Partition of `𝔽_q^d` (in `encode` order) into cosets of a subspace.
    pub fn coset_partition(&self, basis: &[Vector]) -> Partition {
        let labels: Vec<usize> =
            (0..self.size()).map(|x| self.encode(&reduce_mod(&self.field, &self.decode(x), basis))).collect();
        Partition::from_labels(&labels)
    }

    /// The cosets of `L⁽ⁿ⁾`: the expected closure of the `n`-th relation on
    /// a trivial structure, over the `encode` numbering.
    pub fn linear_oracle_sn(&self, n: usize) -> Result<Partition> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if let Some((i, j, k)) = self.jacobi_failure() {
            return Err(Error::NotLie(format!("Jacobi identity fails on (e{i}, e{j}, e{k})")));
        }
        Ok(self.coset_partition(&self.derived_subspace(n)))
    }
}

/// Coordinates for a single-valued Lie hyperalgebra: a basis found inside
/// the carrier, each element's coordinate vector, and the structure
/// constants read off the bracket table.
#[derive(Clone, Debug)]
pub struct LinearModel {
    constants: LieConstants,
    basis: Vec<usize>,
    coords: Vec<Vector>,
}

impl LinearModel {
    /// Recover the linear structure of a trivial Lie hyperalgebra over a
    /// genuine field. Fails if some table is multivalued or the tables are
    /// not those of a Lie algebra in the recovered coordinates.
    pub fn recover(algebra: &FiniteLieHyperalgebra) -> Result<Self> {
        if !algebra.is_trivial() {
            return Err(Error::InvalidParameter("structure is not single-valued".into()));
        }
        let field = algebra.field().as_field().ok_or_else(|| Error::NotAField("scalar hyperfield is not a field".into()))?;
        let n = algebra.len();
        let q = field.order();
        let add = |x: usize, y: usize| algebra.add().single(x, y).unwrap();
        let scale = |l: usize, x: usize| algebra.scalar().single(l, x).unwrap();
        let bracket = |x: usize, y: usize| algebra.bracket().single(x, y).unwrap();

        let not_space = || Error::NotAVectorSpace { size: n, order: q };
        let mut span: Vec<Option<Vector>> = vec![None; n];
        let mut members = vec![algebra.zero()];
        span[algebra.zero()] = Some(Vec::new());
        let mut basis = Vec::new();
        while members.len() < n {
            let b = (0..n).find(|&x| span[x].is_none()).unwrap();
            let k = basis.len();
            basis.push(b);
            for v in span.iter_mut().flatten() {
                v.push(field.zero());
            }
            let mut fresh = Vec::new();
            for &m in &members {
                for l in (0..q).filter(|&l| l != field.zero()) {
                    let y = add(m, scale(l, b));
                    let mut c = span[m].clone().unwrap();
                    c[k] = l;
                    if span[y].is_some() {
                        return Err(not_space());
                    }
                    span[y] = Some(c);
                    fresh.push(y);
                }
            }
            members.extend(fresh);
        }
        let coords: Vec<Vector> = span.into_iter().map(|v| v.unwrap()).collect();
        let dim = basis.len();
        if q.pow(dim as u32) != n {
            return Err(not_space());
        }
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    brackets.push((i, j, coords[bracket(basis[i], basis[j])].clone()));
                }
            }
        }
        let constants = LieConstants::new(field, dim, &brackets)?;
        let model = Self { constants, basis, coords };
        let mut index = vec![0; n];
        for (x, c) in model.coords.iter().enumerate() {
            index[model.constants.encode(c)] = x;
        }
        for x in 0..n {
            for y in 0..n {
                let (cx, cy) = (&model.coords[x], &model.coords[y]);
                if model.coords[add(x, y)] != model.constants.add(cx, cy)
                    || model.coords[bracket(x, y)] != model.constants.bracket(cx, cy)
                {
                    return Err(Error::NotLie(format!("tables are not bilinear at ({x}, {y})")));
                }
            }
            for l in 0..q {
                if model.coords[scale(l, x)] != model.constants.scale(l, &model.coords[x]) {
                    return Err(not_space());
                }
            }
        }
        Ok(model)
    }

    pub fn constants(&self) -> &LieConstants {
        &self.constants
    }

    /// Carrier indices of the recovered basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn coords(&self, x: usize) -> &[usize] {
        &self.coords[x]
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    /// Cosets of `L⁽ⁿ⁾` over the structure's own carrier numbering.
    pub fn oracle_sn(&self, n: usize) -> Result<Partition> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let sub = self.constants.derived_subspace(n);
        let f = self.constants.field();
        let labels: Vec<Vector> = self.coords.iter().map(|c| reduce_mod(f, c, &sub)).collect();
        Ok(Partition::from_labels(&labels))
    }

    /// Set of carrier elements lying in `L⁽ⁿ⁾`.
    pub fn derived_members(&self, n: usize) -> Vec<usize> {
        let sub = self.constants.derived_subspace(n);
        let f = self.constants.field();
        (0..self.coords.len())
            .filter(|&x| reduce_mod(f, &self.coords[x], &sub).iter().all(|&c| c == f.zero()))
            .collect()
    }
}

/// Name of `Σ cᵢ eᵢ` written with basis names, such as `2a+c`.
pub fn vector_name(field: &FiniteField, v: &[usize], basis_names: &[String]) -> String {
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == field.zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if c != field.one() {
            out.push_str(field.name(c));
        }
        out.push_str(&basis_names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
