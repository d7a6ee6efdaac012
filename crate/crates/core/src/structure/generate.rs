//! Test-structure factories. Every generator runs the matching axiom
//! checker on its output and returns [`Error::AxiomFailure`] instead of an
//! unchecked structure.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{check_hyperfield, check_hypergroup, check_lie_hyperalgebra};
use super::{Carrier, FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quotient::{row_reduce, vector_name, FiniteField, LieConstants, Vector};
use crate::subset::Subset;

/// Cayley table of `ℤ_n` under addition.
pub fn cyclic_group(n: usize) -> Vec<u32> {
    (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect()
}

/// Cayley table of `S₃`, elements numbered in lexicographic order of the
/// permutation words of `{0,1,2}`; composition is `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group_s3() -> Vec<u32> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut table = Vec::with_capacity(36);
    for s in &perms {
        for t in &perms {
            let c = [s[t[0]], s[t[1]], s[t[2]]];
            table.push(perms.iter().position(|p| *p == c).unwrap() as u32);
        }
    }
    table
}

fn group_order(table: &[u32]) -> Result<usize> {
    let n = (0..=table.len()).find(|k| k * k >= table.len()).unwrap_or(0);
    if n * n != table.len() {
        return Err(Error::NotAGroup("table is not square".into()));
    }
    if n == 0 || table.iter().any(|&v| v as usize >= n) {
        return Err(Error::NotAGroup("value out of range".into()));
    }
    Ok(n)
}

/// Identity element after checking the group axioms.
fn check_group(table: &[u32]) -> Result<(usize, usize)> {
    let n = group_order(table)?;
    let op = |a: usize, b: usize| table[a * n + b] as usize;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op(op(a, b), c) != op(a, op(b, c)) {
                    return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a))
        .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| op(a, b) == e && op(b, a) == e)) {
        return Err(Error::NotAGroup(format!("{a} has no inverse")));
    }
    Ok((n, e))
}

/// Left cosets `xH` with `xH · yH = { zH : z = x·h·y, h ∈ H }`.
pub fn gen_coset_hypergroup(group_table: &[u32], subgroup: &[usize]) -> Result<(Carrier, HyperOpTable)> {
    let (n, e) = check_group(group_table)?;
    let op = |a: usize, b: usize| group_table[a * n + b] as usize;
    let h = Subset::from_iter(n, subgroup.iter().copied().filter(|&x| x < n));
    if h.len() != subgroup.len() || subgroup.iter().any(|&x| x >= n) {
        return Err(Error::NotASubgroup("element out of range or repeated".into()));
    }
    if !h.contains(e) {
        return Err(Error::NotASubgroup("identity missing".into()));
    }
    for a in h.iter() {
        for b in h.iter() {
            if !h.contains(op(a, b)) {
                return Err(Error::NotASubgroup(format!("not closed at ({a}, {b})")));
            }
        }
    }
    // Coset label of each element: the smallest member of xH.
    let label: Vec<usize> = (0..n).map(|x| h.iter().map(|k| op(x, k)).min().unwrap()).collect();
    let mut reps: Vec<usize> = label.clone();
    reps.sort_unstable();
    reps.dedup();
    let index_of = |x: usize| reps.binary_search(&label[x]).unwrap();
    let names: Vec<String> = reps.iter().map(|r| format!("{r}H")).collect();
    let k = reps.len();
    let mut entries = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            entries.push(Subset::from_iter(k, h.iter().map(|g| index_of(op(op(x, g), y)))));
        }
    }
    let carrier = Carrier::new(names)?;
    let table = HyperOpTable::new("add", k, k, k, entries)?;
    let report = check_hypergroup(&table, &carrier)?;
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    Ok((carrier, table))
}

/// Output of [`gen_trivial_from_lie`].
#[derive(Clone, Debug)]
pub struct TrivialLie {
    pub algebra: FiniteLieHyperalgebra,
    pub constants: LieConstants,
    /// The field has characteristic 2; theorem gates are disabled for it.
    pub even_characteristic: bool,
}

/// Default basis names `a, b, c, …`.
pub fn basis_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// The classical Lie algebra on `𝔽_q^d` viewed with singleton-valued
/// operations. Elements are numbered `Σ cᵢ qⁱ` and named like `2a+c`.
pub fn gen_trivial_from_lie(constants: &LieConstants, names: Option<&[String]>) -> Result<TrivialLie> {
    if let Some((i, j, k)) = constants.jacobi_failure() {
        return Err(Error::NotLie(format!("Jacobi identity fails on (e{i}, e{j}, e{k})")));
    }
    let f = constants.field();
    let (q, d) = (f.order(), constants.dim());
    let owned;
    let names = match names {
        Some(n) if n.len() == d => n,
        Some(_) => return Err(Error::InvalidParameter("one basis name per dimension is required".into())),
        None => {
            owned = basis_names(d);
            &owned
        }
    };
    let size = constants.size();
    if size > super::DEFAULT_MAX_CARRIER {
        return Err(Error::CarrierTooLarge { size, limit: super::DEFAULT_MAX_CARRIER });
    }
    let vecs: Vec<Vec<usize>> = (0..size).map(|x| constants.decode(x)).collect();
    let carrier = Carrier::new(vecs.iter().map(|v| vector_name(f, v, names)).collect())?;
    let mut add = Vec::with_capacity(size * size);
    let mut bracket = Vec::with_capacity(size * size);
    for x in &vecs {
        for y in &vecs {
            add.push(constants.encode(&constants.add(x, y)) as u32);
            bracket.push(constants.encode(&constants.bracket(x, y)) as u32);
        }
    }
    let scalar: Vec<u32> =
        (0..q).flat_map(|l| vecs.iter().map(move |x| constants.encode(&constants.scale(l, x)) as u32)).collect();
    let algebra = FiniteLieHyperalgebra::new(
        carrier,
        HyperOpTable::from_singles("add", size, size, size, &add)?,
        HyperOpTable::from_singles("scalar", q, size, size, &scalar)?,
        HyperOpTable::from_singles("bracket", size, size, size, &bracket)?,
        FiniteHyperfield::from_field(f)?,
        0,
    )?;
    let report = check_lie_hyperalgebra(&algebra)?;
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    Ok(TrivialLie { algebra, constants: constants.clone(), even_characteristic: f.characteristic() == 2 })
}

/// Nonzero elements of `𝔽_q` as a checked multiplicative subgroup.
fn check_mul_subgroup(field: &FiniteField, subgroup: &[usize]) -> Result<Subset> {
    let q = field.order();
    let g = Subset::from_iter(q, subgroup.iter().copied().filter(|&x| x < q));
    if g.len() != subgroup.len() || g.contains(field.zero()) {
        return Err(Error::NotASubgroup("elements must be distinct nonzero field elements".into()));
    }
    if !g.contains(field.one()) {
        return Err(Error::NotASubgroup("1 is missing".into()));
    }
    for a in g.iter() {
        for b in g.iter() {
            if !g.contains(field.mul(a, b)) {
                return Err(Error::NotASubgroup(format!("not closed at ({a}, {b})")));
            }
        }
    }
    Ok(g)
}

/// Orbit labels of `x ↦ g·x` for a finite group of field scalars acting on
/// the vectors of `constants`' space (the zero vector is its own orbit).
fn orbit_labels(constants: &LieConstants, g: &Subset) -> (Vec<usize>, Vec<usize>) {
    let size = constants.size();
    let label: Vec<usize> = (0..size)
        .map(|x| {
            let v = constants.decode(x);
            g.iter().map(|s| constants.encode(&constants.scale(s, &v))).min().unwrap()
        })
        .collect();
    let mut reps = label.clone();
    reps.sort_unstable();
    reps.dedup();
    (label, reps)
}

/// Marty-style quotient `{0} ∪ 𝔽_q*/G` with `[a] ⊕ [b]` the set of classes
/// meeting `aG + bG` and `[a]·[b] = [ab]`.
pub fn gen_quotient_hyperfield(q: usize, subgroup: &[usize]) -> Result<FiniteHyperfield> {
    let field = FiniteField::galois(q)?;
    let g = check_mul_subgroup(&field, subgroup)?;
    let line = LieConstants::abelian(field.clone(), 1);
    let (label, reps) = orbit_labels(&line, &g);
    let index_of = |x: usize| reps.binary_search(&label[x]).unwrap();
    let names: Vec<String> =
        reps.iter().map(|&r| if r == field.zero() { "0".to_string() } else { format!("[{}]", field.name(r)) }).collect();
    let k = reps.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            let mut sum = Subset::empty(k);
            for s in g.iter() {
                for t in g.iter() {
                    sum.insert(index_of(field.add(field.mul(s, a), field.mul(t, b))));
                }
            }
            add.push(sum);
            mul.push(Subset::singleton(k, index_of(field.mul(a, b))));
        }
    }
    let hf = FiniteHyperfield::new(
        Carrier::new(names)?,
        HyperOpTable::new("add", k, k, k, add)?,
        HyperOpTable::new("mul", k, k, k, mul)?,
        index_of(field.zero()),
        index_of(field.one()),
    )?;
    let report = check_hyperfield(&hf)?;
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    Ok(hf)
}

/// Orbit structure `𝔽_q^d / G` for a Lie algebra over a prime field and a
/// multiplicative subgroup `G`: `[x] + [y] = { [gx + g′y] }`,
/// `[λ]·[x] = [λx]` and `[[x],[y]] = [[x,y]]`, over
/// [`gen_quotient_hyperfield`]`(q, G)`.
pub fn gen_coset_lie_hyperalgebra(constants: &LieConstants, subgroup: &[usize]) -> Result<FiniteLieHyperalgebra> {
    let field = constants.field();
    let q = field.order();
    let g = check_mul_subgroup(field, subgroup)?;
    let hf = gen_quotient_hyperfield(q, subgroup)?;
    let line = LieConstants::abelian(field.clone(), 1);
    let (_, freps) = orbit_labels(&line, &g);
    let (label, reps) = orbit_labels(constants, &g);
    let k = reps.len();
    if k > super::DEFAULT_MAX_CARRIER {
        return Err(Error::CarrierTooLarge { size: k, limit: super::DEFAULT_MAX_CARRIER });
    }
    let index_of = |x: usize| reps.binary_search(&label[x]).unwrap();
    let basis = basis_names(constants.dim());
    let names: Vec<String> = reps
        .iter()
        .map(|&r| {
            let v = vector_name(field, &constants.decode(r), &basis);
            if r == 0 { v } else { format!("[{v}]") }
        })
        .collect();
    let vecs: Vec<Vec<usize>> = reps.iter().map(|&r| constants.decode(r)).collect();
    let mut add = Vec::with_capacity(k * k);
    let mut bracket = Vec::with_capacity(k * k);
    for x in &vecs {
        for y in &vecs {
            let mut sum = Subset::empty(k);
            for s in g.iter() {
                for t in g.iter() {
                    sum.insert(index_of(constants.encode(&constants.add(&constants.scale(s, x), &constants.scale(t, y)))));
                }
            }
            add.push(sum);
            bracket.push(Subset::singleton(k, index_of(constants.encode(&constants.bracket(x, y)))));
        }
    }
    let mut scalar = Vec::with_capacity(freps.len() * k);
    // Hyperfield element i is the orbit of freps[i], as in gen_quotient_hyperfield.
    for &l in &freps {
        for x in &vecs {
            scalar.push(Subset::singleton(k, index_of(constants.encode(&constants.scale(l, x)))));
        }
    }
    let algebra = FiniteLieHyperalgebra::new(
        Carrier::new(names)?,
        HyperOpTable::new("add", k, k, k, add)?,
        HyperOpTable::new("scalar", freps.len(), k, k, scalar)?,
        HyperOpTable::new("bracket", k, k, k, bracket)?,
        hf,
        index_of(0),
    )?;
    let report = check_lie_hyperalgebra(&algebra)?;
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    Ok(algebra)
}

/// `[b,c]=a, [b,d]=b, [d,c]=c` over `𝔽_q`.
pub fn example_solvable_constants(q: usize) -> Result<LieConstants> {
    let f = FiniteField::galois(q)?;
    let e = |i: usize| {
        let mut v = vec![f.zero(); 4];
        v[i] = f.one();
        v
    };
    LieConstants::new(f.clone(), 4, &[(1, 2, e(0)), (1, 3, e(1)), (3, 2, e(2))])
}

/// `[a,b]=c, [b,c]=a, [c,a]=b` over `𝔽_q`.
pub fn example_perfect_constants(q: usize) -> Result<LieConstants> {
    let f = FiniteField::galois(q)?;
    let e = |i: usize| {
        let mut v = vec![f.zero(); 3];
        v[i] = f.one();
        v
    };
    LieConstants::new(f.clone(), 3, &[(0, 1, e(2)), (1, 2, e(0)), (2, 0, e(1))])
}

/// `[h,e]=2e, [h,f]=−2f, [e,f]=h` over `𝔽_q`.
pub fn sl2_constants(q: usize) -> Result<LieConstants> {
    let f = FiniteField::galois(q)?;
    let two = f.add(f.one(), f.one());
    let v = |h: usize, e: usize, g: usize| vec![h, e, g];
    let z = f.zero();
    LieConstants::new(f.clone(), 3, &[(0, 1, v(z, two, z)), (0, 2, v(z, z, f.neg(two))), (1, 2, v(f.one(), z, z))])
}

fn random_invertible(field: &FiniteField, dim: usize, rng: &mut ChaCha8Rng) -> Vec<Vector> {
    loop {
        let rows: Vec<Vector> = (0..dim).map(|_| (0..dim).map(|_| rng.gen_range(0..field.order())).collect()).collect();
        if row_reduce(field, &rows, dim).len() == dim {
            return rows;
        }
    }
}

/// A random solvable algebra `𝔽·d ⋉ V`: `V` abelian of dimension
/// `dim − 1`, `d` acting by a random matrix, written in a random basis.
pub fn random_solvable_constants(q: usize, dim: usize, seed: u64) -> Result<LieConstants> {
    if dim < 2 {
        return Err(Error::InvalidParameter("dimension must be at least 2".into()));
    }
    let f = FiniteField::galois(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = dim - 1;
    let brackets: Vec<(usize, usize, Vector)> = (0..d)
        .map(|i| {
            let mut v: Vector = (0..d).map(|_| rng.gen_range(0..q)).collect();
            v.push(f.zero());
            (d, i, v)
        })
        .collect();
    let c = LieConstants::new(f.clone(), dim, &brackets)?;
    c.change_basis(&random_invertible(&f, dim, &mut rng))
}

/// A perfect three-dimensional algebra (`sl₂` or the cross-product algebra,
/// by seed parity) written in a random basis.
pub fn random_perfect_constants(q: usize, seed: u64) -> Result<LieConstants> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = if seed % 2 == 0 { sl2_constants(q)? } else { example_perfect_constants(q)? };
    c.change_basis(&random_invertible(c.field(), 3, &mut rng))
}
