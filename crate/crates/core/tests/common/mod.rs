//! Fixtures and brute-force reference implementations shared by the
//! integration tests. Nothing here calls the relation engine, the partition
//! type or the linear-algebra helpers it is compared against.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use hyperlie_core::quotient::{FiniteField, LieConstants};
use hyperlie_core::structure::generate::*;
use hyperlie_core::structure::{FiniteHyperfield, FiniteLieHyperalgebra};

pub type Set = BTreeSet<usize>;

pub fn ex1() -> FiniteLieHyperalgebra {
    gen_trivial_from_lie(&example_solvable_constants(3).unwrap(), None).unwrap().algebra
}

pub fn ex2() -> FiniteLieHyperalgebra {
    gen_trivial_from_lie(&example_perfect_constants(3).unwrap(), None).unwrap().algebra
}

pub fn ab1() -> FiniteLieHyperalgebra {
    gen_trivial_from_lie(&LieConstants::abelian(FiniteField::galois(3).unwrap(), 1), None).unwrap().algebra
}

/// `[a,b] = a` over `𝔽₃`, 9 elements.
pub fn affine3() -> FiniteLieHyperalgebra {
    let f = FiniteField::galois(3).unwrap();
    gen_trivial_from_lie(&LieConstants::new(f, 2, &[(0, 1, vec![1, 0])]).unwrap(), None).unwrap().algebra
}

/// Orbit structures `V/G` over the quotient hyperfield `𝔽_q/G`.
pub fn multivalued() -> Vec<(String, FiniteLieHyperalgebra)> {
    let f3 = FiniteField::galois(3).unwrap();
    let f5 = FiniteField::galois(5).unwrap();
    let f7 = FiniteField::galois(7).unwrap();
    let affine = LieConstants::new(f3.clone(), 2, &[(0, 1, vec![1, 0])]).unwrap();
    [
        ("F3/{1,2} dim 1", LieConstants::abelian(f3.clone(), 1), vec![1, 2]),
        ("F5/{1,4} dim 1", LieConstants::abelian(f5, 1), vec![1, 4]),
        ("F7/{1,2,4} dim 1", LieConstants::abelian(f7.clone(), 1), vec![1, 2, 4]),
        ("F7/{1,6} dim 1", LieConstants::abelian(f7, 1), vec![1, 6]),
        ("F3/{1,2} [a,b]=a", affine, vec![1, 2]),
    ]
    .into_iter()
    .map(|(name, c, g)| (name.to_string(), gen_coset_lie_hyperalgebra(&c, &g).unwrap()))
    .collect()
}

fn set(s: &hyperlie_core::Subset) -> Set {
    s.iter().collect()
}

pub fn hf_add(f: &FiniteHyperfield, a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| set(f.add().get(x, y)))).collect()
}

pub fn hf_mul(f: &FiniteHyperfield, a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| set(f.mul().get(x, y)))).collect()
}

pub fn add(l: &FiniteLieHyperalgebra, a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| set(l.add().get(x, y)))).collect()
}

pub fn bracket(l: &FiniteLieHyperalgebra, a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| set(l.bracket().get(x, y)))).collect()
}

pub fn scale(l: &FiniteLieHyperalgebra, lambdas: &Set, xs: &Set) -> Set {
    lambdas.iter().flat_map(|&c| xs.iter().flat_map(move |&x| set(l.scalar().get(c, x)))).collect()
}

/// `L^[0..=depth]` by repeated setwise bracketing.
pub fn derived_sets(l: &FiniteLieHyperalgebra, depth: usize) -> Vec<Set> {
    let mut out = vec![(0..l.len()).collect::<Set>()];
    for _ in 0..depth {
        let prev = out.last().unwrap();
        out.push(bracket(l, prev, prev));
    }
    out
}

/// All permutations of `0..n` as index vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Coefficient value pairs `(A, A′)`: sums of at most `p` products of at most
/// `q` factors, the primed side under every factor and summand reordering.
/// With `permute = false` only the identity ordering is used.
pub fn naive_coefficients(f: &FiniteHyperfield, p: usize, q: usize, permute: bool) -> HashSet<(Set, Set)> {
    let n = f.len();
    // (value, permuted value) per product
    let mut products: HashSet<(Set, Set)> = HashSet::new();
    for k in 1..=q {
        let total = n.pow(k as u32);
        for code in 0..total {
            let factors: Vec<usize> = (0..k).map(|i| code / n.pow(i as u32) % n).collect();
            let eval = |order: &[usize]| {
                order.iter().skip(1).fold(Set::from([factors[order[0]]]), |acc, &i| hf_mul(f, &acc, &Set::from([factors[i]])))
            };
            let id: Vec<usize> = (0..k).collect();
            let base = eval(&id);
            let perms = if permute { permutations(k) } else { vec![id.clone()] };
            for pi in perms {
                products.insert((base.clone(), eval(&pi)));
            }
        }
    }
    let products: Vec<(Set, Set)> = products.into_iter().collect();
    let mut out = HashSet::new();
    let mut stack: Vec<Vec<usize>> = (0..products.len()).map(|i| vec![i]).collect();
    while let Some(terms) = stack.pop() {
        let sum = |vals: Vec<&Set>| vals.iter().skip(1).fold(vals[0].clone(), |acc, v| hf_add(f, &acc, v));
        let left = sum(terms.iter().map(|&i| &products[i].0).collect());
        let perms = if permute { permutations(terms.len()) } else { vec![(0..terms.len()).collect()] };
        for sigma in perms {
            out.insert((left.clone(), sum(sigma.iter().map(|&i| &products[terms[i]].1).collect())));
        }
        if terms.len() < p {
            for i in 0..products.len() {
                let mut t = terms.clone();
                t.push(i);
                stack.push(t);
            }
        }
    }
    out
}

/// Binary bracket-tree shapes with `m` leaves, as nested splits.
#[derive(Clone, Debug)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

pub fn shapes(m: usize) -> Vec<Shape> {
    if m == 1 {
        return vec![Shape::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..m {
        for l in shapes(k) {
            for r in shapes(m - k) {
                out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

fn eval_tree(l: &FiniteLieHyperalgebra, shape: &Shape, leaves: &[Set], pos: &mut usize) -> Set {
    match shape {
        Shape::Leaf => {
            *pos += 1;
            leaves[*pos - 1].clone()
        }
        Shape::Node(a, b) => {
            let x = eval_tree(l, a, leaves, pos);
            let y = eval_tree(l, b, leaves, pos);
            bracket(l, &x, &y)
        }
    }
}

/// Which relation the brute-force enumerator builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    L,
    Sn(usize),
}

/// The relation straight from its definition: every expression with at
/// most `t` summands, `m` leaves per summand and coefficients of at most
/// `p` products of `q` factors, paired with all admissible reorderings.
/// Returns the relation as a boolean matrix.
pub fn naive_relation(l: &FiniteLieHyperalgebra, kind: Kind, t: usize, m: usize, p: usize, q: usize) -> Vec<Vec<bool>> {
    let n = l.len();
    let permute = kind != Kind::L;
    let gate = match kind {
        Kind::L => Set::new(),
        Kind::Sn(k) => derived_sets(l, k - 1).pop().unwrap(),
    };
    let coeffs: Vec<(Set, Set)> = naive_coefficients(l.field(), p, q, permute).into_iter().collect();
    // leaves: (left value, right value, h)
    let mut leaves: Vec<(Set, Set, usize)> = Vec::new();
    for (a, b) in &coeffs {
        for h in 0..n {
            let hs = Set::from([h]);
            leaves.push((scale(l, a, &hs), scale(l, b, &hs), h));
        }
    }
    let mut summands: HashSet<(Set, Set)> = HashSet::new();
    for size in 1..=m {
        let shape_list = shapes(size);
        let total = leaves.len().pow(size as u32);
        for code in 0..total {
            let pick: Vec<usize> = (0..size).map(|i| code / leaves.len().pow(i as u32) % leaves.len()).collect();
            let left_vals: Vec<Set> = pick.iter().map(|&i| leaves[i].0.clone()).collect();
            let perms: Vec<Vec<usize>> = if permute {
                permutations(size)
                    .into_iter()
                    .filter(|pi| (0..size).all(|j| pi[j] == j || (gate.contains(&leaves[pick[j]].2) && gate.contains(&leaves[pick[pi[j]]].2))))
                    .collect()
            } else {
                vec![(0..size).collect()]
            };
            for shape in &shape_list {
                let x = eval_tree(l, shape, &left_vals, &mut 0);
                for pi in &perms {
                    let right_vals: Vec<Set> = pi.iter().map(|&j| leaves[pick[j]].1.clone()).collect();
                    let y = if permute { eval_tree(l, shape, &right_vals, &mut 0) } else { x.clone() };
                    summands.insert((x.clone(), y));
                }
            }
        }
    }
    let summands: Vec<(Set, Set)> = summands.into_iter().collect();
    let mut rel = vec![vec![false; n]; n];
    let mut mark = |x: &Set, y: &Set| {
        for &a in x {
            for &b in y {
                rel[a][b] = true;
            }
        }
    };
    let s = summands.len();
    for k in 1..=t {
        let perms = if permute { permutations(k) } else { vec![(0..k).collect()] };
        for code in 0..s.pow(k as u32) {
            let pick: Vec<usize> = (0..k).map(|i| code / s.pow(i as u32) % s).collect();
            let sum = |vals: Vec<&Set>| vals.iter().skip(1).fold(vals[0].clone(), |acc, v| add(l, &acc, v));
            let x = sum(pick.iter().map(|&i| &summands[i].0).collect());
            for sigma in &perms {
                let y = sum(sigma.iter().map(|&i| &summands[pick[i]].1).collect());
                if kind == Kind::L {
                    mark(&x, &x);
                } else {
                    mark(&x, &y);
                }
            }
        }
    }
    rel
}

/// Connected components as a sorted list of sorted classes.
pub fn naive_closure(rel: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = rel.len();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if rel[x][y] && label[x] != label[y] {
                    let m = label[x].min(label[y]);
                    label[x] = m;
                    label[y] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        match classes.iter_mut().find(|c| label[c[0]] == label[x]) {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    classes
}

/// For a single-valued algebra: the classical derived subspace `L⁽ᵏ⁾` by
/// spanning bracket images over the carrier.
pub fn naive_derived_subspace(l: &FiniteLieHyperalgebra, k: usize) -> Set {
    let single = |s: &hyperlie_core::Subset| s.single().expect("single-valued");
    let span = |seeds: Set| -> Set {
        let mut s: Set = seeds;
        s.insert(l.zero());
        loop {
            let mut next = s.clone();
            for &x in &s {
                for c in 0..l.field().len() {
                    next.insert(single(l.scalar().get(c, x)));
                }
                for &y in &s {
                    next.insert(single(l.add().get(x, y)));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let mut cur: Set = (0..l.len()).collect();
    for _ in 0..k {
        let images: Set = cur.iter().flat_map(|&x| cur.iter().map(move |&y| (x, y))).map(|(x, y)| single(l.bracket().get(x, y))).collect();
        cur = span(images);
    }
    cur
}

/// Cosets of a subgroup `S` of `(L, +)` for a single-valued algebra.
pub fn naive_cosets(l: &FiniteLieHyperalgebra, sub: &Set) -> Vec<Vec<usize>> {
    let n = l.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = sub.iter().map(|&s| l.add().single(x, s).unwrap()).collect();
        c.sort_unstable();
        for &y in &c {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

pub fn log_q(size: usize, q: usize) -> usize {
    let mut d = 0;
    let mut p = 1;
    while p < size {
        p *= q;
        d += 1;
    }
    assert_eq!(p, size, "{size} is not a power of {q}");
    d
}
