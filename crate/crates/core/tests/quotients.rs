mod common;

use common::*;
use hyperlie_core::analysis::{partitions, quotient_lemma_check};
use hyperlie_core::quotient::*;
use hyperlie_core::relation::*;
use hyperlie_core::structure::generate::*;
use hyperlie_core::structure::FiniteLieHyperalgebra;
use hyperlie_core::Error;

fn closure(l: &FiniteLieHyperalgebra, kind: RelationKind) -> Partition {
    Engine::default().closure(l, kind, &ExpressionBounds::DEFAULT).unwrap()
}

fn quotient(l: &FiniteLieHyperalgebra, kind: RelationKind) -> FiniteLieAlgebra {
    quotient_lie_algebra(l, &closure(l, kind), &closure(l, RelationKind::Alpha)).unwrap()
}

/// Dimensions of the derived series by direct set computation on the
/// quotient tables.
fn naive_series_dims(a: &FiniteLieAlgebra) -> Vec<usize> {
    let q = a.field().order();
    let span = |seeds: Vec<usize>| {
        let mut s: std::collections::BTreeSet<usize> = seeds.into_iter().collect();
        s.insert(a.zero());
        loop {
            let mut next = s.clone();
            for &x in &s {
                for l in 0..q {
                    next.insert(a.scale(l, x));
                }
                for &y in &s {
                    next.insert(a.add(x, y));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let mut cur: std::collections::BTreeSet<usize> = (0..a.len()).collect();
    let mut dims = vec![log_q(cur.len(), q)];
    while cur.len() > 1 {
        let next = span(cur.iter().flat_map(|&x| cur.iter().map(move |&y| a.bracket(x, y))).collect());
        if next == cur {
            break;
        }
        cur = next;
        dims.push(log_q(cur.len(), q));
    }
    dims
}

#[test]
fn ex1_quotients() {
    let l = ex1();
    for (kind, dim, len, dims) in [
        (RelationKind::L, 4, 3, vec![4, 3, 1, 0]),
        (RelationKind::A, 1, 1, vec![1, 0]),
        (RelationKind::Sn(2), 3, 2, vec![3, 2, 0]),
        (RelationKind::Sn(3), 4, 3, vec![4, 3, 1, 0]),
    ] {
        let q = quotient(&l, kind);
        assert_eq!(q.dimension().unwrap(), dim, "{kind}");
        let series = q.derived_series(DEFAULT_SERIES_DEPTH);
        assert_eq!(series.solvable_length, Some(len), "{kind}");
        assert_eq!(series.dims, dims, "{kind}");
        assert_eq!(naive_series_dims(&q), dims, "{kind}");
    }
}

#[test]
fn ex1_mod_s2_has_the_expected_brackets() {
    let l = ex1();
    let rho = closure(&l, RelationKind::Sn(2));
    let q = quotient(&l, RelationKind::Sn(2));
    let class = |name: &str| rho.class_of(l.carrier().index_of(name).unwrap());
    let (a, b, c, d) = (class("a"), class("b"), class("c"), class("d"));
    assert_eq!(a, q.zero());
    assert_eq!(q.bracket(b, d), b);
    assert_eq!(q.bracket(d, c), c);
    assert_eq!(q.bracket(b, c), q.zero());
    assert!(!q.is_perfect());
}

#[test]
fn coarse_partition_is_not_well_defined() {
    let l = ex1();
    let d = l.carrier().index_of("d").unwrap();
    let mut labels: Vec<usize> = (0..l.len()).collect();
    labels[d] = l.zero();
    let rho = Partition::from_labels(&labels);
    match quotient_lie_algebra(&l, &rho, &Partition::discrete(3)) {
        Err(Error::NotWellDefined { witness, .. }) => assert_eq!(witness.len(), 6),
        other => panic!("expected NotWellDefined, got {other:?}"),
    }
}

#[test]
fn perfect_and_abelian() {
    let q = quotient(&ex2(), RelationKind::L);
    assert!(q.is_perfect());
    assert_eq!(q.derived_series(DEFAULT_SERIES_DEPTH).solvable_length, None);
    assert_eq!(quotient(&ex2(), RelationKind::A).dimension().unwrap(), 0);
    assert!(!quotient(&ex1(), RelationKind::L).is_perfect());
    let ab = quotient(&ab1(), RelationKind::L);
    assert!(!ab.is_perfect());
    assert_eq!(ab.derived_series(4).solvable_length, Some(1));
}

#[test]
fn ex2_mod_l_matches_the_input_constants() {
    let l = ex2();
    let q = quotient(&l, RelationKind::L);
    assert_eq!(q.len(), 27);
    let rho = closure(&l, RelationKind::L);
    for x in 0..l.len() {
        for y in 0..l.len() {
            let z = l.bracket().single(x, y).unwrap();
            assert_eq!(q.bracket(rho.class_of(x), rho.class_of(y)), rho.class_of(z));
        }
    }
}

#[test]
fn dimension_examples() {
    assert_eq!(subspace_dim(27, 3), Ok(3));
    assert_eq!(subspace_dim(1, 3), Ok(0));
    assert_eq!(subspace_dim(81, 3), Ok(4));
    assert!(matches!(subspace_dim(6, 3), Err(Error::NotAVectorSpace { .. })));
}

#[test]
fn characteristic_gate() {
    assert_eq!(FiniteField::galois(3).unwrap().characteristic(), 3);
    assert_eq!(FiniteField::galois(9).unwrap().characteristic(), 3);
    let f2 = FiniteField::galois(2).unwrap();
    assert_eq!(f2.characteristic(), 2);
    assert_eq!(f2.require_char_not_2(), Err(Error::CharTwoGate));
    assert!(FiniteField::galois(4).unwrap().require_char_not_2().is_err());
}

#[test]
fn linear_oracle_examples() {
    let c = example_solvable_constants(3).unwrap();
    let sizes = |n| {
        let p = c.linear_oracle_sn(n).unwrap();
        (p.num_classes(), p.classes()[0].len())
    };
    assert_eq!(sizes(1), (3, 27));
    assert_eq!(sizes(2), (27, 3));
    assert_eq!(sizes(3), (81, 1));
    assert_eq!(c.derived_dims(4), vec![4, 3, 1, 0, 0]);
}

#[test]
fn remark_dimension_formula_on_trivial_structures() {
    let mut cases = vec![example_solvable_constants(3).unwrap(), example_perfect_constants(3).unwrap(), LieConstants::abelian(FiniteField::galois(3).unwrap(), 1)];
    for seed in 0..3 {
        cases.push(random_solvable_constants(3, 4, seed).unwrap());
        cases.push(random_perfect_constants(5, seed).unwrap());
    }
    for c in &cases {
        let l = gen_trivial_from_lie(c, None).unwrap().algebra;
        let dim_l = log_q(l.len(), c.field().order());
        for n in 1..=4 {
            let derived = naive_derived_subspace(&l, n);
            let p = closure(&l, RelationKind::Sn(n));
            let q = quotient_lie_algebra(&l, &p, &Partition::discrete(c.field().order())).unwrap();
            assert_eq!(q.dimension().unwrap(), dim_l - log_q(derived.len(), c.field().order()));
            // class of 0 is the derived subspace itself
            assert_eq!(p.class(l.zero()).iter().copied().collect::<Set>(), derived);
            assert_eq!(p, c.linear_oracle_sn(n).unwrap());
        }
    }
}

#[test]
fn solvable_length_is_at_most_n() {
    let mut cases = vec![ex1(), ex2(), ab1(), affine3()];
    cases.extend(multivalued().into_iter().map(|(_, l)| l));
    for l in &cases {
        for n in 1..=4 {
            let q = quotient(l, RelationKind::Sn(n));
            let len = q.derived_series(DEFAULT_SERIES_DEPTH).solvable_length.expect("solvable");
            assert!(len <= n);
        }
    }
}

#[test]
fn lemma_both_directions_on_small_carriers() {
    let mut cases = vec![ab1(), gen_trivial_from_lie(&LieConstants::abelian(FiniteField::galois(5).unwrap(), 1), None).unwrap().algebra];
    let f2 = FiniteField::galois(2).unwrap();
    cases.push(gen_trivial_from_lie(&LieConstants::new(f2.clone(), 2, &[(0, 1, vec![1, 0])]).unwrap(), None).unwrap().algebra);
    cases.push(gen_trivial_from_lie(&LieConstants::abelian(FiniteField::galois(4).unwrap(), 1), None).unwrap().algebra);
    cases.extend(multivalued().into_iter().map(|(_, l)| l).filter(|l| l.len() <= 5));
    for l in &cases {
        let delta = closure(l, RelationKind::Alpha);
        let report = quotient_lemma_check(l, &delta, 5).unwrap();
        assert!(report.disagreements.is_empty(), "{:?}", report.disagreements);
        // Independent pass: a quotient that builds must pass the regularity test.
        for rho in partitions(l.len()) {
            if quotient_lie_algebra(l, &rho, &delta).is_ok() {
                assert!(is_strongly_regular(l, &rho));
            }
        }
    }
}

#[test]
fn quotient_addition_is_abelian() {
    let l = ex1();
    for kind in [RelationKind::L, RelationKind::A, RelationKind::Sn(2)] {
        let q = quotient(&l, kind);
        for x in 0..q.len() {
            for y in 0..q.len() {
                assert_eq!(q.add(x, y), q.add(y, x));
            }
        }
    }
}

#[test]
fn linear_model_recovers_constants() {
    let l = ex1();
    let m = LinearModel::recover(&l).unwrap();
    assert_eq!(m.dim(), 4);
    for n in 1..=3 {
        assert_eq!(m.oracle_sn(n).unwrap(), example_solvable_constants(3).unwrap().linear_oracle_sn(n).unwrap());
    }
}
