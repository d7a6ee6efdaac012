mod common;

use common::*;
use hyperlie_core::analysis::*;
use hyperlie_core::quotient::*;
use hyperlie_core::relation::*;
use hyperlie_core::structure::generate::*;
use hyperlie_core::structure::FiniteLieHyperalgebra;
use hyperlie_core::{Error, Subset};

fn subset(l: &FiniteLieHyperalgebra, names: &[&str]) -> Subset {
    Subset::from_iter(l.len(), names.iter().map(|n| l.carrier().index_of(n).unwrap()))
}

fn view(l: &FiniteLieHyperalgebra, n: usize) -> SnView {
    SnView::compute(l, n, &ExpressionBounds::DEFAULT).unwrap()
}

fn names(l: &FiniteLieHyperalgebra, s: &Subset) -> Vec<String> {
    s.iter().map(|x| l.carrier().name(x).to_string()).collect()
}

fn el(l: &FiniteLieHyperalgebra, name: &str) -> Set {
    Set::from([l.carrier().index_of(name).unwrap()])
}

#[test]
fn span_of_a_is_a_part_for_n_at_least_two() {
    let l = ex1();
    let k = subset(&l, &["0", "a", "2a"]);
    for n in 2..=3 {
        assert!(is_sn_part(&l, &view(&l, n), &k).unwrap().is_part, "n = {n}");
    }
    // Single-summand expressions never leave the span at n = 1 ...
    let one = SnView::compute(&l, 1, &ExpressionBounds::new(1, 2, 1, 1).unwrap()).unwrap();
    assert!(is_sn_part(&l, &one, &k).unwrap().is_part);
    // ... but two summands do: b+[b,2d] = {0} while b+[2d,b] = {2b}.
    let v = is_sn_part(&l, &view(&l, 1), &k).unwrap();
    assert!(!v.is_part);
    let w = v.witness.unwrap();
    assert_eq!((w.left_expr.as_str(), w.right_expr.as_str()), ("b+[b,2d]", "b+[2d,b]"));
    assert_eq!((names(&l, &w.left), names(&l, &w.right)), (vec!["0".to_string()], vec!["2b".to_string()]));
    let (b, d2) = (el(&l, "b"), el(&l, "2d"));
    assert_eq!(add(&l, &b, &bracket(&l, &b, &d2)), el(&l, "0"));
    assert_eq!(add(&l, &b, &bracket(&l, &d2, &b)), el(&l, "2b"));
    // the closure form agrees: 0 and 2b share an S1* class
    let s1 = view(&l, 1).closure;
    assert!(s1.related(l.zero(), l.carrier().index_of("2b").unwrap()));
}

#[test]
fn singleton_a_fails_at_two_with_the_bracket_witness() {
    let l = ex1();
    let k = subset(&l, &["a"]);
    let v = is_sn_part(&l, &view(&l, 2), &k).unwrap();
    assert!(!v.is_part);
    let w = v.witness.unwrap();
    assert_eq!((w.left_expr.as_str(), w.right_expr.as_str()), ("[b,c]", "[c,b]"));
    assert!(w.left.intersects(&k) && !w.right.is_subset(&k));
    assert!(is_sn_part(&l, &view(&l, 3), &k).unwrap().is_part);
    assert!(matches!(is_sn_part(&l, &view(&l, 2), &Subset::empty(l.len())), Err(Error::InvalidParameter(_))));
}

#[test]
fn singleton_b_and_s2() {
    let l = ex1();
    let k = subset(&l, &["b"]);
    for bounds in [(1, 2, 1, 1), (1, 3, 1, 1), (2, 1, 1, 1)] {
        let v = SnView::compute(&l, 2, &ExpressionBounds::new(bounds.0, bounds.1, bounds.2, bounds.3).unwrap()).unwrap();
        assert!(is_sn_part(&l, &v, &k).unwrap().is_part, "{bounds:?}");
    }
    // a+b+[b,2c] = {b} while a+b+[2c,b] = {2a+b}
    let v = is_sn_part(&l, &view(&l, 2), &k).unwrap();
    assert!(!v.is_part);
    let w = v.witness.unwrap();
    assert_eq!((w.left_expr.as_str(), w.right_expr.as_str()), ("a+b+[b,2c]", "a+b+[2c,b]"));
    let (ab, b, c2) = (el(&l, "a+b"), el(&l, "b"), el(&l, "2c"));
    assert_eq!(add(&l, &ab, &bracket(&l, &b, &c2)), b);
    assert_eq!(add(&l, &ab, &bracket(&l, &c2, &b)), el(&l, "2a+b"));
    assert_eq!(view(&l, 2).closure.class(l.carrier().index_of("b").unwrap()).len(), 3);
    assert!(is_sn_part(&l, &view(&l, 3), &k).unwrap().is_part);
}

#[test]
fn neighbourhoods() {
    let l = ex1();
    let a = l.carrier().index_of("a").unwrap();
    let v2 = view(&l, 2);
    let p = neighborhood_p(&v2, a);
    assert!(p.members.contains(a) && p.members.contains(l.carrier().index_of("2a").unwrap()));
    assert_eq!(v2.closure.class(a).len(), 3);
    assert_eq!(neighborhood_p(&view(&l, 3), a).members, Subset::singleton(l.len(), a));
    for x in 0..l.len() {
        let p = neighborhood_p(&v2, x).members;
        assert!(p.contains(x));
        let class: Subset = v2.closure.class_set(v2.closure.class_of(x));
        assert!(p.is_subset(&class));
        let mut union = Subset::empty(l.len());
        for y in class.iter() {
            union.union_with(&neighborhood_p(&v2, y).members);
        }
        assert_eq!(union, class);
    }
}

#[test]
fn lemma_three_forms_agree() {
    // exhaustive on small carriers
    let mut cases = vec![ab1()];
    cases.extend(multivalued().into_iter().map(|(_, l)| l).filter(|l| l.len() <= 5));
    for l in &cases {
        for n in 1..=3 {
            let v = view(l, n);
            let sample = default_lemma_sample(&v, 0, 0);
            assert_eq!(sample.len(), (1 << l.len()) - 1);
            let r = lemma_equivalence_check(&v, &sample);
            assert!(r.disagreements.is_empty());
            assert!(r.parts >= 1);
        }
    }
    for l in [ex1(), ex2()] {
        for n in 1..=3 {
            let v = view(&l, n);
            let sample = default_lemma_sample(&v, 11, 64);
            let r = lemma_equivalence_check(&v, &sample);
            assert!(r.disagreements.is_empty(), "{:?}", r.disagreements.first());
            let full = lemma_equivalence_check(&v, &[l.full()]);
            assert_eq!(full.parts, 1);
        }
    }
    let ex2 = ex2();
    let v = view(&ex2, 1);
    let unions = default_lemma_sample(&v, 0, 0);
    assert_eq!(lemma_equivalence_check(&v, &unions).parts, unions.len());
}

#[test]
fn transitivity_criteria_agree() {
    let mut cases = vec![ex1(), ex2(), ab1(), affine3()];
    cases.extend(multivalued().into_iter().map(|(_, l)| l));
    for l in &cases {
        for n in 1..=3 {
            for bounds in [ExpressionBounds::DEFAULT, ExpressionBounds::new(1, 3, 1, 1).unwrap(), ExpressionBounds::new(1, 1, 2, 2).unwrap()] {
                let r = is_transitive_sn(&SnView::compute(l, n, &bounds).unwrap());
                assert!(r.agree(), "{r:?}");
            }
        }
    }
    assert!(is_transitive_sn(&view(&ex1(), 3)).transitive);
    assert!(is_transitive_sn(&view(&ex2(), 1)).transitive);
}

#[test]
fn non_transitive_instance() {
    // A basis-scrambled sl2 over F5; with single three-leaf summands the
    // relation S1 is not transitive.
    let l = gen_trivial_from_lie(&random_perfect_constants(5, 0).unwrap(), None).unwrap().algebra;
    let v = SnView::compute(&l, 1, &ExpressionBounds::new(1, 3, 1, 1).unwrap()).unwrap();
    let r = is_transitive_sn(&v);
    assert!(!r.transitive && r.agree());
    let x = r.first_gap.unwrap();
    assert_ne!(neighborhood_p(&v, x).members, v.closure.class_set(v.closure.class_of(x)));
    // an explicit broken triple x ~ y ~ z with x and z unrelated
    let rel = &v.relation;
    let triple = (0..l.len()).find_map(|a| rel.row(a).iter().find_map(|b| rel.row(b).iter().find(|&c| !rel.contains(a, c)).map(|c| (a, b, c))));
    let (a, b, c) = triple.expect("broken triple");
    assert!(rel.contains(a, b) && rel.contains(b, c) && !rel.contains(a, c));
}

#[test]
fn search_log_stops_at_the_first_hit() {
    let cands: Vec<(String, FiniteLieHyperalgebra)> = vec![
        ("AB1".into(), ab1()),
        ("sl2".into(), gen_trivial_from_lie(&random_perfect_constants(5, 0).unwrap(), None).unwrap().algebra),
    ];
    let bounds = [ExpressionBounds::new(1, 2, 1, 1).unwrap(), ExpressionBounds::new(1, 3, 1, 1).unwrap()];
    let log = search_non_transitive(&Engine::default(), &cands, &[1], &bounds).unwrap();
    let hit = &log.entries[log.hit.unwrap()];
    assert_eq!((hit.name.as_str(), hit.bounds), ("sl2", bounds[1]));
    assert_eq!(log.entries.len(), 4);
}

#[test]
fn stabilization() {
    let s = relation_s(&ex1(), &ExpressionBounds::DEFAULT, DEFAULT_N_CAP).unwrap();
    assert_eq!(s.m, 3);
    assert!(s.relation.is_discrete() && s.meet_agrees);
    let s = relation_s(&ex2(), &ExpressionBounds::DEFAULT, DEFAULT_N_CAP).unwrap();
    assert_eq!(s.m, 1);
    assert!(s.relation.is_full());
    let s = relation_s(&ab1(), &ExpressionBounds::DEFAULT, DEFAULT_N_CAP).unwrap();
    assert_eq!(s.m, 1);
    assert!(s.relation.is_discrete());
    // the chain refines and the reported relation is the meet
    let s = relation_s(&ex1(), &ExpressionBounds::DEFAULT, DEFAULT_N_CAP).unwrap();
    for w in s.chain.windows(2) {
        assert!(w[1].refines(&w[0]));
    }
    assert!(matches!(relation_s(&ex1(), &ExpressionBounds::DEFAULT, 2), Err(Error::NoStabilization(2))));
}

fn brute_force_minimum(l: &FiniteLieHyperalgebra, delta: &Partition) -> Vec<Vec<usize>> {
    // Qualifying partitions, then the one contained in all others.
    let qualifying: Vec<Partition> = partitions(l.len())
        .filter(|p| {
            is_strongly_regular(l, p)
                && quotient_lie_algebra(l, p, delta).is_ok_and(|q| q.derived_series(8).solvable_length.is_some())
        })
        .collect();
    let min = qualifying.iter().find(|m| qualifying.iter().all(|x| m.classes().iter().all(|c| c.iter().all(|&y| x.related(c[0], y))))).unwrap();
    min.classes().to_vec()
}

#[test]
fn smallest_solvable_oracle_certificates() {
    let mut cases = vec![("AB1".to_string(), ab1())];
    cases.push(("F5 dim 1".into(), gen_trivial_from_lie(&LieConstants::abelian(FiniteField::galois(5).unwrap(), 1), None).unwrap().algebra));
    cases.extend(multivalued().into_iter().filter(|(_, l)| l.len() <= 6));
    for (name, l) in &cases {
        let delta = Engine::default().closure(l, RelationKind::Alpha, &ExpressionBounds::DEFAULT).unwrap();
        let s = relation_s(l, &ExpressionBounds::DEFAULT, DEFAULT_N_CAP).unwrap().relation;
        let c = smallest_solvable_oracle(l, &delta, &s).unwrap();
        assert_eq!(c.checked, bell(l.len()), "{name}");
        assert!(c.agrees_with_engine && c.engine_qualifies, "{name}");
        assert_eq!(c.minimality_violations, 0, "{name}");
        assert_eq!(c.minimal.unwrap().classes(), brute_force_minimum(l, &delta).as_slice(), "{name}");
    }
    let l = ab1();
    let c = smallest_solvable_oracle(&l, &Partition::discrete(3), &Partition::discrete(3)).unwrap();
    assert!(c.minimal.unwrap().is_discrete());
    // abelian: every strongly regular partition qualifies
    let regular = partitions(3).filter(|p| is_strongly_regular(&l, p)).count();
    assert_eq!(c.qualifying.len(), regular);
}

#[test]
fn oracle_guards() {
    assert!(matches!(smallest_solvable_oracle(&affine3(), &Partition::discrete(3), &Partition::discrete(9)), Err(Error::TooLarge { .. })));
    let f2 = FiniteField::galois(2).unwrap();
    let l = gen_trivial_from_lie(&LieConstants::new(f2, 2, &[(0, 1, vec![1, 0])]).unwrap(), None).unwrap().algebra;
    assert_eq!(smallest_solvable_oracle(&l, &Partition::discrete(2), &Partition::discrete(4)), Err(Error::CharTwoGate));
}

#[test]
fn restricted_growth_order() {
    let all: Vec<Partition> = partitions(4).collect();
    assert_eq!(all.len() as u64, bell(4));
    assert!(all[0].is_full());
    assert!(all.last().unwrap().is_discrete());
}
