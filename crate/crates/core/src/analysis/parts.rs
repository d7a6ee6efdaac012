use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Engine, ExprNames, ExpressionBounds, Mode, PairFamily, Partition};
use crate::structure::FiniteLieHyperalgebra;
use crate::subset::Subset;

/// One computed 𝒮ₙ: its pair family, the relation and its closure, at
/// fixed bounds.
#[derive(Clone, Debug)]
pub struct SnView {
    pub n: usize,
    pub bounds: ExpressionBounds,
    pub family: PairFamily,
    pub relation: BinaryRelation,
    pub closure: Partition,
}

impl SnView {
    pub fn compute(algebra: &FiniteLieHyperalgebra, n: usize, bounds: &ExpressionBounds) -> Result<Self> {
        Self::with_engine(&Engine::default(), algebra, n, bounds)
    }

    pub fn with_engine(engine: &Engine, algebra: &FiniteLieHyperalgebra, n: usize, bounds: &ExpressionBounds) -> Result<Self> {
        let family = engine.algebra_family(algebra, Mode::Gated(n), bounds)?;
        let relation = family.relation();
        let closure = relation.closure()?;
        Ok(Self { n, bounds: *bounds, family, relation, closure })
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }
}

/// `P(x) = { y : x 𝒮ₙ y }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSet {
    pub x: usize,
    pub members: Subset,
}

pub fn neighborhood_p(view: &SnView, x: usize) -> NeighborhoodSet {
    NeighborhoodSet { x, members: view.relation.row(x).clone() }
}

/// A pair of expressions whose first value meets `K` while the second
/// leaves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartWitness {
    pub left: Subset,
    pub right: Subset,
    pub left_expr: String,
    pub right_expr: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnPartVerdict {
    pub is_part: bool,
    pub witness: Option<PartWitness>,
}

/// Definition form: index of the first pair `(X, Y)` with `X ∩ K ≠ ∅` and
/// `Y ⊄ K`.
pub fn part_violation(view: &SnView, k: &Subset) -> Option<usize> {
    view.family.pairs().iter().position(|p| p.left.intersects(k) && !p.right.is_subset(k))
}

/// Neighbourhood form: `P(x) ⊆ K` for every `x ∈ K`.
pub fn part_by_relation(view: &SnView, k: &Subset) -> bool {
    k.iter().all(|x| view.relation.row(x).is_subset(k))
}

/// Closure form: `K` is a union of 𝒮ₙ* classes.
pub fn part_by_closure(view: &SnView, k: &Subset) -> bool {
    k.iter().all(|x| view.closure.class(x).iter().all(|&y| k.contains(y)))
}

/// Whether `K` is an 𝒮ₙ-part, decided by the neighbourhood form, with the
/// smallest offending expression pair as witness.
pub fn is_sn_part(algebra: &FiniteLieHyperalgebra, view: &SnView, k: &Subset) -> Result<SnPartVerdict> {
    if k.is_empty() {
        return Err(Error::InvalidParameter("K must be non-empty".into()));
    }
    let is_part = part_by_relation(view, k);
    let witness = part_violation(view, k).map(|i| {
        let names = ExprNames { field: algebra.field().carrier(), algebra: Some(algebra.carrier()) };
        let (left_expr, right_expr) = view.family.render(i, &names);
        let p = &view.family.pairs()[i];
        PartWitness { left: p.left.clone(), right: p.right.clone(), left_expr, right_expr }
    });
    if is_part == witness.is_some() {
        return Err(Error::Invariant("part verdict and witness search disagree".into()));
    }
    Ok(SnPartVerdict { is_part, witness })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checked: usize,
    pub parts: usize,
    /// Subsets on which the three forms disagree, with their verdicts.
    pub disagreements: Vec<(Subset, [bool; 3])>,
}

/// Evaluate the definition, neighbourhood and closure forms on each
/// sampled subset.
pub fn lemma_equivalence_check(view: &SnView, sample: &[Subset]) -> LemmaReport {
    let mut report = LemmaReport::default();
    for k in sample.iter().filter(|k| !k.is_empty()) {
        let v = [part_violation(view, k).is_none(), part_by_relation(view, k), part_by_closure(view, k)];
        report.checked += 1;
        if v[0] {
            report.parts += 1;
        }
        if v[0] != v[1] || v[1] != v[2] {
            report.disagreements.push((k.clone(), v));
        }
    }
    report
}

/// All non-empty subsets for carriers of at most 5 elements; otherwise
/// every union of closure classes (up to 2¹⁰ of them), every `P(x)`, and
/// `random` seeded random subsets.
pub fn default_lemma_sample(view: &SnView, seed: u64, random: usize) -> Vec<Subset> {
    let n = view.len();
    if n <= 5 {
        return (1..1usize << n).map(|mask| Subset::from_iter(n, (0..n).filter(|i| mask >> i & 1 == 1))).collect();
    }
    let classes: Vec<Subset> = (0..view.closure.num_classes()).map(|c| view.closure.class_set(c)).collect();
    let mut out = Vec::new();
    let k = classes.len().min(10);
    for mask in 1..1usize << k {
        let mut s = Subset::empty(n);
        for (i, c) in classes.iter().enumerate().take(k) {
            if mask >> i & 1 == 1 {
                s.union_with(c);
            }
        }
        out.push(s);
    }
    out.extend((0..n).map(|x| view.relation.row(x).clone()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let s = Subset::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        if !s.is_empty() {
            out.push(s);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityReport {
    /// 𝒮ₙ is transitive.
    pub transitive: bool,
    /// `𝒮ₙ*(x) = P(x)` for every `x`.
    pub neighborhoods_are_classes: bool,
    /// Every `P(x)` is an 𝒮ₙ-part (definition form).
    pub neighborhoods_are_parts: bool,
    /// First `x` with `P(x) ≠ 𝒮ₙ*(x)`.
    pub first_gap: Option<usize>,
}

impl TransitivityReport {
    pub fn agree(&self) -> bool {
        self.transitive == self.neighborhoods_are_classes && self.transitive == self.neighborhoods_are_parts
    }
}

/// The three transitivity criteria, each evaluated independently.
pub fn is_transitive_sn(view: &SnView) -> TransitivityReport {
    let n = view.len();
    let first_gap = (0..n).find(|&x| view.relation.row(x) != &view.closure.class_set(view.closure.class_of(x)));
    let neighborhoods_are_parts = (0..n).all(|x| part_violation(view, view.relation.row(x)).is_none());
    TransitivityReport {
        transitive: view.relation.is_transitive(),
        neighborhoods_are_classes: first_gap.is_none(),
        neighborhoods_are_parts,
        first_gap,
    }
}
