//! Bounded enumeration of permutation-related expression pairs.
//!
//! Every relation here has the shape "x ρ y iff x ∈ X and y ∈ Y for the
//! value sets (X, Y) of two expressions built from the same ingredients,
//! the second with some ingredients reordered". The engine builds the
//! family of such value-set pairs bottom-up, deduplicating by value at each
//! layer:
//!
//! 1. coefficient pairs: sums of products of scalars, factors and summands
//!    reordered;
//! 2. leaves `(A·h, A′·h)` from coefficient pairs, flagged movable when
//!    `h` lies in the gate set;
//! 3. hyperbracket trees over leaves, leaves reordered among the movable
//!    positions only;
//! 4. sums of trees, summands reordered.
//!
//! Deduplication keeps the first expression seen for each value pair, so
//! witnesses come from the smallest expressions. A leaf that appears both
//! movable and fixed keeps the movable flag, which only enlarges what it
//! can do.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{BinaryRelation, ExpressionBounds};
use crate::error::{Error, Result};
use crate::structure::{Carrier, FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable};
use crate::subset::Subset;

/// Default ceiling on set-operation evaluations per engine run.
pub const DEFAULT_WORK_LIMIT: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeId(u32);

#[derive(Clone, Debug)]
enum Node {
    Scalar(usize),
    Element(usize),
    Product(NodeId, NodeId),
    Scale(NodeId, NodeId),
    Bracket(NodeId, NodeId),
    Sum(NodeId, NodeId),
}

#[derive(Clone, Debug, Default)]
struct Arena {
    nodes: Vec<Node>,
}

impl Arena {
    fn push(&mut self, n: Node) -> NodeId {
        self.nodes.push(n);
        NodeId(self.nodes.len() as u32 - 1)
    }
}

/// One entry of a [`PairFamily`]: the value sets of two related expressions.
#[derive(Clone, Debug)]
pub struct ValuePair {
    pub left: Subset,
    pub right: Subset,
    left_expr: NodeId,
    right_expr: NodeId,
}

#[derive(Clone, Debug)]
struct Item {
    x: Subset,
    y: Subset,
    movable: bool,
    lx: NodeId,
    ly: NodeId,
}

/// Deduplicating collector preserving first-appearance order.
#[derive(Default)]
struct Collector {
    items: Vec<Item>,
    index: HashMap<(Subset, Subset), usize>,
}

impl Collector {
    fn contains(&self, x: &Subset, y: &Subset) -> Option<usize> {
        // hashbrown lookups need an owned tuple key; clones of inline
        // bitsets are cheap.
        self.index.get(&(x.clone(), y.clone())).copied()
    }

    fn push(&mut self, item: Item) {
        let key = (item.x.clone(), item.y.clone());
        self.index.insert(key, self.items.len());
        self.items.push(item);
    }

    /// Insert unless present; a movable duplicate upgrades a fixed entry.
    fn offer(&mut self, item: Item) {
        match self.contains(&item.x, &item.y) {
            None => self.push(item),
            Some(i) if item.movable && !self.items[i].movable => self.items[i] = item,
            Some(_) => {}
        }
    }
}

/// The saturated family of value-set pairs behind one relation, with the
/// expressions that produced each pair.
#[derive(Clone, Debug)]
pub struct PairFamily {
    width: usize,
    pairs: Vec<ValuePair>,
    arena: Arena,
    field_one: usize,
}

/// Identifier tables used to print expressions.
pub struct ExprNames<'a> {
    pub field: &'a Carrier,
    pub algebra: Option<&'a Carrier>,
}

impl PairFamily {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Size of the carrier the value sets live in.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pairs(&self) -> &[ValuePair] {
        &self.pairs
    }

    /// `⋃ X × Y` over all pairs.
    pub fn relation(&self) -> BinaryRelation {
        let mut r = BinaryRelation::empty(self.width);
        for p in &self.pairs {
            r.insert_product(&p.left, &p.right);
        }
        r
    }

    /// Whether `(Y, X)` is present for every `(X, Y)`.
    pub fn is_swap_closed(&self) -> bool {
        let keys: hashbrown::HashSet<(&Subset, &Subset)> = self.pairs.iter().map(|p| (&p.left, &p.right)).collect();
        self.pairs.iter().all(|p| keys.contains(&(&p.right, &p.left)))
    }

    /// Printable form of the two expressions behind pair `i`.
    pub fn render(&self, i: usize, names: &ExprNames<'_>) -> (String, String) {
        let p = &self.pairs[i];
        (self.render_node(p.left_expr, names), self.render_node(p.right_expr, names))
    }

    fn render_node(&self, id: NodeId, names: &ExprNames<'_>) -> String {
        let elem = |x: usize| match names.algebra {
            Some(c) => String::from(c.name(x)),
            None => String::from(names.field.name(x)),
        };
        match &self.arena.nodes[id.0 as usize] {
            Node::Scalar(l) => String::from(names.field.name(*l)),
            Node::Element(x) => elem(*x),
            Node::Product(a, b) => format!("{}·{}", self.render_node(*a, names), self.render_node(*b, names)),
            Node::Sum(a, b) => format!("{}+{}", self.render_node(*a, names), self.render_node(*b, names)),
            Node::Bracket(a, b) => format!("[{},{}]", self.render_node(*a, names), self.render_node(*b, names)),
            Node::Scale(c, h) => {
                let hs = self.render_node(*h, names);
                if matches!(self.arena.nodes[c.0 as usize], Node::Scalar(l) if l == self.field_one) {
                    return hs;
                }
                let cs = self.render_node(*c, names);
                let wrap = |s: String| if s.contains('+') || s.contains('·') { format!("({s})") } else { s };
                format!("{}⊙{}", wrap(cs), wrap(hs))
            }
        }
    }
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn reserve(&mut self, amount: u64) -> Result<()> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.limit {
            Err(Error::WorkLimit { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug)]
enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    /// All binary trees with `k` leaves, or only the left comb.
    fn all(k: usize, comb_only: bool) -> Vec<Shape> {
        if k == 1 {
            return vec![Shape::Leaf];
        }
        if comb_only {
            let inner = Shape::all(k - 1, true).pop().unwrap();
            return vec![Shape::Node(Box::new(inner), Box::new(Shape::Leaf))];
        }
        let mut out = Vec::new();
        for i in 1..k {
            for l in Shape::all(i, false) {
                for r in Shape::all(k - i, false) {
                    out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }

    fn eval(&self, op: &HyperOpTable, seq: &[&Subset], pos: &mut usize) -> Subset {
        match self {
            Shape::Leaf => {
                *pos += 1;
                seq[*pos - 1].clone()
            }
            Shape::Node(l, r) => {
                let a = l.eval(op, seq, pos);
                let b = r.eval(op, seq, pos);
                op.apply(&a, &b)
            }
        }
    }

    fn build(&self, arena: &mut Arena, seq: &[NodeId], pos: &mut usize, kind: OpKind) -> NodeId {
        match self {
            Shape::Leaf => {
                *pos += 1;
                seq[*pos - 1]
            }
            Shape::Node(l, r) => {
                let a = l.build(arena, seq, pos, kind);
                let b = r.build(arena, seq, pos, kind);
                arena.push(match kind {
                    OpKind::Product => Node::Product(a, b),
                    OpKind::Bracket => Node::Bracket(a, b),
                    OpKind::Sum => Node::Sum(a, b),
                })
            }
        }
    }
}

#[derive(Clone, Copy)]
enum OpKind {
    Product,
    Bracket,
    Sum,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Permutations of `0..k` allowed for each movable mask: those fixing
/// every non-movable position. Index by mask bits.
fn allowed_perms(k: usize, permute: bool) -> Vec<Vec<Vec<usize>>> {
    let all = permutations(k);
    let identity: Vec<usize> = (0..k).collect();
    (0..1usize << k)
        .map(|mask| {
            if !permute {
                return vec![identity.clone()];
            }
            all.iter().filter(|p| (0..k).all(|j| mask >> j & 1 == 1 || p[j] == j)).cloned().collect()
        })
        .collect()
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Trees with up to `max_leaves` leaves over `pool`; the right value reads
/// the leaves in permuted order.
fn tree_pairs(
    op: &HyperOpTable,
    pool: &[Item],
    max_leaves: usize,
    comb_only: bool,
    permute: bool,
    kind: OpKind,
    arena: &mut Arena,
    budget: &mut Budget,
) -> Result<Vec<Item>> {
    let mut out = Collector::default();
    for k in 1..=max_leaves {
        let shapes = Shape::all(k, comb_only);
        let perms = allowed_perms(k, permute);
        let tuples = (pool.len() as u64).saturating_pow(k as u32);
        let per = if permute { factorial(k) } else { 1 };
        budget.reserve(tuples.saturating_mul(shapes.len() as u64).saturating_mul(per + 1).saturating_mul(k as u64))?;
        let mut idx = vec![0usize; k];
        'tuples: loop {
            let mask = (0..k).fold(0usize, |m, j| m | (pool[idx[j]].movable as usize) << j);
            let xs: Vec<&Subset> = idx.iter().map(|&i| &pool[i].x).collect();
            for shape in &shapes {
                let x = shape.eval(op, &xs, &mut 0);
                for perm in &perms[mask] {
                    let ys: Vec<&Subset> = perm.iter().map(|&j| &pool[idx[j]].y).collect();
                    let y = shape.eval(op, &ys, &mut 0);
                    if out.contains(&x, &y).is_none() {
                        let lseq: Vec<NodeId> = idx.iter().map(|&i| pool[i].lx).collect();
                        let rseq: Vec<NodeId> = perm.iter().map(|&j| pool[idx[j]].ly).collect();
                        let lx = shape.build(arena, &lseq, &mut 0, kind);
                        let ly = shape.build(arena, &rseq, &mut 0, kind);
                        out.push(Item { x: x.clone(), y, movable: true, lx, ly });
                    }
                }
            }
            for j in (0..k).rev() {
                idx[j] += 1;
                if idx[j] < pool.len() {
                    continue 'tuples;
                }
                idx[j] = 0;
            }
            break;
        }
    }
    Ok(out.items)
}

/// Sums of up to `max_terms` items; the right value adds the right parts in
/// permuted order. With commutative addition the order is immaterial and
/// sums are built incrementally.
fn sum_pairs(
    add: &HyperOpTable,
    items: &[Item],
    max_terms: usize,
    commutative: bool,
    permute: bool,
    arena: &mut Arena,
    budget: &mut Budget,
) -> Result<Vec<Item>> {
    if !commutative && permute {
        return tree_pairs(add, items, max_terms, true, true, OpKind::Sum, arena, budget);
    }
    let mut out = Collector::default();
    for it in items {
        out.offer(it.clone());
    }
    let mut frontier: Vec<usize> = (0..out.items.len()).collect();
    for _ in 2..=max_terms {
        budget.reserve((frontier.len() as u64).saturating_mul(items.len() as u64).saturating_mul(2))?;
        let mut next = Vec::new();
        for &f in &frontier {
            for it in items {
                let base = &out.items[f];
                let x = add.apply(&base.x, &it.x);
                let y = add.apply(&base.y, &it.y);
                if out.contains(&x, &y).is_none() {
                    let (bx, by) = (base.lx, base.ly);
                    let lx = arena.push(Node::Sum(bx, it.lx));
                    let ly = arena.push(Node::Sum(by, it.ly));
                    next.push(out.items.len());
                    out.push(Item { x, y, movable: true, lx, ly });
                }
            }
        }
        // Pairs already present came from fewer summands; extending them
        // again gives nothing new, so only fresh pairs carry forward.
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(out.items)
}

/// Which relation the algebra engine builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// No reordering anywhere.
    Identity,
    /// Reordering, with bracket leaves movable only when `h ∈ L^[n−1]`.
    Gated(usize),
}

/// Engine configuration; the free functions use the defaults.
#[derive(Clone, Copy, Debug)]
pub struct Engine {
    pub work_limit: u64,
}

impl Default for Engine {
    fn default() -> Self {
        Self { work_limit: DEFAULT_WORK_LIMIT }
    }
}

/// `L^[0] = L`, `L^[i] = [L^[i−1], L^[i−1]]` setwise, for `i ≤ depth`.
pub fn hyper_derived_sets(algebra: &FiniteLieHyperalgebra, depth: usize) -> Vec<Subset> {
    let mut sets = vec![algebra.full()];
    for i in 1..=depth {
        let prev = &sets[i - 1];
        let next = algebra.bracket().apply(prev, prev);
        debug_assert!(next.is_subset(prev));
        sets.push(next);
    }
    sets
}

impl Engine {
    pub fn with_work_limit(work_limit: u64) -> Self {
        Self { work_limit }
    }

    fn budget(&self) -> Budget {
        Budget { used: 0, limit: self.work_limit }
    }

    fn coefficient_items(
        &self,
        field: &FiniteHyperfield,
        terms: usize,
        factors: usize,
        permute: bool,
        arena: &mut Arena,
        budget: &mut Budget,
    ) -> Result<Vec<Item>> {
        let atoms: Vec<Item> = (0..field.len())
            .map(|l| {
                let id = arena.push(Node::Scalar(l));
                let s = Subset::singleton(field.len(), l);
                Item { x: s.clone(), y: s, movable: true, lx: id, ly: id }
            })
            .collect();
        let products = tree_pairs(field.mul(), &atoms, factors, true, permute, OpKind::Product, arena, budget)?;
        sum_pairs(field.add(), &products, terms, field.add().is_commutative(), permute, arena, budget)
    }

    /// Pairs `(Σₖ Πᵣ λ, Σₖ Πᵣ λ permuted)` with at most `p` terms of at
    /// most `q` factors, factor and term orders permuted independently.
    pub fn coefficient_pair_family(&self, field: &FiniteHyperfield, bounds: &ExpressionBounds) -> Result<PairFamily> {
        bounds.validate()?;
        let mut arena = Arena::default();
        let mut budget = self.budget();
        let items = self.coefficient_items(field, bounds.p as usize, bounds.q as usize, true, &mut arena, &mut budget)?;
        Ok(finish(field.len(), items, arena, field.one()))
    }

    /// The α family on a hyperfield: sums of at most `t` products of at most
    /// `m` factors, factors and summands permuted.
    pub fn alpha_family(&self, field: &FiniteHyperfield, bounds: &ExpressionBounds) -> Result<PairFamily> {
        bounds.validate()?;
        let mut arena = Arena::default();
        let mut budget = self.budget();
        let items = self.coefficient_items(field, bounds.t as usize, bounds.m as usize, true, &mut arena, &mut budget)?;
        Ok(finish(field.len(), items, arena, field.one()))
    }

    /// The pair family of 𝓛 (`Mode::Identity`) or of 𝒮ₙ (`Mode::Gated(n)`).
    pub fn algebra_family(
        &self,
        algebra: &FiniteLieHyperalgebra,
        mode: Mode,
        bounds: &ExpressionBounds,
    ) -> Result<PairFamily> {
        bounds.validate()?;
        let (permute, gate) = match mode {
            Mode::Identity => (false, algebra.full()),
            Mode::Gated(0) => return Err(Error::InvalidParameter("n must be at least 1".into())),
            Mode::Gated(n) => (true, hyper_derived_sets(algebra, n - 1).pop().unwrap()),
        };
        let mut arena = Arena::default();
        let mut budget = self.budget();
        let field = algebra.field();
        let coefs = self.coefficient_items(field, bounds.p as usize, bounds.q as usize, permute, &mut arena, &mut budget)?;
        let n = algebra.len();
        let mut leaves = Collector::default();
        budget.reserve((coefs.len() * n) as u64)?;
        let elements: Vec<NodeId> = (0..n).map(|h| arena.push(Node::Element(h))).collect();
        for c in &coefs {
            for h in 0..n {
                let hs = Subset::singleton(n, h);
                let x = algebra.scale(&c.x, &hs);
                let y = algebra.scale(&c.y, &hs);
                let movable = gate.contains(h);
                match leaves.contains(&x, &y) {
                    Some(i) if !movable || leaves.items[i].movable => continue,
                    _ => {}
                }
                let lx = arena.push(Node::Scale(c.lx, elements[h]));
                let ly = arena.push(Node::Scale(c.ly, elements[h]));
                leaves.offer(Item { x, y, movable, lx, ly });
            }
        }
        let trees = tree_pairs(
            algebra.bracket(),
            &leaves.items,
            bounds.m as usize,
            false,
            permute,
            OpKind::Bracket,
            &mut arena,
            &mut budget,
        )?;
        let sums = sum_pairs(
            algebra.add(),
            &trees,
            bounds.t as usize,
            algebra.is_additively_commutative(),
            permute,
            &mut arena,
            &mut budget,
        )?;
        let family = finish(n, sums, arena, field.one());
        check_family(&family)?;
        Ok(family)
    }

    pub fn relation_l(&self, algebra: &FiniteLieHyperalgebra, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
        Ok(self.algebra_family(algebra, Mode::Identity, bounds)?.relation())
    }

    pub fn relation_a(&self, algebra: &FiniteLieHyperalgebra, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
        self.relation_sn(algebra, 1, bounds)
    }

    pub fn relation_sn(
        &self,
        algebra: &FiniteLieHyperalgebra,
        n: usize,
        bounds: &ExpressionBounds,
    ) -> Result<BinaryRelation> {
        Ok(self.algebra_family(algebra, Mode::Gated(n), bounds)?.relation())
    }

    pub fn relation_alpha(&self, field: &FiniteHyperfield, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
        let family = self.alpha_family(field, bounds)?;
        check_family(&family)?;
        Ok(family.relation())
    }
}

fn finish(width: usize, items: Vec<Item>, arena: Arena, field_one: usize) -> PairFamily {
    let pairs = items
        .into_iter()
        .map(|it| ValuePair { left: it.x, right: it.y, left_expr: it.lx, right_expr: it.ly })
        .collect();
    PairFamily { width, pairs, arena, field_one }
}

/// Computed relations are reflexive and symmetric; anything else is an
/// engine bug.
fn check_family(family: &PairFamily) -> Result<()> {
    let r = family.relation();
    if !r.is_reflexive() {
        return Err(Error::Invariant("computed relation is not reflexive".into()));
    }
    if let Some((x, y)) = r.asymmetric_pair() {
        return Err(Error::Invariant(format!("computed relation has ({x}, {y}) but not its mirror")));
    }
    Ok(())
}

pub fn coefficient_pair_family(field: &FiniteHyperfield, bounds: &ExpressionBounds) -> Result<PairFamily> {
    Engine::default().coefficient_pair_family(field, bounds)
}

pub fn relation_l(algebra: &FiniteLieHyperalgebra, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
    Engine::default().relation_l(algebra, bounds)
}

pub fn relation_a(algebra: &FiniteLieHyperalgebra, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
    Engine::default().relation_a(algebra, bounds)
}

pub fn relation_sn(algebra: &FiniteLieHyperalgebra, n: usize, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
    Engine::default().relation_sn(algebra, n, bounds)
}

pub fn relation_alpha(field: &FiniteHyperfield, bounds: &ExpressionBounds) -> Result<BinaryRelation> {
    Engine::default().relation_alpha(field, bounds)
}
