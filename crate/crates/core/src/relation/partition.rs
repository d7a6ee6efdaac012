use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A binary relation on `0..n` stored as one bit row per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRelation {
    rows: Vec<Subset>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        Self { rows: vec![Subset::empty(n); n] }
    }

    pub fn diagonal(n: usize) -> Self {
        Self { rows: (0..n).map(|x| Subset::singleton(n, x)).collect() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    /// Add every pair in `xs × ys`.
    pub fn insert_product(&mut self, xs: &Subset, ys: &Subset) {
        for x in xs.iter() {
            self.rows[x].union_with(ys);
        }
    }

    /// `{ y : x ρ y }`.
    pub fn row(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(Subset::len).sum()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|x| self.contains(x, x))
    }

    /// First `(x, y)` present without `(y, x)`.
    pub fn asymmetric_pair(&self) -> Option<(usize, usize)> {
        (0..self.len()).find_map(|x| self.rows[x].iter().find(|&y| !self.contains(y, x)).map(|y| (x, y)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_pair().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|x| self.rows[x].iter().all(|y| self.rows[y].is_subset(&self.rows[x])))
    }

    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    /// Connected components of a reflexive symmetric relation.
    pub fn closure(&self) -> Result<Partition> {
        if let Some((x, y)) = self.asymmetric_pair() {
            return Err(Error::NotSymmetric(x, y));
        }
        let mut dsu = Dsu::new(self.len());
        for x in 0..self.len() {
            for y in self.rows[x].iter() {
                dsu.union(x, y);
            }
        }
        Ok(Partition::from_labels(&(0..self.len()).map(|x| dsu.find(x)).collect::<Vec<_>>()))
    }
}

struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            core::cmp::Ordering::Less => self.parent[a] = b,
            core::cmp::Ordering::Greater => self.parent[b] = a,
            core::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// An equivalence relation on `0..n` in canonical form: classes are
/// numbered by their smallest element and listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<u32>,
    classes: Vec<Vec<usize>>,
}

pub type EquivalenceRelation = Partition;

impl Partition {
    /// Canonicalize an arbitrary labelling (equal labels = same class).
    pub fn from_labels<L: Eq + core::hash::Hash>(labels: &[L]) -> Self {
        let mut seen: hashbrown::HashMap<&L, usize> = hashbrown::HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, l) in labels.iter().enumerate() {
            let c = *seen.entry(l).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of.push(c as u32);
            classes[c].push(x);
        }
        Self { class_of, classes }
    }

    /// Labels are dense `0..k` already (e.g. restricted growth strings).
    pub fn from_dense_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut remap = vec![usize::MAX; k];
        let mut next = 0;
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            if remap[l] == usize::MAX {
                remap[l] = next;
                next += 1;
                classes.push(Vec::new());
            }
            class_of.push(remap[l] as u32);
            classes[remap[l]].push(x);
        }
        Self { class_of, classes }
    }

    /// Build from explicit classes; they must be disjoint and cover `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n || labels[x] != usize::MAX {
                    return Err(Error::InvalidParameter(alloc::format!("element {x} is repeated or out of range")));
                }
                labels[x] = c;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidParameter("classes do not cover the carrier".into()));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn discrete(n: usize) -> Self {
        Self { class_of: (0..n as u32).collect(), classes: (0..n).map(|x| vec![x]).collect() }
    }

    pub fn full(n: usize) -> Self {
        Self { class_of: vec![0; n], classes: if n == 0 { Vec::new() } else { vec![(0..n).collect()] } }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The class containing `x`.
    pub fn class(&self, x: usize) -> &[usize] {
        &self.classes[self.class_of(x)]
    }

    pub fn class_set(&self, c: usize) -> Subset {
        Subset::from_iter(self.len(), self.classes[c].iter().copied())
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.classes.len() <= 1
    }

    /// Number of ordered related pairs, `Σ |C|²`.
    pub fn pair_count(&self) -> usize {
        self.classes.iter().map(|c| c.len() * c.len()).sum()
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.len() == other.len()
            && self.classes.iter().all(|c| c.iter().all(|&x| other.related(c[0], x)))
    }

    /// The finest common coarsening's dual: classes are intersections.
    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<(u32, u32)> = (0..self.len()).map(|x| (self.class_of[x], other.class_of[x])).collect();
        Self::from_labels(&labels)
    }

    /// Whether `A ρ̄̄ B`, i.e. every element of `a ∪ b` lies in one class.
    pub fn in_one_class(&self, a: &Subset, b: &Subset) -> bool {
        let Some(first) = a.first().or_else(|| b.first()) else { return true };
        let c = self.class_of[first];
        a.iter().chain(b.iter()).all(|x| self.class_of[x] == c)
    }

    pub fn to_relation(&self) -> BinaryRelation {
        let n = self.len();
        let sets: Vec<Subset> = (0..self.num_classes()).map(|c| self.class_set(c)).collect();
        BinaryRelation { rows: (0..n).map(|x| sets[self.class_of(x)].clone()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relation(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        let mut r = BinaryRelation::diagonal(n);
        for &(x, y) in pairs {
            r.insert(x, y);
            r.insert(y, x);
        }
        r
    }

    #[test]
    fn diagonal_closes_to_singletons() {
        let p = BinaryRelation::diagonal(4).closure().unwrap();
        assert!(p.is_discrete());
        assert_eq!(p.num_classes(), 4);
    }

    #[test]
    fn chain_closes_to_one_class() {
        let r = relation(3, &[(0, 1), (1, 2)]);
        assert!(!r.is_transitive());
        let p = r.closure().unwrap();
        assert_eq!(p.classes(), &[vec![0, 1, 2]]);
        assert!(p.to_relation().is_transitive());
    }

    #[test]
    fn closure_is_idempotent() {
        let r = relation(6, &[(0, 3), (3, 5), (1, 4)]);
        let p = r.closure().unwrap();
        assert_eq!(p.to_relation().closure().unwrap(), p);
        assert_eq!(p.classes(), &[vec![0, 3, 5], vec![1, 4], vec![2]]);
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let mut r = BinaryRelation::diagonal(3);
        r.insert(0, 2);
        assert_eq!(r.closure(), Err(Error::NotSymmetric(0, 2)));
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Partition::from_labels(&[7, 7, 2, 9, 2]);
        let b = Partition::from_dense_labels(&[0, 0, 1, 2, 1]);
        assert_eq!(a, b);
        assert_eq!(a.classes(), &[vec![0, 1], vec![2, 4], vec![3]]);
    }

    #[test]
    fn meet_and_refinement() {
        let a = Partition::from_labels(&[0, 0, 0, 1, 1]);
        let b = Partition::from_labels(&[0, 1, 1, 1, 2]);
        let m = a.meet(&b);
        assert_eq!(m.classes(), &[vec![0], vec![1, 2], vec![3], vec![4]]);
        assert!(m.refines(&a) && m.refines(&b));
        assert!(!a.refines(&b));
        assert!(Partition::discrete(5).refines(&a));
        assert!(a.refines(&Partition::full(5)));
        assert_eq!(Partition::full(5).pair_count(), 25);
    }
}
