//! Finite semigroups given by explicit multiplication tables.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_SUBSET_ORDER};

/// Largest order a [`Semigroup`] may have.
///
/// Every subset-valued query works on 64-bit masks, so this is also the
/// default cap for [`Semigroup::direct_product`].
pub const MAX_ORDER: usize = MAX_SUBSET_ORDER;

/// A finite semigroup on the elements `0..order`.
///
/// `mul(i, j)` is the product of `i` by `j`, written left to right.
/// Cloning is cheap: the table is shared.
#[derive(Clone)]
pub struct Semigroup {
    order: usize,
    table: Arc<[usize]>,
    labels: Option<Arc<[String]>>,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && (Arc::ptr_eq(&self.table, &other.table) || self.table == other.table)
    }
}

impl Eq for Semigroup {}

impl std::hash::Hash for Semigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.table.hash(state);
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

/// Which distinguished element set to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementSet {
    Idempotents,
    Regular,
    GroupElements,
}

/// Green's equivalence relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    J,
    H,
}

/// Families of subsemigroups used as contexts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsemigroupKind {
    Subgroups,
    CyclicSubgroups,
    LocalMonoids,
    IdempotentGenerated,
    RegularGenerated,
}

impl Semigroup {
    /// Validates an `order`×`order` table and checks associativity.
    ///
    /// On failure the first non-associative triple in lexicographic order
    /// is reported.
    pub fn validate(order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != order {
            return Err(Error::InvalidTable(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat)
    }

    /// Same as [`Semigroup::validate`] with the order read off the rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::validate(rows.len(), &rows)
    }

    /// Builds a semigroup from a row-major table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::SizeCap {
                what: "semigroup order",
                got: order,
                cap: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::IndexOutOfRange { index: bad, order });
        }
        let t = |a: usize, b: usize| table[a * order + b];
        for i in 0..order {
            for j in 0..order {
                let ij = t(i, j);
                for k in 0..order {
                    if t(ij, k) != t(i, t(j, k)) {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(order, table))
    }

    /// Wraps a table already known to be associative.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Semigroup {
            order,
            table: table.into(),
            labels: None,
        }
    }

    /// Attaches display labels, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels.into());
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order.max(1)).take(self.order).map(<[usize]>::to_vec).collect()
    }

    /// All elements as a subset.
    pub fn elements(&self) -> Subset {
        Subset::full(self.order)
    }

    // ----- small named semigroups -------------------------------------

    pub fn empty() -> Self {
        Self::from_flat_unchecked(0, Vec::new())
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked(1, vec![0])
    }

    /// The cyclic group of order `n`, element `i` standing for `i mod n`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_flat_unchecked(n, table)
    }

    /// `xy = x`.
    pub fn left_zero(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Self::from_flat_unchecked(n, (0..n * n).map(|k| k / n).collect())
    }

    /// `xy = y`.
    pub fn right_zero(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Self::from_flat_unchecked(n, (0..n * n).map(|k| k % n).collect())
    }

    /// The null semigroup of order `n`: every product is `0`.
    pub fn null(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Self::from_flat_unchecked(n, vec![0; n * n])
    }

    /// The chain semilattice `0 < 1 < ... < n-1` under minimum.
    pub fn chain_semilattice(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Self::from_flat_unchecked(n, (0..n * n).map(|k| (k / n).min(k % n)).collect())
    }

    // ----- constructions ----------------------------------------------

    /// Direct product with the default cap of [`MAX_ORDER`].
    pub fn direct_product(&self, other: &Semigroup) -> Result<Semigroup> {
        self.direct_product_capped(other, MAX_ORDER)
    }

    /// Componentwise product; the pair `(i, j)` gets index `i * |other| + j`.
    pub fn direct_product_capped(&self, other: &Semigroup, cap: usize) -> Result<Semigroup> {
        let n = self.order * other.order;
        let cap = cap.min(MAX_ORDER);
        if n > cap {
            return Err(Error::SizeCap {
                what: "direct product order",
                got: n,
                cap,
            });
        }
        let m = other.order;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.mul(a / m.max(1), b / m.max(1)) * m + other.mul(a % m, b % m));
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    /// The opposite semigroup: `x *' y = y * x`.
    pub fn reverse(&self) -> Semigroup {
        let n = self.order;
        let table = (0..n * n).map(|k| self.mul(k % n, k / n)).collect();
        Semigroup {
            order: n,
            table,
            labels: self.labels.clone(),
        }
    }

    /// Adjoins a new identity element with index `order`.
    pub fn adjoin_identity(&self) -> Semigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                table.push(if a == n {
                    b
                } else if b == n {
                    a
                } else {
                    self.mul(a, b)
                });
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.to_vec();
            l.push("I".to_string());
            l.into()
        });
        Semigroup {
            order: m,
            table: table.into(),
            labels,
        }
    }

    /// Relabels elements: old element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Semigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        Self::from_flat_unchecked(n, table)
    }

    /// Lexicographically least row-major table over all relabelings,
    /// optionally also over the reversed table.
    pub fn canonical_table(&self, with_reversal: bool) -> Vec<usize> {
        let mut best = canonical_of(self.order, &self.table);
        if with_reversal {
            let rev = canonical_of(self.order, &self.reverse().table);
            if rev < best {
                best = rev;
            }
        }
        best
    }

    // ----- element-level queries --------------------------------------

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        debug_assert!(k >= 1);
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Setwise product `X·Y`; empty when either operand is.
    pub fn product_set(&self, x: Subset, y: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for a in x.iter() {
            for b in y.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Smallest product-closed subset containing `seed`.
    pub fn generate(&self, seed: Subset) -> Subset {
        let mut closed = seed;
        let mut frontier = seed;
        while !frontier.is_empty() {
            let next = self
                .product_set(frontier, closed)
                .union(self.product_set(closed, frontier));
            frontier = next.difference(closed);
            closed = closed.union(frontier);
        }
        closed
    }

    pub fn is_product_closed(&self, x: Subset) -> bool {
        self.product_set(x, x).is_subset(x)
    }

    /// A generating set chosen greedily: repeatedly add the element that
    /// enlarges the generated subsemigroup most (smallest index on ties).
    pub fn greedy_generators(&self) -> Subset {
        let all = self.elements();
        let mut gens = Subset::EMPTY;
        let mut reached = Subset::EMPTY;
        while reached != all {
            let (best, closure) = all
                .difference(reached)
                .iter()
                .map(|x| (x, self.generate(gens.with(x))))
                .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
                .expect("some element is still unreached");
            gens.insert(best);
            reached = closure;
        }
        gens
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn idempotents(&self) -> Subset {
        (0..self.order).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn regular_elements(&self) -> Subset {
        (0..self.order)
            .filter(|&x| (0..self.order).any(|y| self.mul(self.mul(x, y), x) == x))
            .collect()
    }

    /// Elements lying in some subgroup: `x H x²`.
    pub fn group_elements(&self) -> Subset {
        let right: Vec<Subset> = (0..self.order).map(|x| self.right_ideal(x)).collect();
        let left: Vec<Subset> = (0..self.order).map(|x| self.left_ideal(x)).collect();
        (0..self.order)
            .filter(|&x| {
                let x2 = self.mul(x, x);
                right[x] == right[x2] && left[x] == left[x2]
            })
            .collect()
    }

    pub fn element_set(&self, kind: ElementSet) -> Subset {
        match kind {
            ElementSet::Idempotents => self.idempotents(),
            ElementSet::Regular => self.regular_elements(),
            ElementSet::GroupElements => self.group_elements(),
        }
    }

    /// `x·S^I`.
    pub fn right_ideal(&self, x: usize) -> Subset {
        (0..self.order).map(|s| self.mul(x, s)).collect::<Subset>().with(x)
    }

    /// `S^I·x`.
    pub fn left_ideal(&self, x: usize) -> Subset {
        (0..self.order).map(|s| self.mul(s, x)).collect::<Subset>().with(x)
    }

    /// `S^I·x·S^I`.
    pub fn two_sided_ideal(&self, x: usize) -> Subset {
        let l = self.left_ideal(x);
        l.union(self.product_set(l, self.elements()))
    }

    /// All products of exactly `k` elements, `k >= 1`.
    pub fn k_products(&self, k: usize) -> Subset {
        assert!(k >= 1);
        let all = self.elements();
        (1..k).fold(all, |acc, _| self.product_set(acc, all))
    }

    /// Classes of a Green relation, sorted by least element.
    pub fn green_partition(&self, rel: GreenRelation) -> Vec<Subset> {
        let key = |x: usize| -> (Subset, Subset) {
            match rel {
                GreenRelation::R => (self.right_ideal(x), Subset::EMPTY),
                GreenRelation::L => (self.left_ideal(x), Subset::EMPTY),
                GreenRelation::J => (self.two_sided_ideal(x), Subset::EMPTY),
                GreenRelation::H => (self.right_ideal(x), self.left_ideal(x)),
            }
        };
        let keys: Vec<_> = (0..self.order).map(key).collect();
        let mut classes: Vec<Subset> = Vec::new();
        let mut seen = Subset::EMPTY;
        for x in 0..self.order {
            if seen.contains(x) {
                continue;
            }
            let class: Subset = (x..self.order).filter(|&y| keys[y] == keys[x]).collect();
            seen = seen.union(class);
            classes.push(class);
        }
        classes
    }

    /// The H-class of `x`.
    pub fn h_class(&self, x: usize) -> Subset {
        let (r, l) = (self.right_ideal(x), self.left_ideal(x));
        (0..self.order)
            .filter(|&y| self.right_ideal(y) == r && self.left_ideal(y) == l)
            .collect()
    }

    /// `e·S·e`.
    pub fn local_monoid(&self, e: usize) -> Subset {
        (0..self.order).map(|s| self.mul(self.mul(e, s), e)).collect()
    }

    /// All subgroups, found inside the maximal subgroups `H_e` as joins of
    /// cyclic subgroups. Sorted by mask.
    pub fn subgroups(&self) -> Vec<Subset> {
        let mut out = BTreeSet::new();
        for e in self.idempotents().iter() {
            let h = self.h_class(e);
            let mut found = BTreeSet::from([Subset::singleton(e)]);
            let mut queue = vec![Subset::singleton(e)];
            while let Some(g) = queue.pop() {
                for x in h.difference(g).iter() {
                    let bigger = self.generate(g.with(x));
                    if found.insert(bigger) {
                        queue.push(bigger);
                    }
                }
            }
            out.extend(found);
        }
        out.into_iter().collect()
    }

    pub fn special_subsemigroups(&self, kind: SubsemigroupKind) -> Vec<Subset> {
        let mut out: Vec<Subset> = match kind {
            SubsemigroupKind::Subgroups => return self.subgroups(),
            SubsemigroupKind::CyclicSubgroups => self
                .group_elements()
                .iter()
                .map(|g| self.generate(Subset::singleton(g)))
                .collect(),
            SubsemigroupKind::LocalMonoids => {
                self.idempotents().iter().map(|e| self.local_monoid(e)).collect()
            }
            SubsemigroupKind::IdempotentGenerated => {
                let e = self.idempotents();
                if e.is_empty() {
                    vec![]
                } else {
                    vec![self.generate(e)]
                }
            }
            SubsemigroupKind::RegularGenerated => {
                let r = self.regular_elements();
                if r.is_empty() {
                    vec![]
                } else {
                    vec![self.generate(r)]
                }
            }
        };
        out.sort();
        out.dedup();
        out
    }

    /// Materializes a product-closed subset as a standalone semigroup.
    ///
    /// Returns the semigroup and the map from its indices back to `self`
    /// (ascending).
    pub fn induced(&self, sub: Subset) -> Result<(Semigroup, Vec<usize>)> {
        if !self.is_product_closed(sub) {
            return Err(Error::InvalidTable(format!(
                "subset {:?} is not product closed",
                sub
            )));
        }
        let embed = sub.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (k, &x) in embed.iter().enumerate() {
            index[x] = k;
        }
        let m = embed.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                table.push(index[self.mul(a, b)]);
            }
        }
        let mut s = Self::from_flat_unchecked(m, table);
        if let Some(l) = &self.labels {
            s.labels = Some(embed.iter().map(|&x| l[x].clone()).collect::<Vec<_>>().into());
        }
        Ok((s, embed))
    }
}

fn relabel(order: usize, table: &[usize], perm: &[usize], out: &mut [usize]) {
    for i in 0..order {
        for j in 0..order {
            out[perm[i] * order + perm[j]] = perm[table[i * order + j]];
        }
    }
}

fn canonical_of(order: usize, table: &[usize]) -> Vec<usize> {
    let mut best = table.to_vec();
    let mut scratch = vec![0; table.len()];
    let mut perm: Vec<usize> = (0..order).collect();
    while next_permutation(&mut perm) {
        relabel(order, table, &perm, &mut scratch);
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    }
    best
}

/// Advances to the next permutation in lexicographic order; false at the end.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Semigroup {
        Semigroup::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn lz2() -> Semigroup {
        Semigroup::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap()
    }

    fn n2() -> Semigroup {
        Semigroup::from_rows(vec![vec![0, 0], vec![0, 0]]).unwrap()
    }

    fn sl2() -> Semigroup {
        Semigroup::from_rows(vec![vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(z2(), Semigroup::cyclic_group(2));
        assert_eq!(Semigroup::from_rows(vec![vec![0]]).unwrap(), Semigroup::trivial());
        assert_eq!(
            Semigroup::from_rows(vec![vec![0, 1], vec![0, 0]]),
            Err(Error::NonAssociative(1, 0, 1))
        );
        assert!(matches!(
            Semigroup::from_rows(vec![vec![0, 2], vec![0, 0]]),
            Err(Error::IndexOutOfRange { index: 2, order: 2 })
        ));
        assert!(matches!(
            Semigroup::validate(2, &[vec![0, 1]]),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn products() {
        let p = Semigroup::trivial().direct_product(&z2()).unwrap();
        assert_eq!(p, z2());
        let klein = z2().direct_product(&z2()).unwrap();
        assert_eq!(klein.order(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(klein.mul(a, b), a ^ b);
            }
        }
        assert!(Semigroup::empty().direct_product(&z2()).unwrap().is_empty());
        assert!(matches!(
            Semigroup::cyclic_group(9).direct_product(&Semigroup::cyclic_group(8)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn reversal() {
        assert_eq!(z2().reverse(), z2());
        assert_eq!(lz2().reverse(), Semigroup::right_zero(2));
        assert_eq!(lz2().reverse().reverse(), lz2());
    }

    #[test]
    fn identity_adjunction() {
        let m = Semigroup::trivial().adjoin_identity();
        assert_eq!(m.rows(), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(Semigroup::empty().adjoin_identity(), Semigroup::trivial());
        let m = lz2().adjoin_identity();
        assert_eq!(m.order(), 3);
        assert!(Semigroup::from_flat(3, m.table().to_vec()).is_ok());
        assert_eq!(m.identity(), Some(2));
    }

    #[test]
    fn generation() {
        assert_eq!(z2().generate(set(&[1])), set(&[0, 1]));
        assert_eq!(z2().generate(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(lz2().generate(set(&[0, 1])), set(&[0, 1]));
        assert_eq!(Semigroup::cyclic_group(6).generate(set(&[2])), set(&[0, 2, 4]));
    }

    #[test]
    fn element_sets() {
        assert_eq!(z2().element_set(ElementSet::Idempotents), set(&[0]));
        assert_eq!(lz2().element_set(ElementSet::Idempotents), set(&[0, 1]));
        assert_eq!(n2().element_set(ElementSet::Regular), set(&[0]));
        assert_eq!(n2().element_set(ElementSet::GroupElements), set(&[0]));
        assert_eq!(z2().element_set(ElementSet::GroupElements), set(&[0, 1]));
    }

    #[test]
    fn green_classes() {
        assert_eq!(z2().green_partition(GreenRelation::J), vec![set(&[0, 1])]);
        assert_eq!(lz2().green_partition(GreenRelation::R), vec![set(&[0]), set(&[1])]);
        assert_eq!(lz2().green_partition(GreenRelation::L), vec![set(&[0, 1])]);
        assert_eq!(lz2().green_partition(GreenRelation::H), vec![set(&[0]), set(&[1])]);
    }

    #[test]
    fn special_families() {
        assert_eq!(
            z2().special_subsemigroups(SubsemigroupKind::Subgroups),
            vec![set(&[0]), set(&[0, 1])]
        );
        assert_eq!(n2().special_subsemigroups(SubsemigroupKind::Subgroups), vec![set(&[0])]);
        assert_eq!(
            sl2().special_subsemigroups(SubsemigroupKind::LocalMonoids),
            vec![set(&[0]), set(&[0, 1])]
        );
        assert_eq!(
            Semigroup::cyclic_group(6).special_subsemigroups(SubsemigroupKind::Subgroups).len(),
            4
        );
        assert_eq!(
            lz2().special_subsemigroups(SubsemigroupKind::IdempotentGenerated),
            vec![set(&[0, 1])]
        );
        assert_eq!(
            n2().special_subsemigroups(SubsemigroupKind::RegularGenerated),
            vec![set(&[0])]
        );
    }

    #[test]
    fn cyclic_subgroups_of_klein() {
        let klein = z2().direct_product(&z2()).unwrap();
        let cyc = klein.special_subsemigroups(SubsemigroupKind::CyclicSubgroups);
        assert_eq!(cyc, vec![set(&[0]), set(&[0, 1]), set(&[0, 2]), set(&[0, 3])]);
        assert_eq!(klein.subgroups().len(), 5);
    }

    #[test]
    fn induced_subsemigroup() {
        let z6 = Semigroup::cyclic_group(6);
        let (sub, embed) = z6.induced(set(&[0, 2, 4])).unwrap();
        assert_eq!(embed, vec![0, 2, 4]);
        assert_eq!(sub, Semigroup::cyclic_group(3));
        assert!(z6.induced(set(&[1])).is_err());
    }

    #[test]
    fn greedy_generators_generate() {
        let klein = z2().direct_product(&z2()).unwrap();
        let g = klein.greedy_generators();
        assert_eq!(klein.generate(g), klein.elements());
        assert_eq!(g.len(), 2);
        assert_eq!(Semigroup::cyclic_group(5).greedy_generators().len(), 1);
    }

    #[test]
    fn canonical_form_identifies_isomorphic_copies() {
        let s = lz2().adjoin_identity();
        let p = s.permuted(&[2, 0, 1]);
        assert_ne!(p.table(), s.table());
        assert_eq!(p.canonical_table(false), s.canonical_table(false));
        assert_ne!(lz2().canonical_table(false), Semigroup::right_zero(2).canonical_table(false));
        assert_eq!(lz2().canonical_table(true), Semigroup::right_zero(2).canonical_table(true));
    }

    #[test]
    fn next_permutation_counts() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
