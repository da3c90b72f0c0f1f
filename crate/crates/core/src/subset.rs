use std::fmt;

/// Largest semigroup order whose subsets fit in a [`Subset`].
pub const MAX_SUBSET_ORDER: usize = 64;

/// A set of element indices of some semigroup, stored as a 64-bit mask.
///
/// Bit `i` set means element `i` is present. The empty subset is
/// representable; operations that need nonempty subsets check for it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_SUBSET_ORDER);
        Subset(1 << i)
    }

    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_SUBSET_ORDER);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_SUBSET_ORDER && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of this subset under an index map.
    pub fn map(self, f: &[usize]) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, i| acc.with(f[i]))
    }

    /// Preimage of this subset under an index map.
    pub fn preimage(self, f: &[usize]) -> Subset {
        f.iter()
            .enumerate()
            .filter(|&(_, &y)| self.contains(y))
            .fold(Subset::EMPTY, |acc, (i, _)| acc.with(i))
    }

    /// Iterates all nonempty subsets of `self`, in increasing mask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = Subset> {
        let m = self.0;
        let mut cur = 0u64;
        let mut done = m == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            cur = cur.wrapping_sub(m) & m;
            if cur == m {
                done = true;
            }
            Some(Subset(cur))
        })
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, |acc, i| acc.with(i))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonempty_subsets_of_pair() {
        let s: Subset = [1, 3].into_iter().collect();
        let subs: Vec<_> = s.nonempty_subsets().map(Subset::to_vec).collect();
        assert_eq!(subs, vec![vec![1], vec![3], vec![1, 3]]);
        assert_eq!(Subset::EMPTY.nonempty_subsets().count(), 0);
    }

    #[test]
    fn map_and_preimage() {
        let f = [0, 0, 1];
        let s: Subset = [1, 2].into_iter().collect();
        assert_eq!(s.map(&f).to_vec(), vec![0, 1]);
        assert_eq!(Subset::singleton(0).preimage(&f).to_vec(), vec![0, 1]);
    }

    #[test]
    fn full_64() {
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }
}
