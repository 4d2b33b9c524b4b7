//! Fixed-width element sets.
//!
//! Every structure in the crate lives on at most [`MAX_ELEMENTS`] points, so a
//! single `u128` word is enough to hold a subset. Set algebra is then a handful
//! of machine instructions, which is what the exponential solvers spend most
//! of their time on.

use std::fmt;

/// Largest ground set any poset, graph or family may have.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of `0..MAX_ELEMENTS`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        ElemSet(1u128 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | (1u128 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    #[inline]
    pub fn intersects(self, other: ElemSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as sorted index vectors.
    pub fn lex_cmp(self, other: ElemSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = &'a usize>>(iter: T) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// All subsets of `universe` with exactly `k` members, in lexicographic order
/// of their sorted member lists.
pub fn combinations(universe: ElemSet, k: usize) -> Combinations {
    let items = universe.to_vec();
    let idx = if k <= items.len() { Some((0..k).collect()) } else { None };
    Combinations { items, idx }
}

pub struct Combinations {
    items: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let idx = self.idx.as_mut()?;
        let out: ElemSet = idx.iter().map(|&i| self.items[i]).collect();
        let n = self.items.len();
        let k = idx.len();
        let mut pos = k;
        loop {
            if pos == 0 {
                self.idx = None;
                break;
            }
            pos -= 1;
            if idx[pos] < n - k + pos {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All subsets of `mask`, including the empty set and `mask` itself.
pub fn submasks(mask: ElemSet) -> impl Iterator<Item = ElemSet> {
    let m = mask.bits();
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & m) };
        Some(ElemSet::from_bits(c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: ElemSet = [5, 1, 127, 64].iter().collect();
        assert_eq!(s.to_vec(), vec![1, 5, 64, 127]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(1));
    }

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<_> = combinations(ElemSet::full(5), 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].to_vec(), vec![0, 1]);
        assert_eq!(all[9].to_vec(), vec![3, 4]);
        assert_eq!(combinations(ElemSet::full(3), 0).count(), 1);
        assert_eq!(combinations(ElemSet::full(3), 4).count(), 0);
    }

    #[test]
    fn submasks_cover_power_set() {
        let m: ElemSet = [0, 3, 7].iter().collect();
        assert_eq!(submasks(m).count(), 8);
        assert_eq!(submasks(ElemSet::EMPTY).count(), 1);
    }

    #[test]
    fn lex_order_of_sets() {
        let a: ElemSet = [0, 5].iter().collect();
        let b: ElemSet = [1, 2].iter().collect();
        assert!(a.lex_cmp(b).is_lt());
        assert_eq!(ElemSet::full(128).len(), 128);
    }
}
