use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Maximum number of vertices a [`Hypergraph`](super::Hypergraph) may have.
///
/// A [`VertexSet`] is a single `u64`, so vertex indices live in `0..64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bit mask (bit `v` set iff `v` is a member).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// Builds a set from indices; indices `>= 64` are rejected.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Option<Self> {
        let mut mask = 0u64;
        for v in indices {
            if v >= MAX_VERTICES {
                return None;
            }
            mask |= 1u64 << v;
        }
        Some(VertexSet(mask))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Highest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `k`-element subsets, in increasing mask order.
    pub fn subsets_of_size(self, k: usize) -> KSubsets {
        let members = self.to_vec();
        let state = (k <= members.len()).then(|| (0..k).collect());
        KSubsets { members, state }
    }
}

/// Iterator returned by [`VertexSet::subsets_of_size`].
#[derive(Clone, Debug)]
pub struct KSubsets {
    members: Vec<usize>,
    // positions into `members`, strictly increasing; `None` once exhausted
    state: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let pos = self.state.as_mut()?;
        let out = VertexSet(pos.iter().fold(0u64, |m, &p| m | 1u64 << self.members[p]));
        // Advance in colex order on positions, which is increasing mask order.
        let m = self.members.len();
        let k = pos.len();
        let mut j = 0;
        while j < k && (if j + 1 < k { pos[j] + 1 == pos[j + 1] } else { pos[j] + 1 == m }) {
            j += 1;
        }
        if j == k {
            self.state = None;
        } else {
            pos[j] += 1;
            for (t, p) in pos.iter_mut().enumerate().take(j) {
                *p = t;
            }
        }
        Some(out)
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on an index `>= 64`; use [`VertexSet::from_indices`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter).expect("vertex index out of range")
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_handles_word_boundary() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).mask(), 0b111);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 1, 2].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 1]);
        assert!((a & b).is_subset(a));
        assert!(!a.is_subset(b));
        assert!((a - b).is_disjoint(b));
        assert_eq!(a.first(), Some(0));
        assert_eq!(b.last(), Some(3));
        assert_eq!(VertexSet::EMPTY.last(), None);
    }

    #[test]
    fn rejects_out_of_range_indices() {
        assert!(VertexSet::from_indices([63]).is_some());
        assert!(VertexSet::from_indices([64]).is_none());
        assert!(!VertexSet::full(64).contains(64));
    }

    #[test]
    fn k_subsets_in_mask_order() {
        let s: VertexSet = [1, 3, 4, 6].into_iter().collect();
        let subs: Vec<u64> = s.subsets_of_size(2).map(VertexSet::mask).collect();
        let mut expected: Vec<u64> = (0u64..128)
            .filter(|m| m.count_ones() == 2 && m & !s.mask() == 0)
            .collect();
        expected.sort();
        assert_eq!(subs, expected);
        assert_eq!(s.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(4).count(), 1);
        assert_eq!(s.subsets_of_size(5).count(), 0);
    }

    #[test]
    fn display_lists_members() {
        let s: VertexSet = [4, 1].into_iter().collect();
        assert_eq!(s.to_string(), "1 4");
        assert_eq!(format!("{s:?}"), "{1, 4}");
    }
}
