//! Fixed-width membership masks over the elements of a finite semigroup.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest semigroup order representable by an [`ElemSet`].
pub const MAX_ORDER: usize = 64;

/// A subset of `{0, .., n-1}` stored as a 64-bit mask.
///
/// Ordering is by mask value, which is the deterministic order used for every
/// enumeration of subsets and ideals in this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds mask width");
        if n == MAX_ORDER {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ORDER);
        ElemSet(1u64 << i)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(Self::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ORDER && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_ORDER);
        ElemSet(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        assert!(i < MAX_ORDER);
        ElemSet(self.0 & !(1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.with(i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elems {
        Elems(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `{0, .., n-1}` in ascending mask order, the empty set first.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
        assert!(n < MAX_ORDER, "subset scan over {n} elements is not supported");
        (0..(1u64 << n)).map(ElemSet)
    }
}

/// Iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Elems(u64);

impl Iterator for Elems {
    type Item = usize;

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

impl ExactSizeIterator for Elems {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Elems;

    fn into_iter(self) -> Elems {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElemSet::from_elems(iter)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

// Serialized as a sorted array of element indices.
impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(deserializer)?;
        let mut set = ElemSet::EMPTY;
        for i in elems {
            if i >= MAX_ORDER {
                return Err(D::Error::custom(format!("element index {i} out of range")));
            }
            if set.contains(i) {
                return Err(D::Error::custom(format!("duplicate element index {i}")));
            }
            set.insert(i);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = ElemSet::from_elems([0, 2, 5]);
        let b = ElemSet::from_elems([2, 3]);
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert!(ElemSet::from_elems([2]).is_subset(b));
        assert!(!a.is_subset(b));
        assert_eq!(ElemSet::full(3).len(), 3);
        assert_eq!(ElemSet::full(64).len(), 64);
    }

    #[test]
    fn subsets_ascend() {
        let all: Vec<_> = ElemSet::all_subsets(3).collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all[0].is_empty());
    }

    #[test]
    fn serde_as_index_array() {
        let a = ElemSet::from_elems([3, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,3]");
        let back: ElemSet = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<ElemSet>("[1,1]").is_err());
        assert!(serde_json::from_str::<ElemSet>("[64]").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(ElemSet::from_elems([0, 2]).to_string(), "{0,2}");
        assert_eq!(ElemSet::EMPTY.to_string(), "{}");
    }
}
