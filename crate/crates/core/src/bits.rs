//! Fixed-width bitsets over root indices and over simple-root indices.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Largest root count any catalogued system reaches (two copies of E8).
pub const MAX_ROOTS: usize = 512;
const WORDS: usize = MAX_ROOTS / 64;

/// A set of root indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet([u64; WORDS]);

impl RootSet {
    pub const fn empty() -> Self {
        RootSet([0; WORDS])
    }

    /// Indices `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ROOTS);
        let mut s = RootSet::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        (*self & *other).is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + t)
            })
        })
    }

    /// Complement inside `0..n`.
    pub fn complement(&self, n: usize) -> RootSet {
        !*self & RootSet::full(n)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl BitAnd for RootSet {
    type Output = RootSet;
    fn bitand(mut self, rhs: RootSet) -> RootSet {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a &= b;
        }
        self
    }
}

impl BitOr for RootSet {
    type Output = RootSet;
    fn bitor(mut self, rhs: RootSet) -> RootSet {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a |= b;
        }
        self
    }
}

impl Sub for RootSet {
    type Output = RootSet;
    fn sub(mut self, rhs: RootSet) -> RootSet {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a &= !b;
        }
        self
    }
}

impl Not for RootSet {
    type Output = RootSet;
    fn not(mut self) -> RootSet {
        for a in self.0.iter_mut() {
            *a = !*a;
        }
        self
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of simple-root indices, bit `i` standing for the (i+1)-th simple root.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn all(rank: usize) -> NodeSet {
        NodeSet(((1u64 << rank) - 1) as u32)
    }

    pub fn single(i: usize) -> NodeSet {
        NodeSet(1 << i)
    }

    /// Builds from 1-based labels, the way nodes are named in diagrams.
    pub fn from_labels(labels: &[usize]) -> NodeSet {
        labels.iter().fold(NodeSet::EMPTY, |s, &a| s.with(a - 1))
    }

    pub fn with(self, i: usize) -> NodeSet {
        NodeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> NodeSet {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `0..rank`, in increasing mask order.
    pub fn subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..1u32 << rank).map(NodeSet)
    }

    /// Every subset of `self`.
    pub fn subsets_of(self) -> impl Iterator<Item = NodeSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(NodeSet(cur))
        })
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "α{l}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as its 1-based labels.
impl serde::Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        let s = RootSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains(69) && !s.contains(70));
        let mut t = RootSet::empty();
        t.insert(3);
        t.insert(65);
        assert_eq!(t.complement(70).len(), 68);
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![3, 65]);
    }

    #[test]
    fn subsets_of_enumerates_each_once() {
        let s = NodeSet(0b1011);
        let subs: Vec<_> = s.subsets_of().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
    }
}
