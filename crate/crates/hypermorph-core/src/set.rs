//! Dense bit-packed sets over the vertex and edge universes of a hypergraph.
//!
//! Every morphological operator is set algebra over one of two finite
//! universes, so both set types carry their universe size and support
//! complement relative to it. The two wrappers exist so vertex selections and
//! edge selections cannot be mixed up; the id spaces are otherwise identical.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{EdgeId, VertexId};

const WORD_BITS: usize = 64;

/// Untyped fixed-universe bitset backing [`VertexSet`] and [`EdgeSet`].
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    universe: usize,
    words: Vec<u64>,
}

impl Bits {
    fn empty(universe: usize) -> Self {
        let words = vec![0u64; universe.div_ceil(WORD_BITS)];
        Bits { universe, words }
    }

    fn full(universe: usize) -> Self {
        let mut bits = Self::empty(universe);
        for w in bits.words.iter_mut() {
            *w = !0;
        }
        bits.mask_tail();
        bits
    }

    /// Clears bits at positions >= universe in the last word.
    fn mask_tail(&mut self) {
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    fn contains(&self, index: usize) -> bool {
        debug_assert!(index < self.universe, "set index out of universe");
        self.words[index / WORD_BITS] & (1 << (index % WORD_BITS)) != 0
    }

    fn insert(&mut self, index: usize) {
        assert!(
            index < self.universe,
            "set index {index} out of universe {}",
            self.universe
        );
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    fn remove(&mut self, index: usize) {
        assert!(
            index < self.universe,
            "set index {index} out of universe {}",
            self.universe
        );
        self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    fn union(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Bits {
            universe: self.universe,
            words,
        }
    }

    fn intersection(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Bits {
            universe: self.universe,
            words,
        }
    }

    fn difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        Bits {
            universe: self.universe,
            words,
        }
    }

    fn complement(&self) -> Self {
        let mut out = Bits {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn intersects(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }
}

macro_rules! typed_set {
    ($(#[$doc:meta])* $name:ident, $id:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq)]
        pub struct $name {
            bits: Bits,
        }

        impl $name {
            /// Empty set over a universe of `universe` ids.
            pub fn empty(universe: usize) -> Self {
                Self { bits: Bits::empty(universe) }
            }

            /// Set containing every id of the universe.
            pub fn full(universe: usize) -> Self {
                Self { bits: Bits::full(universe) }
            }

            /// Builds a set from raw indices; panics if one is out of range.
            pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
                let mut set = Self::empty(universe);
                for i in indices {
                    set.bits.insert(i);
                }
                set
            }

            /// Size of the universe this set lives in.
            pub fn universe(&self) -> usize {
                self.bits.universe
            }

            /// Number of members.
            pub fn len(&self) -> usize {
                self.bits.len()
            }

            pub fn is_empty(&self) -> bool {
                self.bits.words.iter().all(|&w| w == 0)
            }

            pub fn contains(&self, id: $id) -> bool {
                self.bits.contains(id.0)
            }

            pub fn insert(&mut self, id: $id) {
                self.bits.insert(id.0);
            }

            pub fn remove(&mut self, id: $id) {
                self.bits.remove(id.0);
            }

            pub fn union(&self, other: &Self) -> Self {
                Self { bits: self.bits.union(&other.bits) }
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self { bits: self.bits.intersection(&other.bits) }
            }

            /// Members of `self` not in `other`.
            pub fn difference(&self, other: &Self) -> Self {
                Self { bits: self.bits.difference(&other.bits) }
            }

            /// Complement relative to the universe.
            pub fn complement(&self) -> Self {
                Self { bits: self.bits.complement() }
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.bits.is_subset(&other.bits)
            }

            /// True when the two sets share at least one member.
            pub fn intersects(&self, other: &Self) -> bool {
                self.bits.intersects(&other.bits)
            }

            /// Iterates members in increasing id order.
            pub fn iter(&self) -> impl Iterator<Item = $id> + '_ {
                self.bits.iter().map($id)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{{", stringify!($name))?;
                for (n, id) in self.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", id.0)?;
                }
                write!(f, "}}/{}", self.universe())
            }
        }

        impl FromIterator<$id> for $name {
            /// Collects ids into a set sized by the largest id; mostly for tests.
            fn from_iter<I: IntoIterator<Item = $id>>(iter: I) -> Self {
                let ids: Vec<$id> = iter.into_iter().collect();
                let universe = ids.iter().map(|id| id.0 + 1).max().unwrap_or(0);
                let mut set = Self::empty(universe);
                for id in ids {
                    set.insert(id);
                }
                set
            }
        }
    };
}

typed_set!(
    /// Subset of a hypergraph's vertex universe (an `X•`).
    VertexSet,
    VertexId
);
typed_set!(
    /// Subset of a hypergraph's hyperedge family (an index selection `X×`).
    EdgeSet,
    EdgeId
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = VertexSet::empty(130);
        assert!(s.is_empty());
        s.insert(VertexId(0));
        s.insert(VertexId(64));
        s.insert(VertexId(129));
        assert_eq!(s.len(), 3);
        assert!(s.contains(VertexId(64)));
        assert!(!s.contains(VertexId(63)));
        s.remove(VertexId(64));
        assert!(!s.contains(VertexId(64)));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn complement_respects_universe() {
        let s = VertexSet::from_indices(70, [0, 69]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(VertexId(0)));
        assert!(c.contains(VertexId(1)));
        assert!(!c.contains(VertexId(69)));
        assert_eq!(c.complement(), s);
    }

    #[test]
    fn full_set_has_universe_len() {
        let s = EdgeSet::full(65);
        assert_eq!(s.len(), 65);
        assert!(s.complement().is_empty());
    }

    #[test]
    fn algebra_basics() {
        let a = VertexSet::from_indices(10, [1, 2, 3]);
        let b = VertexSet::from_indices(10, [3, 4]);
        assert_eq!(a.union(&b), VertexSet::from_indices(10, [1, 2, 3, 4]));
        assert_eq!(a.intersection(&b), VertexSet::from_indices(10, [3]));
        assert_eq!(a.difference(&b), VertexSet::from_indices(10, [1, 2]));
        assert!(a.intersects(&b));
        assert!(VertexSet::from_indices(10, [1, 2]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn iter_in_order() {
        let s = EdgeSet::from_indices(200, [199, 0, 64, 65]);
        let got: Vec<usize> = s.iter().map(|e| e.0).collect();
        assert_eq!(got, [0, 64, 65, 199]);
    }

    #[test]
    #[should_panic(expected = "different universes")]
    fn cross_universe_union_panics() {
        let a = VertexSet::empty(4);
        let b = VertexSet::empty(5);
        let _ = a.union(&b);
    }

    #[test]
    #[should_panic(expected = "out of universe")]
    fn out_of_range_insert_panics() {
        let mut s = VertexSet::empty(4);
        s.insert(VertexId(4));
    }

    #[test]
    fn zero_universe() {
        let s = VertexSet::empty(0);
        assert!(s.is_empty());
        assert!(s.complement().is_empty());
        assert_eq!(VertexSet::full(0), s);
    }
}
