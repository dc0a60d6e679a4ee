//! Subsets of a small ordered ground set, stored as bitsets.

use std::fmt;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 16;

/// A subset of `{0, .., m-1}` for `m <= 16`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(m: usize) -> Subset {
        debug_assert!(m <= MAX_GROUND);
        Subset(((1u64 << m) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0, |acc, e| acc | (1 << e)))
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
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    #[inline]
    pub fn remove(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << e))
    }

    #[inline]
    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    #[inline]
    pub fn symmetric_difference(self, o: Subset) -> Subset {
        Subset(self.0 ^ o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, m: usize) -> Subset {
        Subset::full(m).difference(self)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based element labels, as used in every external format.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|e| e + 1).collect()
    }

    /// All subsets of `{0..m-1}` of the given size, in lexicographic order of
    /// their sorted element lists.
    pub fn k_subsets(m: usize, k: usize) -> Vec<Subset> {
        use itertools::Itertools;
        (0..m).combinations(k).map(Subset::from_indices).collect()
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == full {
                None
            } else {
                Some((out.wrapping_sub(full)) & full)
            };
            Some(Subset(out))
        })
    }

    /// Re-index a subset of `E` onto `E \ removed`, keeping element order.
    pub fn compress(self, removed: Subset) -> Subset {
        debug_assert!(self.intersection(removed).is_empty());
        let mut out = 0u32;
        let mut j = 0;
        for e in 0..MAX_GROUND {
            if removed.contains(e) {
                continue;
            }
            if self.contains(e) {
                out |= 1 << j;
            }
            j += 1;
        }
        Subset(out)
    }
}

pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Parity of the permutation sorting `seq` (which must have distinct entries).
pub fn sort_parity(seq: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                odd = !odd;
            }
        }
    }
    odd
}
