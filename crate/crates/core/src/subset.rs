//! Subsets of `[n] = {1, ..., n}` packed into a `u64`; element `i` is bit `i - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const MAX_N: usize = 63;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `[n]` itself.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_N);
        Subset((1u64 << n) - 1)
    }

    pub fn singleton(x: usize) -> Subset {
        debug_assert!((1..=MAX_N).contains(&x));
        Subset(1 << (x - 1))
    }

    /// Panics if an element is outside `1..=63`.
    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        elems.into_iter().fold(Subset::EMPTY, |s, x| {
            assert!((1..=MAX_N).contains(&x), "element {x} out of range");
            s.with(x)
        })
    }

    /// The integer interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Subset {
        if lo > hi {
            return Subset::EMPTY;
        }
        Subset(Subset::full(hi).0 & !Subset::full(lo - 1).0)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
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
    pub fn contains(self, x: usize) -> bool {
        (1..=MAX_N).contains(&x) && self.0 >> (x - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, x: usize) -> Subset {
        Subset(self.0 | 1 << (x - 1))
    }

    #[inline]
    pub fn without(self, x: usize) -> Subset {
        Subset(self.0 & !(1 << (x - 1)))
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let x = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(x)
        })
    }

    /// Every subset of `self` (including empty and `self`), in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur | !mask).wrapping_add(1) & mask)
            };
            Some(Subset(cur))
        })
    }

    /// Subsets of `[n]` with exactly `k` elements, in increasing bit order.
    pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << k) - 1)
        };
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                // Gosper's hack
                let low = cur & cur.wrapping_neg();
                let ripple = cur.wrapping_add(low);
                if ripple == 0 {
                    None
                } else {
                    let succ = ripple | (((cur ^ ripple) >> 2) / low);
                    (succ <= limit && succ.count_ones() as usize == k).then_some(succ)
                }
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_max_and_iter() {
        let s = Subset::from_elems([5, 2, 9]);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(9));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2, 5, 9]);
        assert_eq!(Subset::EMPTY.min(), None);
        assert_eq!(s.to_string(), "{2,5,9}");
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = Subset::from_elems([1, 3, 4]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn k_subsets_counts() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let got: Vec<_> = Subset::k_subsets(n, k).collect();
                let expected = (0u64..1 << n).filter(|m| m.count_ones() as usize == k).count();
                assert_eq!(got.len(), expected, "n={n} k={k}");
                assert!(got.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn interval() {
        assert_eq!(Subset::interval(2, 4), Subset::from_elems([2, 3, 4]));
        assert_eq!(Subset::interval(3, 2), Subset::EMPTY);
    }
}
