//! Integer sets, the Thue–Morse (evil/odious) generators, and partition pairs.

mod intset;
mod pair;

pub use intset::{IntSet, Iter, MAX_BOUND};
pub use pair::{IntersectionKind, IntersectionSpec, PartitionPair};

use crate::error::{invalid, Result};

/// Largest `l` accepted by [`evil_set`] / [`odious_set`]: `2^l - 1` must fit the universe.
pub const MAX_LEVEL: u32 = 32;

/// Bit `i` set iff `i < 64` has an even number of binary ones.
const EVIL_WORD: u64 = {
    let mut w = 0u64;
    let mut i = 0;
    while i < 64 {
        if (i as u64).count_ones().is_multiple_of(2) {
            w |= 1 << i;
        }
        i += 1;
    }
    w
};

/// True iff `n` has an even number of ones in binary (`n ∈ A`).
#[inline]
pub fn is_evil(n: usize) -> bool {
    n.count_ones().is_multiple_of(2)
}

/// `A ∩ [0, n]`.
pub fn evil_prefix(n: usize) -> IntSet {
    // Word `w` holds 64w..64w+63, whose digit sums are popcount(w) + popcount(i).
    let words = (0..n / 64 + 1)
        .map(|w| if is_evil(w) { EVIL_WORD } else { !EVIL_WORD })
        .collect();
    IntSet::from_words(n, words)
}

/// `B ∩ [0, n]`.
pub fn odious_prefix(n: usize) -> IntSet {
    let words = (0..n / 64 + 1)
        .map(|w| if is_evil(w) { !EVIL_WORD } else { EVIL_WORD })
        .collect();
    IntSet::from_words(n, words)
}

fn level_bound(l: u32) -> Result<usize> {
    if l == 0 || l > MAX_LEVEL {
        return Err(invalid(format!("level l = {l} outside 1..={MAX_LEVEL}")));
    }
    Ok((1usize << l) - 1)
}

/// `A_l = A ∩ [0, 2^l - 1]`.
pub fn evil_set(l: u32) -> Result<IntSet> {
    Ok(evil_prefix(level_bound(l)?))
}

/// `B_l = B ∩ [0, 2^l - 1]`.
pub fn odious_set(l: u32) -> Result<IntSet> {
    Ok(odious_prefix(level_bound(l)?))
}

/// Returns `Some(l)` when `m = 2^l - 1` for some `l >= 1`.
pub fn mersenne_level(m: usize) -> Option<u32> {
    (m > 0 && (m & (m + 1)) == 0).then(|| m.count_ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    fn popcount_filter(n: usize, evil: bool) -> Vec<usize> {
        (0..=n).filter(|i| (i.count_ones() % 2 == 0) == evil).collect()
    }

    #[test]
    fn is_evil_examples() {
        assert!(is_evil(0));
        assert!(is_evil(3));
        assert!(!is_evil(7));
    }

    #[test]
    fn evil_set_examples() {
        assert_eq!(evil_set(1).unwrap(), set("0"));
        assert_eq!(evil_set(2).unwrap(), set("0,3"));
        assert_eq!(evil_set(4).unwrap(), set("0,3,5,6,9,10,12,15"));
        assert_eq!(evil_set(4).unwrap().bound(), 15);
    }

    #[test]
    fn odious_set_examples() {
        assert_eq!(odious_set(1).unwrap(), set("1"));
        assert_eq!(odious_set(2).unwrap(), set("1,2"));
        assert_eq!(odious_set(3).unwrap(), set("1,2,4,7"));
    }

    #[test]
    fn level_out_of_range() {
        assert!(evil_set(0).is_err());
        assert!(odious_set(MAX_LEVEL + 1).is_err());
    }

    #[test]
    fn prefixes_match_popcount_filter() {
        for n in [0, 1, 2, 62, 63, 64, 65, 127, 128, 1000] {
            assert_eq!(evil_prefix(n).to_vec(), popcount_filter(n, true), "n={n}");
            assert_eq!(odious_prefix(n).to_vec(), popcount_filter(n, false), "n={n}");
        }
    }

    #[test]
    fn levels_partition_and_double() {
        for l in 1..=12 {
            let (a, b) = (evil_set(l).unwrap(), odious_set(l).unwrap());
            assert_eq!(a.len(), 1 << (l - 1));
            assert!(a.intersection(&b).is_empty());
            assert_eq!(a.union(&b), IntSet::interval((1 << l) - 1));
            let (a1, b1) = (evil_set(l + 1).unwrap(), odious_set(l + 1).unwrap());
            assert_eq!(a1, a.union(&b.shift(1 << l)));
            assert_eq!(b1, b.union(&a.shift(1 << l)));
        }
    }

    #[test]
    fn mersenne_levels() {
        assert_eq!(mersenne_level(1), Some(1));
        assert_eq!(mersenne_level(7), Some(3));
        assert_eq!(mersenne_level(4095), Some(12));
        assert_eq!(mersenne_level(0), None);
        assert_eq!(mersenne_level(6), None);
    }
}
