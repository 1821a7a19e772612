//! Brute-force oracles over bitmask assignments. These share no code with
//! the forcing or table routines they check.

use crate::error::{invalid, Error, Result};
use crate::sets::{IntSet, IntersectionSpec, PartitionPair};

use super::forcing::overlap_within;

/// Default largest `m` accepted by [`exhaustive_search`].
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 22;

/// Masks hold bits `0..=m`, so `m` can never exceed this.
const MASK_LIMIT: usize = 62;

/// `R` of the set encoded by `mask` (bits `0..=top`) at `n`, by direct pair scan.
pub(crate) fn mask_rep(mask: u64, top: usize, n: usize) -> u32 {
    if n == 0 {
        return 0;
    }
    let lo = n.saturating_sub(top);
    let hi = (n - 1) / 2;
    (lo..=hi)
        .filter(|&s| mask >> s & 1 == 1 && mask >> (n - s) & 1 == 1)
        .count() as u32
}

pub(crate) fn mask_to_set(mask: u64, top: usize) -> IntSet {
    IntSet::from_members(top, (0..=top).filter(|&i| mask >> i & 1 == 1)).expect("bits within top")
}

/// Every pair with `0 ∈ C`, `C ∪ D = [0, m]`, overlap as prescribed and
/// `R_C(n) = R_D(n)` for all `n <= horizon`. Points of the overlap go to both
/// sets, each remaining point of `[1, m]` to exactly one.
pub fn exhaustive_search(m: usize, spec: &IntersectionSpec, horizon: usize, cap: usize) -> Result<Vec<PartitionPair>> {
    if m == 0 {
        return Err(invalid("m must be positive"));
    }
    let cap = cap.min(MASK_LIMIT);
    if m > cap {
        return Err(Error::CapExceeded {
            what: "brute-force m",
            requested: m,
            cap,
        });
    }
    let overlap = overlap_within(m, spec)?;
    let mut shared = 0u64;
    for r in overlap.iter() {
        shared |= 1 << r;
    }
    let free: Vec<usize> = (1..=m).filter(|&v| !overlap.contains(v)).collect();
    let last = horizon.min(2 * m);

    let mut out = Vec::new();
    for choice in 0u64..(1u64 << free.len()) {
        let mut c = 1u64 | shared;
        let mut d = shared;
        for (j, &v) in free.iter().enumerate() {
            if choice >> j & 1 == 1 {
                c |= 1 << v;
            } else {
                d |= 1 << v;
            }
        }
        if (1..=last).all(|n| mask_rep(c, m, n) == mask_rep(d, m, n)) {
            out.push(PartitionPair::new(
                mask_to_set(c, m),
                mask_to_set(d, m),
                m,
                spec.clone(),
            )?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chen_lev_pair;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let empty = IntersectionSpec::empty();
        let found = exhaustive_search(7, &empty, 14, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].c(), found[0].d()), (&set("0,3,5,6"), &set("1,2,4,7")));

        assert!(exhaustive_search(5, &empty, 10, DEFAULT_BRUTE_FORCE_CAP)
            .unwrap()
            .is_empty());

        let r3 = IntersectionSpec::finite(vec![3]).unwrap();
        let found = exhaustive_search(6, &r3, 12, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(found, vec![chen_lev_pair(1).unwrap()]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = exhaustive_search(23, &IntersectionSpec::empty(), 46, DEFAULT_BRUTE_FORCE_CAP).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "brute-force m",
                requested: 23,
                cap: 22
            }
        );
        assert!(exhaustive_search(63, &IntersectionSpec::empty(), 126, 100).is_err());
    }

    #[test]
    fn mask_rep_matches_definition() {
        let mask = 0b1011_1001u64; // {0,3,4,5,7}
        let s = mask_to_set(mask, 7);
        for n in 0..=14 {
            assert_eq!(mask_rep(mask, 7, n) as u64, crate::repfn::repfn_point(&s, n));
        }
    }

    #[test]
    fn small_m_without_solutions() {
        let empty = IntersectionSpec::empty();
        assert!(exhaustive_search(2, &empty, 4, DEFAULT_BRUTE_FORCE_CAP)
            .unwrap()
            .is_empty());
        let r2 = IntersectionSpec::finite(vec![2]).unwrap();
        assert!(exhaustive_search(6, &r2, 12, DEFAULT_BRUTE_FORCE_CAP)
            .unwrap()
            .is_empty());
    }
}
