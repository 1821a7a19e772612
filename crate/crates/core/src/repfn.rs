//! Representation functions `R_S(n)` and cross-representation counts.
//!
//! [`repfn_point`] is the direct pair scan and serves as the oracle. The
//! table routines count, for each `n`, the pairs `(s, n - s)` by AND-ing the
//! packed characteristic words of one set against a bit-reversed copy of the
//! other, shifted so that bit `s` lines up with `n - s`, and popcounting.
//! That is `O(n / 64)` word operations per index.

use serde::Serialize;

use crate::exec::Exec;
use crate::sets::IntSet;

/// Counts `R(0..=N)` (or a cross count) indexed by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RepTable {
    values: Vec<u64>,
}

impl RepTable {
    pub fn from_values(values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "a table covers at least n = 0");
        RepTable { values }
    }

    /// Inclusive upper index `N`.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Entry at `n`; indices beyond `N` read as 0.
    pub fn get(&self, n: usize) -> u64 {
        self.values.get(n).copied().unwrap_or(0)
    }

    /// Entry at a possibly negative index; negative or out-of-range reads as 0.
    pub fn at(&self, n: i64) -> u64 {
        if n < 0 {
            0
        } else {
            self.get(n as usize)
        }
    }

    /// Indices with a nonzero count.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&n| self.values[n] != 0).collect()
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `n,count` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}

/// `R_S(n)` by direct scan over pairs `s < s'`.
pub fn repfn_point(set: &IntSet, n: usize) -> u64 {
    set.iter()
        .take_while(|&s| 2 * s < n)
        .filter(|&s| set.contains(n - s))
        .count() as u64
}

/// Counts `(s, t) ∈ S × T` with `s + t = n` over word-packed sets.
pub(crate) struct PairCounter<'a> {
    s: &'a [u64],
    s_bound: usize,
    /// `T` bit-reversed over `[0, t_bound]`, with one zero word of padding on each side.
    rev: Vec<u64>,
    t_bound: usize,
    hw_popcnt: bool,
}

impl<'a> PairCounter<'a> {
    pub(crate) fn new(s: &'a IntSet, t: &IntSet) -> Self {
        let t_bound = t.bound();
        let mut rev = vec![0u64; t_bound / 64 + 3];
        for x in t.iter() {
            let j = t_bound - x + 64;
            rev[j / 64] |= 1 << (j % 64);
        }
        PairCounter {
            s: s.words(),
            s_bound: s.bound(),
            rev,
            t_bound,
            hw_popcnt: detect_popcnt(),
        }
    }

    /// Pairs with `s ∈ [lo, hi]`; caller guarantees `n - hi >= 0` and `n - lo <= t_bound`.
    fn count_range(&self, n: usize, lo: usize, hi: usize) -> u64 {
        #[cfg(target_arch = "x86_64")]
        if self.hw_popcnt {
            // SAFETY: `hw_popcnt` is only set when the CPU reports popcnt.
            return unsafe { self.count_range_popcnt(n, lo, hi) };
        }
        self.count_range_body(n, lo, hi)
    }

    #[cfg(target_arch = "x86_64")]
    #[target_feature(enable = "popcnt")]
    unsafe fn count_range_popcnt(&self, n: usize, lo: usize, hi: usize) -> u64 {
        self.count_range_body(n, lo, hi)
    }

    #[inline(always)]
    fn count_range_body(&self, n: usize, lo: usize, hi: usize) -> u64 {
        if lo > hi {
            return 0;
        }
        // Bit s of S meets bit (t_bound - n + s) of the reversed T, i.e. padded bit delta + s.
        let delta = self.t_bound as isize - n as isize + 64;
        let q = delta.div_euclid(64);
        let r = delta.rem_euclid(64) as u32;
        let (first, last) = (lo / 64, hi / 64);
        let lo_mask = !0u64 << (lo % 64);
        let hi_mask = !0u64 >> (63 - hi % 64);

        let window = |i: usize| -> u64 {
            let j = (i as isize + q) as usize;
            if r == 0 {
                self.rev[j]
            } else {
                (self.rev[j] >> r) | (self.rev[j + 1] << (64 - r))
            }
        };

        if first == last {
            let w = self.s[first] & lo_mask & hi_mask;
            return (w & window(first)).count_ones() as u64;
        }
        let mut total = (self.s[first] & lo_mask & window(first)).count_ones() as u64;
        total += and_popcount(&self.s[first + 1..last], &self.rev, first + 1, q, r);
        total += (self.s[last] & hi_mask & window(last)).count_ones() as u64;
        total
    }

    /// Ordered count `|{(s, t): s + t = n}|`.
    pub(crate) fn cross(&self, n: usize) -> u64 {
        let lo = n.saturating_sub(self.t_bound);
        let hi = n.min(self.s_bound);
        self.count_range(n, lo, hi)
    }

    /// Unordered count of pairs `s < s'`; only meaningful when `T = S`.
    pub(crate) fn strict_half(&self, n: usize) -> u64 {
        if n == 0 {
            return 0;
        }
        let lo = n.saturating_sub(self.t_bound);
        let hi = ((n - 1) / 2).min(self.s_bound);
        self.count_range(n, lo, hi)
    }
}

fn detect_popcnt() -> bool {
    #[cfg(target_arch = "x86_64")]
    {
        std::arch::is_x86_feature_detected!("popcnt")
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        false
    }
}

#[inline(always)]
fn and_popcount(s: &[u64], rev: &[u64], start: usize, q: isize, r: u32) -> u64 {
    let base = (start as isize + q) as usize;
    let rev = &rev[base..base + s.len() + 1];
    if r == 0 {
        s.iter().zip(rev).map(|(a, b)| (a & b).count_ones() as u64).sum()
    } else {
        s.iter()
            .zip(rev.windows(2))
            .map(|(a, w)| (a & ((w[0] >> r) | (w[1] << (64 - r)))).count_ones() as u64)
            .sum()
    }
}

/// `R_S(0..=n_max)` via the word-parallel kernel.
pub fn repfn_table(set: &IntSet, n_max: usize) -> RepTable {
    repfn_table_with(set, n_max, Exec::default())
}

pub fn repfn_table_with(set: &IntSet, n_max: usize, exec: Exec) -> RepTable {
    let counter = PairCounter::new(set, set);
    RepTable::from_values(exec.map(0..n_max + 1, |n| counter.strict_half(n)))
}

/// Ordered cross counts `|{(s, t) ∈ S × T : s + t = n}|` for `n <= n_max`.
pub fn cross_rep_table(s: &IntSet, t: &IntSet, n_max: usize) -> RepTable {
    cross_rep_table_with(s, t, n_max, Exec::default())
}

pub fn cross_rep_table_with(s: &IntSet, t: &IntSet, n_max: usize, exec: Exec) -> RepTable {
    let counter = PairCounter::new(s, t);
    RepTable::from_values(exec.map(0..n_max + 1, |n| counter.cross(n)))
}

/// Least `n <= n_max` with `R_C(n) != R_D(n)`.
pub fn first_mismatch(c: &IntSet, d: &IntSet, n_max: usize) -> Option<usize> {
    first_mismatch_with(c, d, n_max, Exec::default())
}

pub fn first_mismatch_with(c: &IntSet, d: &IntSet, n_max: usize, exec: Exec) -> Option<usize> {
    first_mismatch_in(c, d, 0, n_max, exec)
}

/// Least `n ∈ [from, to]` with `R_C(n) != R_D(n)`.
pub(crate) fn first_mismatch_in(c: &IntSet, d: &IntSet, from: usize, to: usize, exec: Exec) -> Option<usize> {
    if from > to {
        return None;
    }
    let (cc, dc) = (PairCounter::new(c, c), PairCounter::new(d, d));
    exec.find_first(from..to + 1, |n| cc.strict_half(n) != dc.strict_half(n))
}
