use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{invalid, Error, Result};

/// Largest supported universe bound.
pub const MAX_BOUND: usize = u32::MAX as usize;

const WORD: usize = 64;

/// Finite set of nonnegative integers over the universe `[0, bound]`, stored
/// as a packed characteristic sequence (bit `n` set iff `n` is a member).
///
/// Bits above `bound` are always clear. Equality and hashing look at members
/// only, so `{0, 3}` over `[0, 3]` equals `{0, 3}` over `[0, 7]`.
#[derive(Clone)]
pub struct IntSet {
    bound: usize,
    words: Vec<u64>,
}

fn word_count(bound: usize) -> usize {
    bound / WORD + 1
}

impl IntSet {
    pub fn new(bound: usize) -> Self {
        assert!(bound <= MAX_BOUND, "universe bound {bound} exceeds {MAX_BOUND}");
        IntSet {
            bound,
            words: vec![0; word_count(bound)],
        }
    }

    /// The full interval `[0, bound]`.
    pub fn interval(bound: usize) -> Self {
        let mut s = IntSet::new(bound);
        s.words.fill(!0);
        s.clear_above_bound();
        s
    }

    /// Build a set over `[0, bound]`; a member beyond `bound` is an error.
    pub fn from_members<I: IntoIterator<Item = usize>>(bound: usize, members: I) -> Result<Self> {
        if bound > MAX_BOUND {
            return Err(invalid(format!("universe bound {bound} exceeds {MAX_BOUND}")));
        }
        let mut s = IntSet::new(bound);
        for n in members {
            if n > bound {
                return Err(invalid(format!("member {n} exceeds universe bound {bound}")));
            }
            s.set_bit(n);
        }
        Ok(s)
    }

    pub(crate) fn from_words(bound: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(bound));
        let mut s = IntSet { bound, words };
        s.clear_above_bound();
        s
    }

    fn clear_above_bound(&mut self) {
        let used = (self.bound % WORD) + 1;
        if used < WORD {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    #[inline]
    fn set_bit(&mut self, n: usize) {
        self.words[n / WORD] |= 1u64 << (n % WORD);
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, n: usize) -> bool {
        n <= self.bound && (self.words[n / WORD] >> (n % WORD)) & 1 == 1
    }

    /// Characteristic function: 1 for members, 0 otherwise (including beyond the bound).
    #[inline]
    pub fn chi(&self, n: usize) -> u8 {
        self.contains(n) as u8
    }

    /// Add `n`, growing the universe if `n` lies beyond it.
    pub fn insert(&mut self, n: usize) {
        if n > self.bound {
            self.grow(n);
        }
        self.set_bit(n);
    }

    pub fn remove(&mut self, n: usize) {
        if n <= self.bound {
            self.words[n / WORD] &= !(1u64 << (n % WORD));
        }
    }

    /// Flip membership of `n`, growing the universe if needed.
    pub fn toggle(&mut self, n: usize) {
        if self.contains(n) {
            self.remove(n)
        } else {
            self.insert(n)
        }
    }

    fn grow(&mut self, bound: usize) {
        assert!(bound <= MAX_BOUND, "universe bound {bound} exceeds {MAX_BOUND}");
        self.bound = bound;
        self.words.resize(word_count(bound), 0);
    }

    /// Same members over the larger universe `[0, bound]`.
    pub fn with_bound(&self, bound: usize) -> Result<IntSet> {
        if let Some(max) = self.max() {
            if max > bound {
                return Err(invalid(format!("member {max} exceeds requested bound {bound}")));
            }
        }
        let mut words = self.words.clone();
        words.resize(word_count(bound), 0);
        Ok(IntSet::from_words(bound, words))
    }

    /// `S ∩ [0, bound]`, over the universe `[0, bound]`.
    pub fn restrict(&self, bound: usize) -> IntSet {
        let mut words: Vec<u64> = self.words.iter().copied().take(word_count(bound)).collect();
        words.resize(word_count(bound), 0);
        IntSet::from_words(bound, words)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + 63 - w.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_words(&self, other: &IntSet, f: impl Fn(u64, u64) -> u64) -> IntSet {
        let bound = self.bound.max(other.bound);
        let words = (0..word_count(bound))
            .map(|i| {
                let a = self.words.get(i).copied().unwrap_or(0);
                let b = other.words.get(i).copied().unwrap_or(0);
                f(a, b)
            })
            .collect();
        IntSet::from_words(bound, words)
    }

    pub fn union(&self, other: &IntSet) -> IntSet {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &IntSet) -> IntSet {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &IntSet) -> IntSet {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.difference(other).is_empty()
    }

    /// `a + S`, over the universe `[0, bound + a]`. Word-parallel.
    pub fn shift(&self, a: usize) -> IntSet {
        let bound = self.bound + a;
        let mut words = vec![0u64; word_count(bound)];
        let (q, r) = (a / WORD, a % WORD);
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            words[i + q] |= w << r;
            if r > 0 && i + q + 1 < words.len() {
                words[i + q + 1] |= w >> (WORD - r);
            }
        }
        IntSet::from_words(bound, words)
    }

    /// `m - S`, over the universe `[0, m]`. Every member must be `<= m`.
    pub fn reflect(&self, m: usize) -> Result<IntSet> {
        if let Some(max) = self.max() {
            if max > m {
                return Err(invalid(format!("member {max} exceeds reflection point {m}")));
            }
        }
        let mut out = IntSet::new(m);
        for s in self.iter() {
            out.set_bit(m - s);
        }
        Ok(out)
    }

    fn significant_words(&self) -> &[u64] {
        let len = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for IntSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant_words() == other.significant_words()
    }
}

impl Eq for IntSet {}

impl Hash for IntSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.significant_words().hash(state)
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSet[0..={}]{{{}}}", self.bound, self)
    }
}

/// Canonical text: strictly increasing comma-separated decimals, empty string for ∅.
impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parses canonical text; the universe bound is the largest member (0 for ∅).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntSet::new(0));
        }
        let mut members = Vec::new();
        for tok in s.split(',') {
            let n: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative integer")))?;
            if let Some(&prev) = members.last() {
                if n <= prev {
                    return Err(Error::Parse(format!(
                        "members must be strictly increasing ({prev} then {n})"
                    )));
                }
            }
            members.push(n);
        }
        let bound = *members.last().unwrap();
        IntSet::from_members(bound, members).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Bound is the largest member (0 for an empty iterator).
impl FromIterator<usize> for IntSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IntSet::new(0);
        for n in iter {
            s.insert(n);
        }
        s
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for n in self.iter() {
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD + bit)
    }
}

impl<'a> IntoIterator for &'a IntSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
