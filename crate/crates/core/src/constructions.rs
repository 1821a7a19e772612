//! Explicit partition families: Thue–Morse prefixes, the finite `(A_l, B_l)`
//! pairs, the single-overlap pairs built from `A_{2l}` and `B_{2l}`, and block
//! lifting of a finite single-overlap pair to a periodic overlap.

use crate::error::{invalid, precondition, Error, Result};
use crate::repfn::first_mismatch;
use crate::sets::{
    evil_prefix, evil_set, is_evil, odious_prefix, odious_set, IntSet, IntersectionSpec, PartitionPair, MAX_LEVEL,
};

/// `(A ∩ [0, n], B ∩ [0, n])` with empty overlap.
pub fn dombi_partition(n: usize) -> PartitionPair {
    PartitionPair::new(evil_prefix(n), odious_prefix(n), n, IntersectionSpec::empty())
        .expect("evil and odious numbers partition every prefix")
}

/// `(A_l, B_l)` over `[0, 2^l - 1]`.
pub fn finite_tm_partition(l: u32) -> Result<PartitionPair> {
    let (a, b) = (evil_set(l)?, odious_set(l)?);
    let m = a.bound();
    PartitionPair::new(a, b, m, IntersectionSpec::empty())
}

/// Largest `l` accepted by [`chen_lev_pair`].
pub const MAX_CHEN_LEV_LEVEL: u32 = (MAX_LEVEL - 1) / 2;

/// `C = A_{2l} ∪ (2^{2l} - 1 + B_{2l})`, `D = B_{2l} ∪ (2^{2l} - 1 + A_{2l})`
/// over `m = 2^{2l+1} - 2`, overlapping exactly in `r = 2^{2l} - 1`.
pub fn chen_lev_pair(l: u32) -> Result<PartitionPair> {
    if l == 0 || l > MAX_CHEN_LEV_LEVEL {
        return Err(invalid(format!("level l = {l} outside 1..={MAX_CHEN_LEV_LEVEL}")));
    }
    let (a, b) = (evil_set(2 * l)?, odious_set(2 * l)?);
    let r = a.bound();
    let c = a.union(&b.shift(r));
    let d = b.union(&a.shift(r));
    PartitionPair::new(c, d, 2 * r, IntersectionSpec::finite(vec![r])?)
}

/// `(m, r)` of [`chen_lev_pair`]`(l)`.
pub fn chen_lev_parameters(l: u32) -> (usize, usize) {
    let r = (1usize << (2 * l)) - 1;
    (2 * r, r)
}

/// Tile `blocks` copies of a finite single-overlap pair over `[0, m]`.
///
/// Block `k` occupies `[k(m+1), k(m+1) + m]`. It places `C0` into `C` and
/// `D0` into `D` when `k` is evil, and the other way round when `k` is
/// odious. The result covers `[0, blocks·(m+1) - 1]` with overlap
/// `r + (m+1)ℕ`. R-equality of the result is checked over that universe and
/// a failure is reported as [`Error::Verification`].
pub fn lift_partition(c0: &IntSet, d0: &IntSet, r: usize, m: usize, blocks: usize) -> Result<PartitionPair> {
    if m == 0 || r == 0 || blocks == 0 {
        return Err(invalid("lift needs positive r, m and block count"));
    }
    if r > m {
        return Err(invalid(format!("overlap point {r} exceeds m = {m}")));
    }
    let width = m + 1;
    let top = blocks
        .checked_mul(width)
        .map(|n| n - 1)
        .filter(|&n| n <= crate::sets::MAX_BOUND)
        .ok_or_else(|| invalid("lifted universe exceeds the supported bound"))?;

    // Cover, overlap {r} and 0 ∈ C0, each reported at the least offending index.
    PartitionPair::new(c0.clone(), d0.clone(), m, IntersectionSpec::finite(vec![r])?)?;
    if let Some(n) = first_mismatch(c0, d0, 2 * m) {
        return Err(precondition(n, "R_C0 and R_D0 differ"));
    }

    let mut c = IntSet::new(top);
    let mut d = IntSet::new(top);
    for k in 0..blocks {
        let (into_c, into_d) = if is_evil(k) { (c0, d0) } else { (d0, c0) };
        let base = k * width;
        for x in into_c.iter() {
            c.insert(base + x);
        }
        for x in into_d.iter() {
            d.insert(base + x);
        }
    }

    let pair = PartitionPair::new(c, d, top, IntersectionSpec::periodic(r, width)?)?;
    if let Some(n) = first_mismatch(pair.c(), pair.d(), top) {
        return Err(Error::Verification {
            index: n,
            what: "lifted pair has R_C(n) != R_D(n)".into(),
        });
    }
    Ok(pair)
}

/// [`lift_partition`] applied to [`chen_lev_pair`]`(l)`.
pub fn lift_chen_lev(l: u32, blocks: usize) -> Result<PartitionPair> {
    let base = chen_lev_pair(l)?;
    let (m, r) = chen_lev_parameters(l);
    lift_partition(base.c(), base.d(), r, m, blocks)
}

/// `(A_l ∪ (2^l + B_l), B_l ∪ (2^l + A_l))`; the inputs must partition `[0, 2^l - 1]`.
pub fn doubling_step(al: &IntSet, bl: &IntSet, l: u32) -> Result<(IntSet, IntSet)> {
    if l == 0 || l >= MAX_LEVEL {
        return Err(invalid(format!("level l = {l} outside 1..{MAX_LEVEL}")));
    }
    let top = (1usize << l) - 1;
    if let Some(n) = al.intersection(bl).min() {
        return Err(precondition(n, "inputs overlap"));
    }
    let universe = IntSet::interval(top);
    let union = al.union(bl);
    if let Some(n) = union.difference(&universe).min() {
        return Err(precondition(n, "member beyond 2^l - 1"));
    }
    if let Some(n) = universe.difference(&union).min() {
        return Err(precondition(n, "inputs do not cover [0, 2^l - 1]"));
    }
    let shift = top + 1;
    Ok((al.union(&bl.shift(shift)), bl.union(&al.shift(shift))))
}
