//! Theorem-level sweeps built on [`forced_extension`] and the word-parallel
//! mismatch search.

use serde::Serialize;

use super::forcing::forced_extension;
use crate::constructions::{chen_lev_pair, chen_lev_parameters};
use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::repfn::first_mismatch_in;
use crate::sets::{
    evil_prefix, evil_set, is_evil, mersenne_level, odious_prefix, odious_set, IntSet, IntersectionSpec,
};
use crate::VERSION;

/// Every sweep checks `R_C = R_D` up to `2m`, past which both counts vanish.
pub const SWEEP_HORIZON: &str = "2m";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem3Hit {
    pub m: usize,
    pub level: Option<u32>,
    /// The pair is `(A_l, B_l)` for `m = 2^l - 1`.
    pub equals_tm: bool,
    pub c: IntSet,
    pub d: IntSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem3Report {
    pub version: &'static str,
    pub m_max: usize,
    pub horizon: &'static str,
    pub cells: usize,
    pub hits: Vec<Theorem3Hit>,
    pub expected: Vec<usize>,
    pub passed: bool,
}

pub fn classify_theorem3(m_max: usize) -> Result<Theorem3Report> {
    classify_theorem3_with(m_max, Exec::default())
}

/// Run forcing with an empty overlap for every `m <= m_max`.
pub fn classify_theorem3_with(m_max: usize, exec: Exec) -> Result<Theorem3Report> {
    if m_max == 0 {
        return Err(invalid("m_max must be positive"));
    }
    let empty = IntersectionSpec::empty();
    let outcomes = exec.map(1..m_max + 1, |i| forced_extension(i, &empty, 2 * i));
    let mut hits = Vec::new();
    for (i, out) in outcomes.into_iter().enumerate() {
        let Some(pair) = out?.into_pair() else { continue };
        let m = i + 1;
        let level = mersenne_level(m);
        let equals_tm = match level {
            Some(l) => pair.c() == &evil_set(l)? && pair.d() == &odious_set(l)?,
            None => false,
        };
        let (c, d) = pair.into_sets();
        hits.push(Theorem3Hit {
            m,
            level,
            equals_tm,
            c,
            d,
        });
    }
    let expected: Vec<usize> = (1..usize::BITS)
        .map(|l| (1usize << l) - 1)
        .take_while(|&m| m <= m_max)
        .collect();
    let passed = hits.iter().map(|h| h.m).eq(expected.iter().copied()) && hits.iter().all(|h| h.equals_tm);
    Ok(Theorem3Report {
        version: VERSION,
        m_max,
        horizon: SWEEP_HORIZON,
        cells: m_max,
        hits,
        expected,
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem6Hit {
    pub m: usize,
    pub r: usize,
    /// Obtained by reflecting the hit at `(m, m - r)` and re-forced.
    pub reflected: bool,
    pub matches_chen_lev: bool,
    pub c: IntSet,
    pub d: IntSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem6Report {
    pub version: &'static str,
    pub m_max: usize,
    pub horizon: &'static str,
    pub symmetric: bool,
    /// Number of `(m, r)` cells actually forced.
    pub cells: usize,
    pub hits: Vec<Theorem6Hit>,
    /// Reflected hits that forcing did not reproduce, as `(m, r)`.
    pub reflection_failures: Vec<(usize, usize)>,
    pub expected: Vec<(usize, usize)>,
    pub passed: bool,
}

pub fn classify_theorem6(m_max: usize) -> Result<Theorem6Report> {
    classify_theorem6_with(m_max, Exec::default(), true)
}

/// Force every single-point overlap `{r}`, `0 < r <= m <= m_max`.
///
/// With `symmetric`, only `r <= m/2` and `r = m` are forced; each hit with
/// `2r != m` is reflected to `(m, m - r)` and confirmed by forcing again.
pub fn classify_theorem6_with(m_max: usize, exec: Exec, symmetric: bool) -> Result<Theorem6Report> {
    if m_max == 0 {
        return Err(invalid("m_max must be positive"));
    }
    let cells: Vec<(usize, usize)> = (1..=m_max)
        .flat_map(|m| {
            let rs: Vec<usize> = if symmetric {
                (1..=m / 2).chain(std::iter::once(m)).collect()
            } else {
                (1..=m).collect()
            };
            rs.into_iter().map(move |r| (m, r))
        })
        .collect();
    let outcomes = exec.map_items(&cells, |&(m, r)| {
        let spec = IntersectionSpec::finite(vec![r])?;
        forced_extension(m, &spec, 2 * m)
    });

    let mut found = Vec::new();
    for (&(m, r), out) in cells.iter().zip(outcomes) {
        if let Some(pair) = out?.into_pair() {
            found.push((m, r, false, pair));
        }
    }
    let mut reflection_failures = Vec::new();
    if symmetric {
        let mirrored: Vec<_> = found
            .iter()
            .filter(|(m, r, _, _)| 2 * r != *m && r != m)
            .cloned()
            .collect();
        for (m, r, _, pair) in mirrored {
            let image = pair.reflected()?;
            let spec = IntersectionSpec::finite(vec![m - r])?;
            match forced_extension(m, &spec, 2 * m)?.into_pair() {
                Some(p) if p == image => found.push((m, m - r, true, p)),
                _ => reflection_failures.push((m, m - r)),
            }
        }
    }
    found.sort_by_key(|(m, r, _, _)| (*m, *r));

    let mut hits = Vec::with_capacity(found.len());
    for (m, r, reflected, pair) in found {
        let matches_chen_lev = chen_lev_level(m, r).map(chen_lev_pair).transpose()?.as_ref() == Some(&pair);
        let (c, d) = pair.into_sets();
        hits.push(Theorem6Hit {
            m,
            r,
            reflected,
            matches_chen_lev,
            c,
            d,
        });
    }
    let expected: Vec<(usize, usize)> = (1..=crate::constructions::MAX_CHEN_LEV_LEVEL)
        .map(chen_lev_parameters)
        .take_while(|&(m, _)| m <= m_max)
        .collect();
    let passed = reflection_failures.is_empty()
        && hits.iter().map(|h| (h.m, h.r)).eq(expected.iter().copied())
        && hits.iter().all(|h| h.matches_chen_lev);
    Ok(Theorem6Report {
        version: VERSION,
        m_max,
        horizon: SWEEP_HORIZON,
        symmetric,
        cells: cells.len(),
        hits,
        reflection_failures,
        expected,
        passed,
    })
}

/// `l` with `(m, r) = (2^{2l+1} - 2, 2^{2l} - 1)`, if any.
fn chen_lev_level(m: usize, r: usize) -> Option<u32> {
    (1..=crate::constructions::MAX_CHEN_LEV_LEVEL)
        .map(|l| (l, chen_lev_parameters(l)))
        .take_while(|(_, (pm, _))| *pm <= m)
        .find(|(_, p)| *p == (m, r))
        .map(|(l, _)| l)
}

/// Least `n ∈ (m, 2m)` with `R_{A ∩ [0,m]}(n) != R_{B ∩ [0,m]}(n)`.
///
/// Rejects `m = 2^l - 1`, where the truncated counts agree everywhere.
pub fn corollary1_witness(m: usize) -> Result<Option<usize>> {
    corollary1_witness_with(m, Exec::default())
}

pub fn corollary1_witness_with(m: usize, exec: Exec) -> Result<Option<usize>> {
    if m == 0 {
        return Err(invalid("m must be positive"));
    }
    if let Some(l) = mersenne_level(m) {
        return Err(invalid(format!("m = {m} = 2^{l} - 1 has no witness")));
    }
    let (a, b) = (evil_prefix(m), odious_prefix(m));
    Ok(first_mismatch_in(&a, &b, m + 1, 2 * m - 1, exec))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary1Row {
    pub m: usize,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary1Report {
    pub version: &'static str,
    pub m_max: usize,
    /// One row per `m <= m_max` not of the form `2^l - 1`.
    pub rows: Vec<Corollary1Row>,
    /// `m` whose witness is missing.
    pub failures: Vec<usize>,
    pub passed: bool,
}

pub fn corollary1_sweep(m_max: usize) -> Result<Corollary1Report> {
    corollary1_sweep_with(m_max, Exec::default())
}

/// Cells run in parallel; each search inside a cell runs sequentially.
pub fn corollary1_sweep_with(m_max: usize, exec: Exec) -> Result<Corollary1Report> {
    if m_max == 0 {
        return Err(invalid("m_max must be positive"));
    }
    let ms: Vec<usize> = (1..=m_max).filter(|&m| mersenne_level(m).is_none()).collect();
    let rows = exec
        .map_items(&ms, |&m| {
            corollary1_witness_with(m, Exec::Sequential).map(|witness| Corollary1Row { m, witness })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let failures: Vec<usize> = rows
        .iter()
        .filter(|row| !matches!(row.witness, Some(n) if row.m < n && n < 2 * row.m))
        .map(|row| row.m)
        .collect();
    Ok(Corollary1Report {
        version: VERSION,
        m_max,
        passed: failures.is_empty(),
        rows,
        failures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim34Hit {
    #[serde(rename = "M")]
    pub big_m: usize,
    pub u: u32,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim34Report {
    pub version: &'static str,
    #[serde(rename = "M_max")]
    pub big_m_max: usize,
    /// `M` for which `M - 2^i`, `0 <= i <= u = ⌊log₂ M⌋`, all share one side.
    pub hits: Vec<Claim34Hit>,
    /// Hits with `M != 2^{u+1} - 1`.
    pub violations: Vec<usize>,
    pub passed: bool,
}

/// Side shared by all of `M - 1, M - 2, …, M - 2^u`, `u = ⌊log₂ M⌋`.
pub fn claim34_side(big_m: usize) -> Option<Side> {
    let u = big_m.ilog2();
    let mut evil = (0..=u).map(|i| is_evil(big_m - (1 << i)));
    let first = evil.next()?;
    evil.all(|e| e == first)
        .then_some(if first { Side::A } else { Side::B })
}

pub fn claim34_check(big_m_max: usize) -> Result<Claim34Report> {
    if big_m_max == 0 {
        return Err(invalid("M_max must be positive"));
    }
    let hits: Vec<Claim34Hit> = (1..=big_m_max)
        .filter_map(|big_m| {
            claim34_side(big_m).map(|side| Claim34Hit {
                big_m,
                u: big_m.ilog2(),
                side,
            })
        })
        .collect();
    let violations: Vec<usize> = hits
        .iter()
        .filter(|h| h.big_m != (1 << (h.u + 1)) - 1)
        .map(|h| h.big_m)
        .collect();
    Ok(Claim34Report {
        version: VERSION,
        big_m_max,
        passed: violations.is_empty(),
        hits,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem3_small() {
        let report = classify_theorem3(16).unwrap();
        assert!(report.passed);
        assert_eq!(report.hits.iter().map(|h| h.m).collect::<Vec<_>>(), [1, 3, 7, 15]);
        let h15 = &report.hits[3];
        assert_eq!(h15.level, Some(4));
        assert_eq!(h15.c, evil_set(4).unwrap());
    }

    #[test]
    fn theorem6_small() {
        let report = classify_theorem6(40).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(
            report.hits.iter().map(|h| (h.m, h.r)).collect::<Vec<_>>(),
            [(6, 3), (30, 15)]
        );
        assert_eq!(report.hits[0].c, *chen_lev_pair(1).unwrap().c());
        let spec = IntersectionSpec::finite(vec![2]).unwrap();
        assert!(!forced_extension(6, &spec, 12).unwrap().is_unique());
    }

    #[test]
    fn theorem6_symmetric_matches_full() {
        for exec in [Exec::Sequential, Exec::default()] {
            let sym = classify_theorem6_with(64, exec, true).unwrap();
            let full = classify_theorem6_with(64, exec, false).unwrap();
            assert_eq!(
                sym.hits.iter().map(|h| (h.m, h.r, &h.c)).collect::<Vec<_>>(),
                full.hits.iter().map(|h| (h.m, h.r, &h.c)).collect::<Vec<_>>()
            );
            assert!(sym.cells < full.cells);
        }
    }

    #[test]
    fn corollary1_examples() {
        assert_eq!(corollary1_witness(4).unwrap(), Some(5));
        let w = corollary1_witness(5).unwrap().unwrap();
        assert!(5 < w && w < 10);
        assert!(corollary1_witness(7).is_err());
        let report = corollary1_sweep(256).unwrap();
        assert!(report.passed);
        assert_eq!(report.rows.len(), 256 - 8);
    }

    #[test]
    fn claim34_examples() {
        assert_eq!(claim34_side(7), Some(Side::A));
        assert_eq!(claim34_side(6), None);
        assert_eq!(claim34_side(1), Some(Side::A));
        let report = claim34_check(1 << 10).unwrap();
        assert!(report.passed);
        assert_eq!(
            report.hits.iter().map(|h| h.big_m).collect::<Vec<_>>(),
            (1..=10).map(|k| (1usize << k) - 1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn exec_modes_agree() {
        assert_eq!(
            classify_theorem3_with(100, Exec::Sequential).unwrap(),
            classify_theorem3_with(100, Exec::default()).unwrap()
        );
        assert_eq!(
            corollary1_sweep_with(200, Exec::Sequential).unwrap(),
            corollary1_sweep_with(200, Exec::default()).unwrap()
        );
    }
}
