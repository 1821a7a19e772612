//! Seeded generating-function and lifting campaigns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{chen_lev_pair, lift_chen_lev, MAX_CHEN_LEV_LEVEL};
use crate::error::{invalid, Result};
use crate::genfun::{coefficient_relations_check, eq3_partner, eq4_check, eq5_residual};
use crate::repfn::first_mismatch;
use crate::sets::{IntSet, IntersectionSpec};
use crate::VERSION;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq4Failure {
    pub trial: usize,
    pub set: IntSet,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq4Report {
    pub version: &'static str,
    pub count: usize,
    pub max_bound: usize,
    pub seed: u64,
    pub failures: Vec<Eq4Failure>,
    pub passed: bool,
}

/// `count` random sets, each over `[0, b]` with `b` uniform in `[0, max_bound]`
/// and every point kept with probability 1/2.
pub fn eq4_campaign(count: usize, max_bound: usize, seed: u64) -> Result<Eq4Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..count {
        let bound = rng.random_range(0..=max_bound);
        let members: Vec<usize> = (0..=bound).filter(|_| rng.random_bool(0.5)).collect();
        let set = IntSet::from_members(bound, members)?;
        if let Some(k) = eq4_check(&set, 2 * bound) {
            failures.push(Eq4Failure { trial, set, k });
        }
    }
    Ok(Eq4Report {
        version: VERSION,
        count,
        max_bound,
        seed,
        passed: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq5Base {
    pub l: u32,
    pub m: usize,
    pub r: usize,
    pub residual_zero: bool,
    pub relations_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq5Perturbation {
    /// Point of `C` toggled.
    pub position: usize,
    pub residual_terms: usize,
    /// First unequal count of the toggled `C` against its partner set.
    pub first_mismatch: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq5Report {
    pub version: &'static str,
    pub l_max: u32,
    pub seed: u64,
    pub bases: Vec<Eq5Base>,
    pub perturbations: Vec<Eq5Perturbation>,
    /// Only `m + 1` toggles exist, so draws repeat.
    pub distinct_positions: usize,
    pub passed: bool,
}

/// Residual of each `chen_lev_pair(1..=l_max)` plus `perturbations` seeded
/// single-point toggles of `chen_lev_pair(1)`.
pub fn eq5_campaign(l_max: u32, perturbations: usize, seed: u64) -> Result<Eq5Report> {
    if l_max == 0 || l_max > MAX_CHEN_LEV_LEVEL {
        return Err(invalid(format!("l_max = {l_max} outside 1..={MAX_CHEN_LEV_LEVEL}")));
    }
    let mut bases = Vec::new();
    for l in 1..=l_max {
        let pair = chen_lev_pair(l)?;
        let r = pair.overlap().min().expect("single overlap point");
        bases.push(Eq5Base {
            l,
            m: pair.m(),
            r,
            residual_zero: eq5_residual(pair.c(), pair.m(), r)?.is_zero(),
            relations_hold: coefficient_relations_check(pair.c(), pair.m(), r)?.holds(),
        });
    }

    let base = chen_lev_pair(1)?;
    let (m, r) = (base.m(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = vec![false; m + 1];
    let mut rows = Vec::with_capacity(perturbations);
    for _ in 0..perturbations {
        let position = rng.random_range(0..=m);
        seen[position] = true;
        let mut c = base.c().clone();
        c.toggle(position);
        let residual = eq5_residual(&c, m, r)?;
        let d = eq3_partner(&c, m, r);
        rows.push(Eq5Perturbation {
            position,
            residual_terms: residual.nonzero_terms().len(),
            first_mismatch: first_mismatch(&c, &d, 2 * m),
        });
    }
    let passed = bases.iter().all(|b| b.residual_zero && b.relations_hold)
        && rows.iter().all(|p| p.residual_terms > 0 && p.first_mismatch.is_some());
    Ok(Eq5Report {
        version: VERSION,
        l_max,
        seed,
        bases,
        perturbations: rows,
        distinct_positions: seen.iter().filter(|&&s| s).count(),
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Row {
    pub l: u32,
    pub m: usize,
    pub r: usize,
    pub universe_max: usize,
    pub covers: bool,
    pub overlap_matches: bool,
    pub first_mismatch: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub version: &'static str,
    pub l_max: u32,
    pub blocks: usize,
    pub rows: Vec<Lemma1Row>,
    pub passed: bool,
}

/// Lift `chen_lev_pair(l)` to `blocks` blocks for each `l <= l_max` and
/// re-check cover, overlap and equality independently of the construction.
pub fn lemma1_campaign(l_max: u32, blocks: usize) -> Result<Lemma1Report> {
    if l_max == 0 || l_max > MAX_CHEN_LEV_LEVEL {
        return Err(invalid(format!("l_max = {l_max} outside 1..={MAX_CHEN_LEV_LEVEL}")));
    }
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let base = chen_lev_pair(l)?;
        let (m, r) = (base.m(), base.overlap().min().expect("single overlap point"));
        let lifted = lift_chen_lev(l, blocks)?;
        let top = blocks * (m + 1) - 1;
        let (c, d) = (lifted.c(), lifted.d());
        let expected = IntersectionSpec::periodic(r, m + 1)?.materialize(top);
        rows.push(Lemma1Row {
            l,
            m,
            r,
            universe_max: top,
            covers: c.union(d) == IntSet::interval(top),
            overlap_matches: c.intersection(d) == expected,
            first_mismatch: first_mismatch(c, d, 2 * top),
        });
    }
    Ok(Lemma1Report {
        version: VERSION,
        l_max,
        blocks,
        passed: rows
            .iter()
            .all(|r| r.covers && r.overlap_matches && r.first_mismatch.is_none()),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq4_campaign_is_seeded() {
        let a = eq4_campaign(50, 64, 7).unwrap();
        assert!(a.passed);
        assert_eq!(a, eq4_campaign(50, 64, 7).unwrap());
    }

    #[test]
    fn eq5_campaign_small() {
        let report = eq5_campaign(2, 30, DEFAULT_SEED).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.distinct_positions <= 7);
    }

    #[test]
    fn lemma1_campaign_small() {
        let report = lemma1_campaign(2, 8).unwrap();
        assert!(report.passed);
        assert_eq!(report.rows[0].universe_max, 55);
    }
}
