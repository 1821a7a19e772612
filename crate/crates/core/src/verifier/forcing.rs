//! Deterministic reconstruction of the only candidate pair for a given `m`
//! and overlap prescription.
//!
//! With `0 ∈ C \ D`, at step `v` every pair of `D` summing to `v` lies below
//! `v`, while `C` gains exactly the pair `(0, v)` if `v ∈ C`. So
//! `χ_C(v) = R_D(v) - R_C^{<v}(v)` is forced, and `χ_D(v)` follows from the
//! cover and overlap rules.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::sets::{IntSet, IntersectionKind, IntersectionSpec, PartitionPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Contradiction {
    /// `R_D(v) - R_C^{<v}(v)` fell outside `{0, 1}`.
    ForcedValue { value: i64 },
    /// `v` is prescribed in `C ∩ D` but forcing excludes it from `C`.
    IntersectionConflict,
    /// Forcing completed but `R_C(n) != R_D(n)` for some `m < n <= horizon`.
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ForcingOutcome {
    Unique {
        pair: PartitionPair,
    },
    Contradiction {
        failure_index: usize,
        reason: Contradiction,
    },
}

impl ForcingOutcome {
    pub fn is_unique(&self) -> bool {
        matches!(self, ForcingOutcome::Unique { .. })
    }

    pub fn pair(&self) -> Option<&PartitionPair> {
        match self {
            ForcingOutcome::Unique { pair } => Some(pair),
            ForcingOutcome::Contradiction { .. } => None,
        }
    }

    pub fn into_pair(self) -> Option<PartitionPair> {
        match self {
            ForcingOutcome::Unique { pair } => Some(pair),
            ForcingOutcome::Contradiction { .. } => None,
        }
    }

    pub fn failure_index(&self) -> Option<usize> {
        match self {
            ForcingOutcome::Unique { .. } => None,
            ForcingOutcome::Contradiction { failure_index, .. } => Some(*failure_index),
        }
    }
}

/// Check that `spec` fits `(0, m]` and return its materialization over `[0, m]`.
pub(crate) fn overlap_within(m: usize, spec: &IntersectionSpec) -> Result<IntSet> {
    match spec.kind() {
        IntersectionKind::Finite { elements } => {
            if let Some(&r) = elements.iter().find(|&&r| r > m) {
                return Err(invalid(format!("overlap element {r} lies outside (0, {m}]")));
            }
        }
        IntersectionKind::Periodic { offset, .. } => {
            if *offset == 0 {
                return Err(invalid("forcing needs 0 ∉ D; the overlap may not contain 0"));
            }
        }
    }
    Ok(spec.materialize(m))
}

/// Force the unique candidate over `[0, m]`, then confirm `R_C = R_D` up to `horizon`.
pub fn forced_extension(m: usize, spec: &IntersectionSpec, horizon: usize) -> Result<ForcingOutcome> {
    if m == 0 {
        return Err(invalid("m must be positive"));
    }
    if horizon < m {
        return Err(invalid(format!("horizon {horizon} is below m = {m}")));
    }
    let overlap = overlap_within(m, spec)?;

    // rc[n], rd[n]: pairs counted so far; every pair is added when its larger element arrives.
    let mut rc = vec![0u32; 2 * m + 1];
    let mut rd = vec![0u32; 2 * m + 1];
    let mut c_members = vec![0usize];
    let mut d_members: Vec<usize> = Vec::new();
    let mut c = IntSet::new(m);
    let mut d = IntSet::new(m);
    c.insert(0);

    fn add(counts: &mut [u32], members: &mut Vec<usize>, v: usize) {
        let row = &mut counts[v..];
        for &x in members.iter() {
            row[x] += 1;
        }
        members.push(v);
    }

    for v in 1..=m {
        let forced = rd[v] as i64 - rc[v] as i64;
        if forced != 0 && forced != 1 {
            return Ok(ForcingOutcome::Contradiction {
                failure_index: v,
                reason: Contradiction::ForcedValue { value: forced },
            });
        }
        let in_c = forced == 1;
        let shared = overlap.contains(v);
        if shared && !in_c {
            return Ok(ForcingOutcome::Contradiction {
                failure_index: v,
                reason: Contradiction::IntersectionConflict,
            });
        }
        if in_c {
            add(&mut rc, &mut c_members, v);
            c.insert(v);
        }
        if shared || !in_c {
            add(&mut rd, &mut d_members, v);
            d.insert(v);
        }
    }

    // Both counts vanish beyond 2m.
    let last = horizon.min(2 * m);
    if let Some(n) = (m + 1..=last).find(|&n| rc[n] != rd[n]) {
        return Ok(ForcingOutcome::Contradiction {
            failure_index: n,
            reason: Contradiction::Mismatch,
        });
    }
    let pair = PartitionPair::new(c, d, m, spec.clone())?;
    Ok(ForcingOutcome::Unique { pair })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chen_lev_pair;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    fn finite(r: &[usize]) -> IntersectionSpec {
        IntersectionSpec::finite(r.to_vec()).unwrap()
    }

    #[test]
    fn forcing_examples() {
        let out = forced_extension(3, &IntersectionSpec::empty(), 6).unwrap();
        let pair = out.pair().unwrap();
        assert_eq!((pair.c(), pair.d()), (&set("0,3"), &set("1,2")));

        let out = forced_extension(6, &finite(&[3]), 12).unwrap();
        assert_eq!(out.pair().unwrap(), &chen_lev_pair(1).unwrap());

        let out = forced_extension(4, &IntersectionSpec::empty(), 8).unwrap();
        assert!(!out.is_unique());
    }

    #[test]
    fn contradiction_reasons() {
        // Prefix {0,3} / {1,2} is forced; 4 must go to D, making R_D(5) = 1 via (1,4)
        // against R_C(5) = 0.
        let out = forced_extension(4, &IntersectionSpec::empty(), 8).unwrap();
        assert_eq!(
            out,
            ForcingOutcome::Contradiction {
                failure_index: 5,
                reason: Contradiction::Mismatch
            }
        );
        // v = 1 is forced into D (R_D(1) = 0, no partial pairs), so prescribing 1 ∈ C ∩ D fails.
        let out = forced_extension(5, &finite(&[1]), 10).unwrap();
        assert_eq!(
            out,
            ForcingOutcome::Contradiction {
                failure_index: 1,
                reason: Contradiction::IntersectionConflict
            }
        );
    }

    #[test]
    fn mismatch_beyond_horizon_is_ignored() {
        // Forcing never fails on [0, m]; the m = 4 failure sits at n = 5.
        let out = forced_extension(4, &IntersectionSpec::empty(), 4).unwrap();
        assert!(out.is_unique());
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(forced_extension(0, &IntersectionSpec::empty(), 0).is_err());
        assert!(forced_extension(6, &finite(&[7]), 12).is_err());
        assert!(forced_extension(6, &finite(&[3]), 5).is_err());
        let zero_periodic = IntersectionSpec::periodic(0, 4).unwrap();
        assert!(forced_extension(6, &zero_periodic, 12).is_err());
    }

    #[test]
    fn periodic_overlap_matches_lift() {
        let lifted = crate::constructions::lift_chen_lev(1, 4).unwrap();
        let spec = IntersectionSpec::periodic(3, 7).unwrap();
        let out = forced_extension(27, &spec, 27).unwrap();
        assert_eq!(out.pair().unwrap(), &lifted);
    }

    #[test]
    fn outcome_json_shape() {
        let out = forced_extension(4, &IntersectionSpec::empty(), 8).unwrap();
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"status":"contradiction","failure_index":5,"reason":{"kind":"mismatch"}}"#
        );
    }
}
