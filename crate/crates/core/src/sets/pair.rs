use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::IntSet;
use crate::error::{invalid, precondition, Error, Result};

/// Prescribed shape of `C ∩ D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IntersectionKind {
    /// `{r_1 < … < r_s}` with `r_1 > 0`.
    Finite { elements: Vec<usize> },
    /// `offset + period·ℕ`.
    Periodic { offset: usize, period: usize },
}

/// Validated [`IntersectionKind`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "IntersectionKind", try_from = "IntersectionKind")]
pub struct IntersectionSpec(IntersectionKind);

impl IntersectionSpec {
    pub fn empty() -> Self {
        IntersectionSpec(IntersectionKind::Finite { elements: vec![] })
    }

    pub fn finite(elements: Vec<usize>) -> Result<Self> {
        if elements.first() == Some(&0) {
            return Err(invalid("finite intersection must exclude 0"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("finite intersection must be strictly increasing"));
        }
        Ok(IntersectionSpec(IntersectionKind::Finite { elements }))
    }

    /// `offset + period·ℕ`. `period = 1` is admitted as the degenerate
    /// "every point doubled" pattern.
    pub fn periodic(offset: usize, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(invalid("period must be positive"));
        }
        Ok(IntersectionSpec(IntersectionKind::Periodic { offset, period }))
    }

    pub fn kind(&self) -> &IntersectionKind {
        &self.0
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.0, IntersectionKind::Periodic { .. })
    }

    pub fn contains(&self, n: usize) -> bool {
        match &self.0 {
            IntersectionKind::Finite { elements } => elements.binary_search(&n).is_ok(),
            IntersectionKind::Periodic { offset, period } => n >= *offset && (n - offset).is_multiple_of(*period),
        }
    }

    /// Members within `[0, n_max]`, as a set over that universe.
    pub fn materialize(&self, n_max: usize) -> IntSet {
        let mut out = IntSet::new(n_max);
        match &self.0 {
            IntersectionKind::Finite { elements } => {
                for &r in elements.iter().take_while(|&&r| r <= n_max) {
                    out.insert(r);
                }
            }
            IntersectionKind::Periodic { offset, period } => {
                for r in (*offset..=n_max).step_by(*period) {
                    out.insert(r);
                }
            }
        }
        out
    }

    /// Reflect through `m` (finite kind only): `{m - r_s, …, m - r_1}`.
    pub fn reflect(&self, m: usize) -> Result<Self> {
        match &self.0 {
            IntersectionKind::Finite { elements } => {
                if elements.iter().any(|&r| r > m) {
                    return Err(invalid("intersection element exceeds reflection point"));
                }
                IntersectionSpec::finite(elements.iter().rev().map(|&r| m - r).collect())
            }
            IntersectionKind::Periodic { .. } => Err(invalid("cannot reflect a periodic intersection")),
        }
    }
}

impl From<IntersectionSpec> for IntersectionKind {
    fn from(spec: IntersectionSpec) -> Self {
        spec.0
    }
}

impl TryFrom<IntersectionKind> for IntersectionSpec {
    type Error = Error;

    fn try_from(kind: IntersectionKind) -> Result<Self> {
        match kind {
            IntersectionKind::Finite { elements } => IntersectionSpec::finite(elements),
            IntersectionKind::Periodic { offset, period } => IntersectionSpec::periodic(offset, period),
        }
    }
}

/// `finite:r1,r2,...` or `periodic:r,p`.
impl FromStr for IntersectionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(msg);
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("`{s}`: expected `finite:...` or `periodic:r,p`")))?;
        let numbers = || -> Result<Vec<usize>> {
            body.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("`{t}` is not a nonnegative integer")))
                })
                .collect()
        };
        match kind {
            "finite" => IntersectionSpec::finite(numbers()?).map_err(|e| bad(e.to_string())),
            "periodic" => match numbers()?.as_slice() {
                &[offset, period] => IntersectionSpec::periodic(offset, period).map_err(|e| bad(e.to_string())),
                _ => Err(bad("periodic spec takes exactly `r,p`".into())),
            },
            other => Err(bad(format!("unknown intersection kind `{other}`"))),
        }
    }
}

impl fmt::Display for IntersectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            IntersectionKind::Finite { elements } => {
                let body: Vec<String> = elements.iter().map(|r| r.to_string()).collect();
                write!(f, "finite:{}", body.join(","))
            }
            IntersectionKind::Periodic { offset, period } => write!(f, "periodic:{offset},{period}"),
        }
    }
}

/// Sets `C`, `D` with `C ∪ D = [0, m]`, a prescribed `C ∩ D`, and `0 ∈ C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionPair {
    c: IntSet,
    d: IntSet,
    m: usize,
    intersection: IntersectionSpec,
}

impl PartitionPair {
    /// Validates cover, intersection and the `0 ∈ C` normalization. Pairs
    /// with `0 ∈ D \ C` are rejected, never swapped.
    pub fn new(c: IntSet, d: IntSet, m: usize, intersection: IntersectionSpec) -> Result<Self> {
        let universe = IntSet::interval(m);
        if !c.is_subset(&universe) {
            let bad = c.difference(&universe).min().unwrap();
            return Err(precondition(bad, "C has a member beyond m"));
        }
        if !d.is_subset(&universe) {
            let bad = d.difference(&universe).min().unwrap();
            return Err(precondition(bad, "D has a member beyond m"));
        }
        if !c.contains(0) {
            return Err(precondition(0, "0 must belong to C"));
        }
        if let Some(gap) = universe.difference(&c.union(&d)).min() {
            return Err(precondition(gap, "C ∪ D does not cover [0, m]"));
        }
        let expected = intersection.materialize(m);
        let actual = c.intersection(&d);
        let diff = expected.difference(&actual).union(&actual.difference(&expected));
        if let Some(bad) = diff.min() {
            return Err(precondition(bad, format!("C ∩ D disagrees with {intersection}")));
        }
        Ok(PartitionPair {
            c: c.with_bound(m).expect("checked above"),
            d: d.with_bound(m).expect("checked above"),
            m,
            intersection,
        })
    }

    pub fn c(&self) -> &IntSet {
        &self.c
    }

    pub fn d(&self) -> &IntSet {
        &self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn intersection(&self) -> &IntersectionSpec {
        &self.intersection
    }

    /// `C ∩ D` as a set over `[0, m]`.
    pub fn overlap(&self) -> IntSet {
        self.c.intersection(&self.d)
    }

    pub fn into_sets(self) -> (IntSet, IntSet) {
        (self.c, self.d)
    }

    /// `(m - C, m - D)`, relabelled so that the half containing 0 comes first.
    /// Only defined for finite intersections.
    pub fn reflected(&self) -> Result<PartitionPair> {
        let c = self.c.reflect(self.m)?;
        let d = self.d.reflect(self.m)?;
        let spec = self.intersection.reflect(self.m)?;
        if c.contains(0) {
            PartitionPair::new(c, d, self.m, spec)
        } else {
            PartitionPair::new(d, c, self.m, spec)
        }
    }
}

/// `C=<set> D=<set> r=<C∩D> m=<m>`, `r=` omitted for disjoint pairs.
impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C={} D={}", self.c, self.d)?;
        let overlap = self.overlap();
        if !overlap.is_empty() {
            write!(f, " r={overlap}")?;
        }
        write!(f, " m={}", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    #[test]
    fn finite_spec_validation() {
        assert!(IntersectionSpec::finite(vec![0, 3]).is_err());
        assert!(IntersectionSpec::finite(vec![3, 3]).is_err());
        assert!(IntersectionSpec::finite(vec![5, 3]).is_err());
        assert!(IntersectionSpec::finite(vec![1, 3]).is_ok());
        assert!(IntersectionSpec::periodic(3, 0).is_err());
    }

    #[test]
    fn periodic_materialization() {
        let spec = IntersectionSpec::periodic(3, 7).unwrap();
        assert_eq!(spec.materialize(27).to_vec(), vec![3, 10, 17, 24]);
        assert_eq!(spec.materialize(2).to_vec(), Vec::<usize>::new());
        assert!(spec.contains(24) && !spec.contains(25) && !spec.contains(0));
        let k = IntersectionSpec::periodic(0, 4).unwrap();
        assert_eq!(k.materialize(9).to_vec(), vec![0, 4, 8]);
    }

    #[test]
    fn spec_text_round_trip() {
        for text in ["finite:", "finite:3", "finite:1,4,9", "periodic:3,7", "periodic:0,4"] {
            let spec: IntersectionSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("finite:0".parse::<IntersectionSpec>().is_err());
        assert!("periodic:3".parse::<IntersectionSpec>().is_err());
        assert!("cyclic:3,4".parse::<IntersectionSpec>().is_err());
        assert!("3,4".parse::<IntersectionSpec>().is_err());
    }

    #[test]
    fn spec_json_shape() {
        let spec = IntersectionSpec::periodic(3, 7).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"kind":"periodic","offset":3,"period":7}"#);
        let back: IntersectionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let bad: std::result::Result<IntersectionSpec, _> = serde_json::from_str(r#"{"kind":"finite","elements":[0]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn pair_validation() {
        let r3 = IntersectionSpec::finite(vec![3]).unwrap();
        let ok = PartitionPair::new(set("0,3,4,5"), set("1,2,3,6"), 6, r3.clone()).unwrap();
        assert_eq!(ok.to_string(), "C=0,3,4,5 D=1,2,3,6 r=3 m=6");

        let err = PartitionPair::new(set("0,3,4"), set("1,2,3,6"), 6, r3.clone()).unwrap_err();
        assert_eq!(err, precondition(5, "C ∪ D does not cover [0, m]"));

        // 0 ∈ D only: rejected rather than swapped.
        assert!(PartitionPair::new(set("1,2,3,6"), set("0,3,4,5"), 6, r3.clone()).is_err());

        // Wrong overlap.
        let err = PartitionPair::new(set("0,3,4,5"), set("1,2,3,5,6"), 6, r3).unwrap_err();
        assert!(matches!(err, Error::Precondition { index: 5, .. }));

        // Member beyond m.
        let empty = IntersectionSpec::empty();
        assert!(PartitionPair::new(set("0,3"), set("1,2,9"), 3, empty).is_err());
    }

    #[test]
    fn reflection_renormalizes() {
        let r = IntersectionSpec::finite(vec![1]).unwrap();
        // C={0,1}, D={1,2} over [0,2]; m - D = {0,1} holds 0, so halves swap.
        let pair = PartitionPair::new(set("0,1"), set("1,2"), 2, r).unwrap();
        let refl = pair.reflected().unwrap();
        assert_eq!(refl.c(), &set("0,1"));
        assert_eq!(refl.d(), &set("1,2"));
        assert_eq!(refl.intersection(), &IntersectionSpec::finite(vec![1]).unwrap());
    }
}
