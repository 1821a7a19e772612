use proptest::prelude::*;

use samerep::repfn::first_mismatch;
use samerep::sets::IntersectionSpec;
use samerep::verifier::{
    classify_theorem3, classify_theorem6, exhaustive_search, forced_extension, DEFAULT_BRUTE_FORCE_CAP,
};

fn specs_up_to_two(m: usize) -> Vec<IntersectionSpec> {
    let mut out = vec![IntersectionSpec::empty()];
    for r1 in 1..=m {
        out.push(IntersectionSpec::finite(vec![r1]).unwrap());
        for r2 in r1 + 1..=m {
            out.push(IntersectionSpec::finite(vec![r1, r2]).unwrap());
        }
    }
    out
}

#[test]
fn forcing_agrees_with_brute_force_for_small_specs() {
    for m in 1..=18 {
        for spec in specs_up_to_two(m) {
            let forced = forced_extension(m, &spec, 2 * m).unwrap();
            let brute = exhaustive_search(m, &spec, 2 * m, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            assert!(brute.len() <= 1, "m={m} {spec}: {} survivors", brute.len());
            assert_eq!(forced.pair(), brute.first(), "m={m} {spec}");
        }
    }
}

#[test]
fn survivors_satisfy_equality_everywhere() {
    for m in 1..=40 {
        for spec in specs_up_to_two(m.min(12)) {
            if let Some(pair) = forced_extension(m, &spec, 2 * m).unwrap().into_pair() {
                assert_eq!(first_mismatch(pair.c(), pair.d(), 4 * m), None);
                assert_eq!(pair.overlap(), spec.materialize(m));
            }
        }
    }
}

#[test]
fn reflection_closure() {
    for m in 2..=64 {
        for r in 1..m {
            let spec = IntersectionSpec::finite(vec![r]).unwrap();
            let Some(pair) = forced_extension(m, &spec, 2 * m).unwrap().into_pair() else {
                continue;
            };
            let image = pair.reflected().unwrap();
            let mirror = IntersectionSpec::finite(vec![m - r]).unwrap();
            let again = forced_extension(m, &mirror, 2 * m).unwrap();
            assert_eq!(again.pair(), Some(&image), "m={m} r={r}");
        }
    }
}

#[test]
fn sweeps_are_horizon_invariant() {
    let thm3 = classify_theorem3(40).unwrap();
    let thm6 = classify_theorem6(40).unwrap();
    for m in 1..=40 {
        for spec in [IntersectionSpec::empty()]
            .into_iter()
            .chain((1..=m).map(|r| IntersectionSpec::finite(vec![r]).unwrap()))
        {
            let base = forced_extension(m, &spec, 2 * m).unwrap();
            for horizon in [2 * m + 1, 3 * m, 10 * m] {
                assert_eq!(forced_extension(m, &spec, horizon).unwrap(), base);
            }
        }
    }
    assert!(thm3.passed && thm6.passed);
    for m in [5, 6, 7, 9] {
        let spec = IntersectionSpec::finite(vec![3]).unwrap();
        assert_eq!(
            exhaustive_search(m, &spec, 2 * m, DEFAULT_BRUTE_FORCE_CAP).unwrap(),
            exhaustive_search(m, &spec, 5 * m, DEFAULT_BRUTE_FORCE_CAP).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn brute_force_never_finds_two(m in 1usize..=14, raw in proptest::collection::btree_set(1usize..=14, 1..=3)) {
        let elements: Vec<usize> = raw.into_iter().filter(|&r| r <= m).collect();
        prop_assume!(!elements.is_empty());
        let spec = IntersectionSpec::finite(elements).unwrap();
        let brute = exhaustive_search(m, &spec, 2 * m, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        prop_assert!(brute.len() <= 1);
        let forced = forced_extension(m, &spec, 2 * m).unwrap();
        prop_assert_eq!(forced.pair(), brute.first());
    }
}
