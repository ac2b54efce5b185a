mod common;

use std::collections::BTreeMap;

use common::system;
use fuzzy_labeling::fixtures::{fas, id, labeling};
use fuzzy_labeling::postulates::{check_profile, PostulateId};
use fuzzy_labeling::semantics::{
    characteristic_values, enumerate_complete, enumerate_members, grounded_fixpoint, grounded_fixpoint_with_rounds,
    ideal, select_extremal,
};
use fuzzy_labeling::{
    is_labeling, leq_labeling, solve, Degree, Fas, FuzzyLabeling, LabelingSet, Limits, SemanticsId, Triple,
};
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

fn passes(f: &Fas, l: &FuzzyLabeling, s: SemanticsId) -> bool {
    check_profile(f, l, s.profile()).unwrap().values().all(|r| r.satisfied)
}

/// Every grid pair (a, r) per argument, filtered by the complete profile.
fn brute_force_complete(f: &Fas) -> LabelingSet {
    let grid = characteristic_values(f);
    let values = grid.values();
    let names: Vec<_> = f.arguments().map(|(n, _)| n.clone()).collect();
    let pairs: Vec<(Degree, Degree)> = values
        .iter()
        .flat_map(|a| values.iter().map(move |r| (*a, *r)))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; names.len()];
    loop {
        let lab: Option<FuzzyLabeling> = names
            .iter()
            .zip(&idx)
            .map(|(n, &k)| Triple::residual(pairs[k].0, pairs[k].1).map(|t| (n.clone(), t)))
            .collect();
        if let Some(lab) = lab {
            if passes(f, &lab, SemanticsId::Complete) {
                out.push(lab);
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out.into_iter().collect();
            }
            idx[pos] += 1;
            if idx[pos] < pairs.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn subset(a: &LabelingSet, b: &LabelingSet) -> bool {
    a.iter().all(|l| b.contains(l))
}

fn extremal_by(
    set: &LabelingSet,
    key: impl Fn(&FuzzyLabeling) -> fuzzy_labeling::FuzzySet,
    maximal: bool,
) -> LabelingSet {
    set.iter()
        .filter(|l| {
            !set.iter().any(|m| {
                let (x, y) = (key(l), key(m));
                x != y && if maximal { x.is_subset(&y) } else { y.is_subset(&x) }
            })
        })
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_matches_brute_force_tenths(f in system(2, 10)) {
        prop_assert_eq!(enumerate_complete(&f, &limits()).unwrap(), brute_force_complete(&f));
    }

    #[test]
    fn enumeration_matches_brute_force_quarters(f in system(3, 4)) {
        prop_assert_eq!(enumerate_complete(&f, &limits()).unwrap(), brute_force_complete(&f));
    }

    #[test]
    fn fixpoint_is_the_least_complete_labeling(f in system(4, 10)) {
        let (g, rounds) = grounded_fixpoint_with_rounds(&f);
        prop_assert!(passes(&f, &g, SemanticsId::Complete));
        let complete = enumerate_complete(&f, &limits()).unwrap();
        prop_assert!(complete.contains(&g));
        for l in &complete {
            prop_assert!(leq_labeling(&g, l).unwrap());
        }
        let by_enumeration = select_extremal(&f, SemanticsId::Grounded, &limits()).unwrap();
        prop_assert_eq!(by_enumeration.as_slice(), std::slice::from_ref(&g));
        prop_assert!(rounds <= characteristic_values(&f).len() * f.len() + 1);
    }

    #[test]
    fn inclusion_chain(f in system(4, 10)) {
        let l = limits();
        let complete = solve(&f, SemanticsId::Complete, &l).unwrap();
        let preferred = solve(&f, SemanticsId::Preferred, &l).unwrap();
        let semi = solve(&f, SemanticsId::SemiStable, &l).unwrap();
        let stable = solve(&f, SemanticsId::Stable, &l).unwrap();
        prop_assert!(subset(&stable, &semi));
        prop_assert!(subset(&semi, &preferred));
        prop_assert!(subset(&preferred, &complete));
        prop_assert!(subset(&solve(&f, SemanticsId::Grounded, &l).unwrap(), &complete));
        prop_assert!(subset(&solve(&f, SemanticsId::Ideal, &l).unwrap(), &complete));
        for lab in &complete {
            prop_assert!(passes(&f, lab, SemanticsId::JvAdmissible));
            prop_assert!(passes(&f, lab, SemanticsId::VjAdmissible));
        }
        for lab in &stable {
            prop_assert!(lab.iter().all(|(_, t)| t.undec.is_zero()));
        }
    }

    #[test]
    fn profile_hierarchy(f in system(3, 4)) {
        let l = limits();
        for s in [SemanticsId::JvAdmissible, SemanticsId::VjAdmissible] {
            for lab in &enumerate_members(&f, s, &l).unwrap() {
                prop_assert!(passes(&f, lab, SemanticsId::Admissible));
            }
        }
        for lab in &enumerate_members(&f, SemanticsId::Admissible, &l).unwrap() {
            prop_assert!(passes(&f, lab, SemanticsId::ConflictFree));
        }
    }

    #[test]
    fn acceptability_and_rejectability_order_agree(f in system(4, 10)) {
        let complete = enumerate_complete(&f, &limits()).unwrap();
        for x in &complete {
            for y in &complete {
                prop_assert_eq!(
                    x.acceptability().is_subset(&y.acceptability()),
                    x.rejectability().is_subset(&y.rejectability())
                );
            }
        }
    }

    #[test]
    fn extremal_parts_agree(f in system(4, 10)) {
        let l = limits();
        let complete = enumerate_complete(&f, &l).unwrap();
        let grounded = solve(&f, SemanticsId::Grounded, &l).unwrap();
        let preferred = solve(&f, SemanticsId::Preferred, &l).unwrap();
        prop_assert_eq!(&extremal_by(&complete, FuzzyLabeling::acceptability, false), &grounded);
        prop_assert_eq!(&extremal_by(&complete, FuzzyLabeling::rejectability, false), &grounded);
        prop_assert_eq!(&extremal_by(&complete, FuzzyLabeling::acceptability, true), &preferred);
        prop_assert_eq!(&extremal_by(&complete, FuzzyLabeling::rejectability, true), &preferred);
    }

    #[test]
    fn ideal_is_a_single_labeling(f in system(4, 10)) {
        let set = ideal(&f, &limits()).unwrap();
        prop_assert_eq!(set.len(), 1);
        let g = grounded_fixpoint(&f);
        prop_assert!(leq_labeling(&g, &set.as_slice()[0]).unwrap());
    }

    #[test]
    fn semantics_ignore_argument_names(f in system(3, 10), shift in 0usize..3) {
        let ids: Vec<_> = f.argument_ids().into_iter().collect();
        let n = ids.len();
        let forward: BTreeMap<_, _> = ids
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), id(&format!("y{}", (i + shift) % n))))
            .collect();
        let image = f.apply_isomorphism(&forward).unwrap();
        for s in SemanticsId::ALL {
            let here: LabelingSet = solve(&f, s, &limits()).unwrap().iter().map(|l| l.rename(&forward)).collect();
            prop_assert_eq!(here, solve(&image, s, &limits()).unwrap(), "{}", s);
        }
    }

    #[test]
    fn membership_agrees_with_solving(f in system(3, 4)) {
        let l = limits();
        for s in SemanticsId::ALL {
            let set = solve(&f, s, &l).unwrap();
            for lab in &set {
                prop_assert!(is_labeling(&f, lab, s, &l).unwrap(), "{}", s);
            }
        }
    }

    #[test]
    fn solving_is_repeatable(f in system(4, 10)) {
        for s in SemanticsId::ALL {
            prop_assert_eq!(solve(&f, s, &limits()).unwrap(), solve(&f, s, &limits()).unwrap());
        }
    }
}

/// On an odd cycle the grid misses complete labelings that dominate every
/// grid labeling, so grid-relative preferred can differ from the continuum.
#[test]
fn odd_cycle_has_off_grid_complete_labeling() {
    let f = fas(
        &[("A", "1"), ("B", "1"), ("C", "1")],
        &[("A", "B", "1"), ("B", "C", "1"), ("C", "A", "1")],
    );
    let half = labeling(&[
        ("A", "0.5", "0.5", "0"),
        ("B", "0.5", "0.5", "0"),
        ("C", "0.5", "0.5", "0"),
    ]);
    assert!(passes(&f, &half, SemanticsId::Complete));
    let grid_preferred = solve(&f, SemanticsId::Preferred, &limits()).unwrap();
    assert_eq!(grid_preferred.as_slice(), [FuzzyLabeling::all_undecided(&f)]);
    assert!(leq_labeling(&grid_preferred.as_slice()[0], &half).unwrap());
    assert!(!is_labeling(&f, &half, SemanticsId::Preferred, &limits()).unwrap());
}

#[test]
fn profiles_are_named_postulates() {
    assert_eq!(
        SemanticsId::VjAdmissible.profile(),
        [
            PostulateId::Bounded,
            PostulateId::Residual,
            PostulateId::Weakened,
            PostulateId::StrictDefense
        ]
    );
}
