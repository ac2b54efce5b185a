use fuzzy_labeling::classical::{
    af_to_fas, clab_to_flab, enumerate_classical_complete, is_classical_complete, Af, ClassicalLabel, ClassicalLabeling,
};
use fuzzy_labeling::fixtures::id;
use fuzzy_labeling::postulates::check_profile;
use fuzzy_labeling::semantics::enumerate_complete;
use fuzzy_labeling::{Degree, Limits, SemanticsId};
use proptest::prelude::*;

fn af_strategy(max_args: usize) -> impl Strategy<Value = Af> {
    (1..=max_args, 0.0f64..=1.0).prop_flat_map(|(n, density)| {
        proptest::collection::vec(proptest::bool::weighted(density.clamp(0.0, 1.0)), n * n).prop_map(move |bits| {
            let mut af = Af::new();
            for i in 0..n {
                af.add_argument(id(&format!("a{i}"))).unwrap();
            }
            for (k, on) in bits.into_iter().enumerate() {
                if on {
                    af.add_attack(id(&format!("a{}", k / n)), id(&format!("a{}", k % n)))
                        .unwrap();
                }
            }
            af
        })
    })
}

fn labeled(rows: &[(&str, ClassicalLabel)]) -> ClassicalLabeling {
    let mut lab = ClassicalLabeling::new();
    for (n, l) in rows {
        lab.insert(id(n), *l);
    }
    lab
}

fn af(args: &[&str], attacks: &[(&str, &str)]) -> Af {
    let mut af = Af::new();
    for a in args {
        af.add_argument(id(a)).unwrap();
    }
    for (x, y) in attacks {
        af.add_attack(id(x), id(y)).unwrap();
    }
    af
}

fn complete_profile_holds(af: &Af, lab: &ClassicalLabeling) -> bool {
    let flab = clab_to_flab(lab);
    check_profile(&af_to_fas(af), &flab, SemanticsId::Complete.profile())
        .unwrap()
        .values()
        .all(|r| r.satisfied)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn classical_complete_maps_to_fuzzy_complete(af in af_strategy(6)) {
        for lab in enumerate_classical_complete(&af, &Limits::default()).unwrap() {
            prop_assert!(complete_profile_holds(&af, &lab));
        }
    }

    #[test]
    fn classical_images_are_among_grid_complete_labelings(af in af_strategy(4)) {
        let fuzzy = enumerate_complete(&af_to_fas(&af), &Limits::default()).unwrap();
        let classical = enumerate_classical_complete(&af, &Limits::default()).unwrap();
        for lab in &classical {
            prop_assert!(fuzzy.contains(&clab_to_flab(lab)));
        }
        // Over {0, 1} crisp fuzzy labelings are exactly the classical ones.
        let crisp = fuzzy
            .iter()
            .filter(|l| l.iter().all(|(_, t)| [t.accept, t.reject, t.undec].iter().all(|v| *v == Degree::ZERO || *v == Degree::ONE)))
            .count();
        prop_assert_eq!(crisp, classical.len());
    }

    #[test]
    fn embedding_is_faithful(af in af_strategy(6)) {
        let f = af_to_fas(&af);
        prop_assert_eq!(f.len(), af.len());
        for (name, degree) in f.arguments() {
            prop_assert!(af.arguments().any(|a| a == name));
            prop_assert_eq!(degree, Degree::ONE);
        }
        let attacks: Vec<_> = af.attacks().collect();
        prop_assert_eq!(f.attacks().count(), attacks.len());
        for (x, y, w) in f.attacks() {
            prop_assert!(attacks.contains(&(x, y)));
            prop_assert_eq!(w, Degree::ONE);
        }
    }
}

#[test]
fn worked_examples() {
    use ClassicalLabel::*;
    let chain = af(&["A", "B", "C"], &[("A", "B"), ("B", "C")]);
    let grounded = labeled(&[("A", In), ("B", Out), ("C", In)]);
    assert_eq!(
        enumerate_classical_complete(&chain, &Limits::default()).unwrap(),
        std::slice::from_ref(&grounded)
    );
    assert!(complete_profile_holds(&chain, &grounded));

    let cycle = af(&["A", "B"], &[("A", "B"), ("B", "A")]);
    let all = enumerate_classical_complete(&cycle, &Limits::default()).unwrap();
    assert_eq!(all.len(), 3);
    for lab in &all {
        assert!(is_classical_complete(&cycle, lab));
        assert!(complete_profile_holds(&cycle, lab));
    }
    assert!(!is_classical_complete(&cycle, &labeled(&[("A", In), ("B", Undec)])));
}
